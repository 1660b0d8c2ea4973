use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::echelon::{GaussEchelon, IntegerEchelon, RowEchelon};
use crate::error::{Error, Result};

/// A field in which every operation is exact.
///
/// Implementors are small context values; elements carry no reference back
/// to their field.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;
    type Echelon: RowEchelon<Elem = Self::Elem>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Fails when the denominator is not invertible.
    #[allow(clippy::wrong_self_convention)]
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// A fresh incremental row-echelon accumulator over `cols` columns.
    fn echelon(&self, cols: usize) -> Self::Echelon;

    fn describe(&self) -> String;
}

/// The rationals, with canonical big-integer fractions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    type Echelon = IntegerEchelon;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn echelon(&self, cols: usize) -> IntegerEchelon {
        IntegerEchelon::new(cols)
    }

    fn describe(&self) -> String {
        "rational".into()
    }
}

/// `Z/pZ` for a prime `p < 2^63`.
///
/// Ranks over `F_p` of a reduced integer matrix never exceed the rational
/// rank, so full rank mod `p` certifies full rank over `Q`; a rank drop mod
/// `p` is inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 {
            return Err(Error::InvalidArgument(format!("modulus {p} must be below 2^63")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let r = v % BigInt::from(self.p);
        let r = if r.sign() == Sign::Minus {
            r + BigInt::from(self.p)
        } else {
            r
        };
        r.to_u64().expect("residue fits in u64")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

impl Field for PrimeField {
    type Elem = u64;
    type Echelon = GaussEchelon<PrimeField>;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }

    fn from_i64(&self, v: i64) -> u64 {
        let r = i128::from(v).rem_euclid(i128::from(self.p));
        r as u64
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let num = self.reduce_big(q.numer());
        let den = self.reduce_big(q.denom());
        let inv = self
            .inv(&den)
            .ok_or_else(|| Error::FieldConversion(format!("denominator of {q} vanishes mod {}", self.p)))?;
        Ok(self.mul(&num, &inv))
    }

    fn echelon(&self, cols: usize) -> GaussEchelon<PrimeField> {
        GaussEchelon::new(*self, cols)
    }

    fn describe(&self) -> String {
        format!("fp({})", self.p)
    }
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, b, n);
            }
            b = mul_mod(b, b, n);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &WITNESSES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Scales a rational row to a primitive integer row with the same span.
pub(crate) fn primitive_integer_row(row: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = row
        .iter()
        .filter(|q| !q.is_zero())
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = row.iter().map(|q| (q.numer() * &lcm) / q.denom()).collect();
    make_primitive(&mut ints);
    ints
}

/// Divides out the content of an integer row.
pub(crate) fn make_primitive(row: &mut [BigInt]) {
    use num_integer::Integer;
    let mut content = BigInt::zero();
    for v in row.iter().filter(|v| !v.is_zero()) {
        content = content.gcd(v);
        if content.is_one() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v /= &content;
    }
}

pub(crate) fn is_negative(v: &BigInt) -> bool {
    v.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn rational_conversion_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let q = BigRational::new(3.into(), 2.into());
        assert_eq!(f.from_rational(&q).unwrap(), 5); // 3 * 4 = 12 = 5
        let bad = BigRational::new(1.into(), 14.into());
        assert!(f.from_rational(&bad).is_err());
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn rationals_stay_canonical() {
        let q = Rationals.mul(
            &BigRational::new(6.into(), (-4).into()),
            &BigRational::new(2.into(), 3.into()),
        );
        assert_eq!(q.numer(), &BigInt::from(-1));
        assert_eq!(q.denom(), &BigInt::from(1));
    }

    proptest! {
        #[test]
        fn rational_axioms(a in -1000i64..1000, b in 1i64..1000) {
            let f = Rationals;
            let x = BigRational::new(a.into(), b.into());
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert!(f.is_zero(&f.add(&x, &f.neg(&x))));
            if let Some(inv) = f.inv(&x) {
                prop_assert_eq!(f.mul(&x, &inv), f.one());
            }
        }

        #[test]
        fn prime_field_axioms(a in 0u64..u64::MAX) {
            let f = PrimeField::new((1 << 61) - 1).unwrap();
            let x = a % f.modulus();
            prop_assert_eq!(f.add(&x, &f.neg(&x)), 0);
            prop_assert_eq!(f.sub(&x, &x), 0);
            if x != 0 {
                prop_assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), 1);
            }
        }
    }
}
