use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::check_non_degenerate;
use crate::error::{Error, Result};
use crate::multidegree::{compute_degree_sets, graded_dim, MultiDegree, SpaceShape};

fn n_of(j: &MultiDegree, shape: &SpaceShape) -> Result<BigInt> {
    Ok(BigInt::from(graded_dim(j, shape)?))
}

fn to_count(total: BigInt, what: &str) -> Result<u64> {
    total
        .to_u64()
        .ok_or_else(|| Error::Overflow(format!("{what} = {total}")))
}

/// Lower bound on the number of minimal generators of `s` generic points:
/// `sum_D (N(i) - s) + sum_DD max(0, N(j) - s - sum_{l in L_j} (n_l + 1)(N(j - e_l) - s))`.
pub fn v_bound(s: usize, shape: &SpaceShape) -> Result<u64> {
    check_non_degenerate(s, shape)?;
    let sets = compute_degree_sets(s, shape);
    let s_big = BigInt::from(s);
    let mut total = BigInt::zero();
    for i in &sets.initial {
        total += n_of(i, shape)? - &s_big;
    }
    for (j, axes) in &sets.axes {
        let mut term = n_of(j, shape)? - &s_big;
        for &l in axes {
            let below = j.minus_unit(l).expect("j - e_l is initial");
            term -= BigInt::from(shape.dim(l) + 1) * (n_of(&below, shape)? - &s_big);
        }
        if term > BigInt::zero() {
            total += term;
        }
    }
    to_count(total, "v")
}

/// Upper bound `sum_D (N(i) - s) + sum_DD (N(j) - 2 N(j - e_l1) + s)` with
/// `l1` the smallest axis in `L_j`. Any choice of `l1` gives a valid bound.
pub fn upper_bound(s: usize, shape: &SpaceShape) -> Result<u64> {
    check_non_degenerate(s, shape)?;
    let sets = compute_degree_sets(s, shape);
    let s_big = BigInt::from(s);
    let mut total = BigInt::zero();
    for i in &sets.initial {
        total += n_of(i, shape)? - &s_big;
    }
    for (j, axes) in &sets.axes {
        let l1 = *axes.first().expect("every candidate has an axis");
        let below = j.minus_unit(l1).expect("j - e_l1 is initial");
        total += n_of(j, shape)? - BigInt::from(2) * n_of(&below, shape)? + &s_big;
    }
    to_count(total, "upper bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::binomial;
    use num_traits::ToPrimitive;

    fn shape(dims: &[u32]) -> SpaceShape {
        SpaceShape::new(dims.to_vec()).unwrap()
    }

    fn c(n: u64, k: u64) -> i64 {
        binomial(n, k).to_i64().unwrap()
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_bound(3, &shape(&[1, 1, 1])).unwrap(), 12);
        assert_eq!(v_bound(5, &shape(&[2])).unwrap(), 3);
        assert_eq!(upper_bound(3, &shape(&[1, 1, 1])).unwrap(), 15);
        assert!(upper_bound(5, &shape(&[2])).unwrap() >= 3);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(matches!(v_bound(2, &shape(&[3])), Err(Error::Degenerate { .. })));
        assert!(matches!(upper_bound(3, &shape(&[1, 3])), Err(Error::Degenerate { .. })));
        assert!(v_bound(1, &shape(&[1])).is_err());
    }

    #[test]
    fn single_factor_closed_form() {
        // With d = min { i : C(n + i, n) > s }:
        // C(d + n, n) - s + max(0, C(d + 1 + n, n) - s - (n + 1)(C(d + n, n) - s)).
        for n in 1..=5u64 {
            for s in (n as usize + 1)..=40 {
                let d = (0..).find(|&i| c(n + i, n) > s as i64).unwrap();
                let si = s as i64;
                let first = c(d + n, n) - si;
                let second = (c(d + 1 + n, n) - si - (n as i64 + 1) * first).max(0);
                assert_eq!(
                    v_bound(s, &shape(&[n as u32])).unwrap() as i64,
                    first + second,
                    "s={s} n={n}"
                );
            }
        }
    }

    #[test]
    fn upper_is_at_least_v() {
        for dims in [&[1, 1][..], &[1, 2], &[2, 3], &[1, 1, 1], &[1, 2, 2], &[1, 1, 1, 1]] {
            let sh = shape(dims);
            for s in (sh.max_dim() as usize + 1)..=20 {
                assert!(upper_bound(s, &sh).unwrap() >= v_bound(s, &sh).unwrap(), "{sh} s={s}");
            }
        }
    }
}
