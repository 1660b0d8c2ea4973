//! Three generic points in `P^1 x P^1 x P^1` need one more generator than
//! the lower bound predicts.
//!
//! After moving the first point to `[1:0]^3` the other two are
//! `([1:a_1], [1:a_2], [1:a_3])` and `([1:b_1], [1:b_2], [1:b_3])`, and the
//! three ideal slices of bidegree type `(1,1,0)` are spanned by explicit forms
//! `F_1, F_2, F_3`. Two linear relations among their products show that the
//! six products into degree `(1,1,1)` span at most a 4-dimensional space,
//! while `dim (I_X)_{(1,1,1)} = 5`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{nu, v_bound};
use crate::error::{Error, Result};
use crate::exactla::{apply, rank, DenseMatrix, Rationals};
use crate::multidegree::{MultiDegree, SpaceShape};
use crate::points::{derive_seed, random_point_set, FieldPoints, MultiPoint, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    /// Seed of the accepted draw.
    pub seed: u64,
    pub attempts: usize,
    /// Affine coordinates of the second and third point after translation.
    pub a: [String; 3],
    pub b: [String; 3],
    /// `F_1, F_2, F_3` vanish on the points and span their slices.
    pub forms_span_slices: bool,
    /// Both linear relations among the products hold exactly.
    pub identities_hold: bool,
    pub w_dim: usize,
    pub slice_dim: usize,
    pub nu: u64,
    pub v: u64,
    pub gap: i64,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.forms_span_slices && self.identities_hold && self.w_dim == 4 && self.gap == 1
    }
}

type Q = BigRational;

fn q(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

/// Samples until three certified-generic points with pairwise distinct
/// coordinates in every factor turn up, then checks the excess generator.
pub fn verify_triple_excess(seed: u64, coord_bound: u64, retry_cap: usize) -> Result<TripleReport> {
    let shape = SpaceShape::p1_power(3);
    for attempt in 0..retry_cap {
        let child = derive_seed(seed, attempt as u64);
        let set = match random_point_set(3, &shape, coord_bound, child) {
            Ok(set) => set,
            Err(Error::SamplingExhausted { .. }) => continue,
            Err(e) => return Err(e),
        };
        let Some((a, b)) = translated_coordinates(&set) else {
            continue;
        };
        let points = FieldPoints::new(Rationals, triple(&a, &b)?)?;
        if !points.is_generic_position()?.generic {
            continue;
        }
        return check_triple(points, &a, &b, child, attempt + 1);
    }
    Err(Error::SamplingExhausted {
        attempts: retry_cap,
        reason: "no generic triple in P1 x P1 x P1".into(),
    })
}

/// `(a, b)` after moving the first point to the origin of every factor, or
/// `None` if some factor has repeated or infinite coordinates.
fn translated_coordinates(set: &PointSet) -> Option<([BigInt; 3], [BigInt; 3])> {
    let affine = |p: &MultiPoint, h: usize| -> Option<BigInt> {
        let c = p.component(h);
        (c[0].is_one() && c[1].is_integer()).then(|| c[1].to_integer())
    };
    let pts = set.points();
    let mut a: [BigInt; 3] = Default::default();
    let mut b: [BigInt; 3] = Default::default();
    for h in 0..3 {
        let origin = affine(&pts[0], h)?;
        a[h] = affine(&pts[1], h)? - &origin;
        b[h] = affine(&pts[2], h)? - &origin;
        if a[h].is_zero() || b[h].is_zero() || a[h] == b[h] {
            return None;
        }
    }
    Some((a, b))
}

fn triple(a: &[BigInt; 3], b: &[BigInt; 3]) -> Result<PointSet> {
    let point = |c: &[BigInt; 3]| MultiPoint::new(c.iter().map(|v| vec![Q::one(), q(v)]).collect());
    let origin = MultiPoint::new(vec![vec![Q::one(), Q::zero()]; 3])?;
    PointSet::new(SpaceShape::p1_power(3), vec![origin, point(a)?, point(b)?])
}

/// A form in `k[x0,x1,y0,y1,z0,z1]`: terms are (exponents, coefficient).
fn form(points: &FieldPoints<Rationals>, degree: &MultiDegree, terms: &[([u32; 6], Q)]) -> Result<Vec<Q>> {
    let index = points.monomial_index(degree)?;
    let mut coeffs = vec![Q::zero(); index.len()];
    for (exps, c) in terms {
        let at = index
            .index_of(exps)
            .ok_or_else(|| Error::InvalidArgument(format!("{exps:?} is not of degree {degree}")))?;
        coeffs[at] += c;
    }
    Ok(coeffs)
}

fn combine(parts: &[(Q, &[Q])]) -> Vec<Q> {
    let mut out = vec![Q::zero(); parts[0].1.len()];
    for (c, v) in parts {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o += c * x;
        }
    }
    out
}

fn check_triple(
    points: FieldPoints<Rationals>,
    a: &[BigInt; 3],
    b: &[BigInt; 3],
    seed: u64,
    attempts: usize,
) -> Result<TripleReport> {
    let (a1, a2, a3) = (q(&a[0]), q(&a[1]), q(&a[2]));
    let (b1, b2, b3) = (q(&b[0]), q(&b[1]), q(&b[2]));
    let d110 = MultiDegree::new(vec![1, 1, 0]);
    let d101 = MultiDegree::new(vec![1, 0, 1]);
    let d011 = MultiDegree::new(vec![0, 1, 1]);
    let top = MultiDegree::new(vec![1, 1, 1]);

    // Exponent layout: [x0, x1, y0, y1, z0, z1].
    let f1 = form(
        &points,
        &d110,
        &[
            ([0, 1, 0, 1, 0, 0], &a2 * &b1 - &a1 * &b2),
            ([0, 1, 1, 0, 0, 0], &a2 * &b2 * (&a1 - &b1)),
            ([1, 0, 0, 1, 0, 0], &a1 * &b1 * (&b2 - &a2)),
        ],
    )?;
    let f2 = form(
        &points,
        &d101,
        &[
            ([0, 1, 0, 0, 0, 1], &a3 * &b1 - &a1 * &b3),
            ([0, 1, 0, 0, 1, 0], &a3 * &b3 * (&a1 - &b1)),
            ([1, 0, 0, 0, 0, 1], &a1 * &b1 * (&b3 - &a3)),
        ],
    )?;
    let f3 = form(
        &points,
        &d011,
        &[
            ([0, 0, 0, 1, 0, 1], &a2 * &b3 - &a3 * &b2),
            ([0, 0, 0, 1, 1, 0], &a3 * &b3 * (&b2 - &a2)),
            ([0, 0, 1, 0, 0, 1], &a2 * &b2 * (&a3 - &b3)),
        ],
    )?;

    let mut forms_span_slices = true;
    for (f, d) in [(&f1, &d110), (&f2, &d101), (&f3, &d011)] {
        let eval = points.evaluation_matrix(d)?;
        let vanishes = apply(&Rationals, &eval, f).iter().all(Zero::is_zero);
        let slice = points.ideal_slice(d)?;
        let mut rows: Vec<Vec<Q>> = slice.basis.row_iter().map(<[Q]>::to_vec).collect();
        rows.push(f.clone());
        let spans = slice.dim() == 1
            && f.iter().any(|c| !c.is_zero())
            && rank(&Rationals, &DenseMatrix::from_rows(f.len(), rows)?) == 1;
        forms_span_slices &= vanishes && spans;
    }

    // x_{h,m} * F in degree (1,1,1).
    let times = |f: &[Q], d: &MultiDegree, axis: usize, var: usize| points.times_variable(d, f, axis, var);
    let x0f3 = times(&f3, &d011, 0, 0)?;
    let x1f3 = times(&f3, &d011, 0, 1)?;
    let y0f2 = times(&f2, &d101, 1, 0)?;
    let y1f2 = times(&f2, &d101, 1, 1)?;
    let z0f1 = times(&f1, &d110, 2, 0)?;
    let z1f1 = times(&f1, &d110, 2, 1)?;

    // a1 b1 (a1 - b1) x0 F3
    //   = (a1 - b1)(a3 b3 z0 F1 - a2 b2 y0 F2) + (a3 b1 - a1 b3) z1 F1 - (a2 b1 - b2 a1) y1 F2
    let lhs1 = combine(&[(&a1 * &b1 * (&a1 - &b1), &x0f3)]);
    let rhs1 = combine(&[
        ((&a1 - &b1) * &a3 * &b3, &z0f1),
        (-((&a1 - &b1) * &a2 * &b2), &y0f2),
        (&a3 * &b1 - &a1 * &b3, &z1f1),
        (-(&a2 * &b1 - &b2 * &a1), &y1f2),
    ]);
    // (a1 - b1) x1 F3 = (b2 - a2) y1 F2 + (a3 - b3) z1 F1
    let lhs2 = combine(&[(&a1 - &b1, &x1f3)]);
    let rhs2 = combine(&[(&b2 - &a2, &y1f2), (&a3 - &b3, &z1f1)]);
    let identities_hold = lhs1 == rhs1 && lhs2 == rhs2;

    let axes = (0..3).collect();
    let w_dim = points.w_dim(&top, &axes)?;
    let slice_dim = points.slice_dim(&top)?;
    let report = nu(&points)?;
    let v = v_bound(3, points.shape())?;
    Ok(TripleReport {
        seed,
        attempts,
        a: a.clone().map(|v| v.to_string()),
        b: b.clone().map(|v| v.to_string()),
        forms_span_slices,
        identities_hold,
        w_dim,
        slice_dim,
        nu: report.nu,
        v,
        gap: report.nu as i64 - v as i64,
    })
}
