use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::exactla::Field;
use crate::multidegree::{degrees_in_box, graded_dim_usize, MultiDegree};
use crate::points::FieldPoints;

/// `i(j)` for one axis and one complementary tuple: the first `i >= 1`
/// with `H_X(.., i - 1, ..) = H_X(.., i, ..)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub axis: usize,
    pub complement: Vec<u32>,
    pub threshold: u32,
}

/// Degrees where a minimal generator of `I_X` can live, from `H_X` alone.
///
/// `A` is the set of degrees `d` with `d_l >= i(d without l) + 1` for some
/// `l`; it is not stored, see [`GeneralDegreeBound::in_a`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralDegreeBound {
    /// `(t_1, ..., t_k)` with `t_h = |pi_h(X)|`.
    pub t_box: MultiDegree,
    pub thresholds: Vec<Threshold>,
    /// Degrees in the box with `(I_X)_d != 0`.
    pub b: BTreeSet<MultiDegree>,
    /// `B \ A`.
    pub e: BTreeSet<MultiDegree>,
    #[serde(skip)]
    lookup: BTreeMap<(usize, Vec<u32>), u32>,
}

impl GeneralDegreeBound {
    pub fn threshold(&self, axis: usize, complement: &[u32]) -> Option<u32> {
        self.lookup.get(&(axis, complement.to_vec())).copied()
    }

    /// Membership in `A`. Degrees outside the box are always in `A`.
    pub fn in_a(&self, d: &MultiDegree) -> bool {
        if !d.leq(&self.t_box) {
            return true;
        }
        (0..d.len()).any(|l| self.threshold(l, &d.complement(l)).is_some_and(|i| d.parts()[l] > i))
    }
}

/// Works for any finite set; no genericity is assumed.
pub fn general_generator_degrees<F: Field>(points: &FieldPoints<F>) -> Result<GeneralDegreeBound> {
    let shape = points.shape();
    let t_box = MultiDegree::new(points.set().projection_sizes().into_iter().map(|t| t as u32).collect());
    let mut thresholds = Vec::new();
    let mut lookup = BTreeMap::new();
    for l in 0..shape.k() {
        let line_box = t_box.with_part(l, 0);
        for base in degrees_in_box(&line_box) {
            let mut prev = points.hilbert(&base)?;
            let mut i = 1;
            loop {
                let h = points.hilbert(&base.with_part(l, i))?;
                if h == prev {
                    break;
                }
                prev = h;
                i += 1;
            }
            debug_assert!(i <= t_box.parts()[l]);
            let complement = base.complement(l);
            lookup.insert((l, complement.clone()), i);
            thresholds.push(Threshold {
                axis: l,
                complement,
                threshold: i,
            });
        }
    }
    let mut b = BTreeSet::new();
    for d in degrees_in_box(&t_box) {
        if points.hilbert(&d)? < graded_dim_usize(&d, shape)? {
            b.insert(d);
        }
    }
    let mut bound = GeneralDegreeBound {
        t_box,
        thresholds,
        b,
        e: BTreeSet::new(),
        lookup,
    };
    bound.e = bound.b.iter().filter(|d| !bound.in_a(d)).cloned().collect();
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::multidegree::{compute_degree_sets, SpaceShape};
    use crate::points::{random_generic_point_set, PointSet};

    fn shape(dims: &[u32]) -> SpaceShape {
        SpaceShape::new(dims.to_vec()).unwrap()
    }

    fn deg(parts: &[u32]) -> MultiDegree {
        MultiDegree::new(parts.to_vec())
    }

    #[test]
    fn single_point_bound_is_the_unit_cube() {
        // H_X is identically 1, so every threshold is 1 and A is everything
        // with some part >= 2. What is left is the nonzero 0/1 vectors; for
        // k = 1 that is just e_1.
        for dims in [&[1][..], &[2, 1], &[1, 3, 2]] {
            let k = dims.len();
            let set = PointSet::from_integers(
                shape(dims),
                &[dims.iter().map(|&n| (0..=n as i64).map(|c| c + 1).collect()).collect()],
            )
            .unwrap();
            let x = FieldPoints::new(Rationals, set).unwrap();
            let bound = general_generator_degrees(&x).unwrap();
            let ones = MultiDegree::new(vec![1; k]);
            assert_eq!(bound.t_box, ones);
            let cube: BTreeSet<_> = degrees_in_box(&ones).filter(|d| d.total() > 0).collect();
            assert_eq!(bound.e, cube);
            for l in 0..k {
                assert!(bound.e.contains(&MultiDegree::unit(k, l)));
            }
        }
    }

    #[test]
    fn thresholds_for_points_sharing_a_coordinate() {
        let set = PointSet::from_integers(
            shape(&[1, 1]),
            &[vec![vec![1, 4], vec![1, 0]], vec![vec![1, 4], vec![1, 1]]],
        )
        .unwrap();
        let x = FieldPoints::new(Rationals, set).unwrap();
        let bound = general_generator_degrees(&x).unwrap();
        assert_eq!(bound.t_box, deg(&[1, 2]));
        // Along axis 0, H is constant from the start.
        assert_eq!(bound.threshold(0, &[0]), Some(1));
        assert_eq!(bound.threshold(1, &[0]), Some(2));
        assert_eq!(bound.threshold(1, &[1]), Some(2));
        assert!(bound.e.contains(&deg(&[1, 0])));
        assert!(bound.e.iter().all(|d| d.leq(&bound.t_box)));
    }

    #[test]
    fn single_factor_generic_sets_stay_near_the_initial_degree() {
        for (s, n) in [(5, 2), (7, 1), (9, 2), (4, 3)] {
            let x = random_generic_point_set(&Rationals, s, &shape(&[n]), 50, 5, 100)
                .unwrap()
                .points;
            let d = compute_degree_sets(s, x.shape())
                .initial
                .into_iter()
                .next()
                .unwrap()
                .parts()[0];
            let bound = general_generator_degrees(&x).unwrap();
            for e in &bound.e {
                assert!(e.parts()[0] == d || e.parts()[0] == d + 1, "s={s} n={n} {e}");
            }
        }
    }

    #[test]
    fn e_is_inside_b_and_the_box() {
        let x = random_generic_point_set(&Rationals, 4, &shape(&[1, 2]), 50, 2, 100)
            .unwrap()
            .points;
        let bound = general_generator_degrees(&x).unwrap();
        for d in &bound.e {
            assert!(bound.b.contains(d));
            assert!(d.leq(&bound.t_box));
            assert!(x.slice_dim(d).unwrap() > 0);
        }
        assert!(bound.in_a(&bound.t_box.plus_unit(0)));
    }
}
