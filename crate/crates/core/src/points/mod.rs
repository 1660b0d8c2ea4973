//! Finite point sets in `P^{n_1} x ... x P^{n_k}` and everything computed
//! from their evaluation matrices: Hilbert functions, ideal slices, products
//! of slices with linear forms, and generic-position certificates.

mod engine;
mod io;
mod sampling;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multidegree::SpaceShape;

pub use engine::{DegreeCheck, FieldPoints, GenericityCertificate, IdealSlice};
pub use io::{load_points, read_points, save_points, write_points, PointFile};
pub use sampling::{derive_seed, random_generic_point_set, random_point_set, GenericSample};

/// One point of a product of projective spaces, normalized so that the first
/// nonzero coordinate of every component is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoint {
    components: Vec<Vec<BigRational>>,
}

impl MultiPoint {
    pub fn new(components: Vec<Vec<BigRational>>) -> Result<Self> {
        let components = components
            .into_iter()
            .enumerate()
            .map(|(h, c)| {
                normalize(c).ok_or_else(|| Error::InvalidPoint(format!("component {h} has only zero coordinates")))
            })
            .collect::<Result<Vec<_>>>()?;
        if components.is_empty() {
            return Err(Error::InvalidPoint("a point needs at least one component".into()));
        }
        Ok(MultiPoint { components })
    }

    pub fn from_integers(components: &[&[i64]]) -> Result<Self> {
        Self::new(
            components
                .iter()
                .map(|c| c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn components(&self) -> &[Vec<BigRational>] {
        &self.components
    }

    pub fn component(&self, h: usize) -> &[BigRational] {
        &self.components[h]
    }

    /// Each component as a primitive integer vector with positive leading entry.
    pub fn integer_components(&self) -> Vec<Vec<BigInt>> {
        self.components
            .iter()
            .map(|c| crate::exactla::primitive_integer_row(c))
            .collect()
    }
}

impl fmt::Debug for MultiPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let coords: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("[{}]", coords.join(":"))
            })
            .collect();
        f.write_str(&parts.join("x"))
    }
}

fn normalize(mut coords: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let lead = coords.iter().find(|c| !c.is_zero())?.clone();
    if !lead.is_one() {
        for c in coords.iter_mut() {
            *c /= &lead;
        }
    }
    Some(coords)
}

/// `s` distinct points of a fixed product of projective spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    shape: SpaceShape,
    points: Vec<MultiPoint>,
}

impl PointSet {
    pub fn new(shape: SpaceShape, points: Vec<MultiPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument("a point set needs at least one point".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.components.len() != shape.k() {
                return Err(Error::InvalidPoint(format!(
                    "point {i} has {} components, shape has {}",
                    p.components.len(),
                    shape.k()
                )));
            }
            for (h, c) in p.components.iter().enumerate() {
                let want = shape.dim(h) as usize + 1;
                if c.len() != want {
                    return Err(Error::InvalidPoint(format!(
                        "point {i} component {h} has {} coordinates, expected {want}",
                        c.len()
                    )));
                }
            }
        }
        let mut seen = HashSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::InvalidPoint(format!("point {i} is repeated")));
            }
        }
        Ok(PointSet { shape, points })
    }

    pub fn from_integers(shape: SpaceShape, points: &[Vec<Vec<i64>>]) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| {
                let comps: Vec<&[i64]> = p.iter().map(Vec::as_slice).collect();
                MultiPoint::from_integers(&comps)
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(shape, points)
    }

    pub fn shape(&self) -> &SpaceShape {
        &self.shape
    }

    pub fn points(&self) -> &[MultiPoint] {
        &self.points
    }

    /// Number of points `s`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `t_h = |pi_h(X)|` for every axis.
    pub fn projection_sizes(&self) -> Vec<usize> {
        (0..self.shape.k())
            .map(|h| {
                self.points
                    .iter()
                    .map(|p| &p.components[h])
                    .collect::<HashSet<_>>()
                    .len()
            })
            .collect()
    }

    /// The image under projection onto the given axes, in the given order.
    /// Fails if two points collide.
    pub fn project(&self, axes: &[usize]) -> Result<PointSet> {
        let shape = SpaceShape::new(axes.iter().map(|&h| self.shape.dim(h)).collect())?;
        let points = self
            .points
            .iter()
            .map(|p| MultiPoint {
                components: axes.iter().map(|&h| p.components[h].clone()).collect(),
            })
            .collect();
        PointSet::new(shape, points)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointSet")
            .field("shape", &self.shape)
            .field("points", &self.points)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(dims: &[u32]) -> SpaceShape {
        SpaceShape::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn normalization_makes_projective_equality_structural() {
        let a = MultiPoint::from_integers(&[&[2, 4], &[0, 3]]).unwrap();
        let b = MultiPoint::from_integers(&[&[1, 2], &[0, -1]]).unwrap();
        assert_eq!(a, b);
        assert!(MultiPoint::from_integers(&[&[0, 0]]).is_err());
        assert_eq!(
            a.integer_components(),
            vec![
                vec![BigInt::from(1), BigInt::from(2)],
                vec![BigInt::from(0), BigInt::from(1)]
            ]
        );
    }

    #[test]
    fn point_sets_reject_duplicates_and_bad_lengths() {
        let sh = shape(&[1, 1]);
        let dup = PointSet::from_integers(
            sh.clone(),
            &[vec![vec![1, 1], vec![1, 0]], vec![vec![2, 2], vec![3, 0]]],
        );
        assert!(matches!(dup, Err(Error::InvalidPoint(_))));
        let bad = PointSet::from_integers(sh, &[vec![vec![1, 1, 1], vec![1, 0]]]);
        assert!(matches!(bad, Err(Error::InvalidPoint(_))));
    }

    #[test]
    fn projection_sizes_examples() {
        let sh = shape(&[1, 1, 1]);
        let (a, b) = ([2, 3, 5], [7, 11, 13]);
        let x = PointSet::from_integers(
            sh.clone(),
            &[
                vec![vec![1, 0], vec![1, 0], vec![1, 0]],
                vec![vec![1, a[0]], vec![1, a[1]], vec![1, a[2]]],
                vec![vec![1, b[0]], vec![1, b[1]], vec![1, b[2]]],
            ],
        )
        .unwrap();
        assert_eq!(x.projection_sizes(), vec![3, 3, 3]);
        let shared = PointSet::from_integers(
            sh,
            &[
                vec![vec![1, 4], vec![1, 0], vec![1, 0]],
                vec![vec![1, 4], vec![1, 1], vec![1, 2]],
            ],
        )
        .unwrap();
        assert_eq!(shared.projection_sizes(), vec![1, 2, 2]);
        assert!(shared.project(&[0]).is_err());
        assert_eq!(shared.project(&[2, 1]).unwrap().shape(), &shape(&[1, 1]));
    }
}
