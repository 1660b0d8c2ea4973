use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::multidegree::{degrees_in_box, initial_degrees, MultiDegree};
use crate::points::FieldPoints;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCount {
    pub degree: MultiDegree,
    pub new_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub bound: MultiDegree,
    /// Degrees with at least one new generator, in lexicographic order.
    pub per_degree: Vec<DegreeCount>,
    pub total: u64,
}

impl BruteForceReport {
    pub fn degrees(&self) -> impl Iterator<Item = &MultiDegree> + '_ {
        self.per_degree.iter().map(|d| &d.degree)
    }
}

/// `(t_1, ..., t_k)` joined with `1 + max` of the initial degrees of `s`
/// generic points, taken per axis.
pub fn default_brute_box<F: Field>(points: &FieldPoints<F>) -> MultiDegree {
    let t: Vec<u32> = points.set().projection_sizes().into_iter().map(|t| t as u32).collect();
    let mut bound = MultiDegree::new(t);
    for i in initial_degrees(points.len(), points.shape()) {
        let bumped = MultiDegree::new(i.parts().iter().map(|p| p + 1).collect());
        bound = bound.join(&bumped);
    }
    bound
}

/// Counts minimal generators degree by degree over the box: at each `j`,
/// `dim (I_X)_j` minus the span of every `R_{e_l} (I_X)_{j - e_l}`.
///
/// No genericity is assumed. The box must contain `(t_1, ..., t_k)`, beyond
/// which no generators live.
pub fn brute_force_nu<F: Field>(points: &FieldPoints<F>, bound: &MultiDegree) -> Result<BruteForceReport> {
    points.shape().check_degree(bound)?;
    let t: Vec<u32> = points.set().projection_sizes().into_iter().map(|t| t as u32).collect();
    let t = MultiDegree::new(t);
    if !t.leq(bound) {
        return Err(Error::InvalidArgument(format!(
            "box {bound} does not contain the projection box {t}"
        )));
    }
    let degrees: Vec<MultiDegree> = degrees_in_box(bound).collect();
    let counts = degrees
        .par_iter()
        .map(|j| points.new_generators(j))
        .collect::<Result<Vec<_>>>()?;
    let per_degree: Vec<DegreeCount> = degrees
        .into_iter()
        .zip(counts)
        .filter(|(_, c)| *c > 0)
        .map(|(degree, new_generators)| DegreeCount { degree, new_generators })
        .collect();
    let total = per_degree.iter().map(|d| d.new_generators as u64).sum();
    Ok(BruteForceReport {
        bound: bound.clone(),
        per_degree,
        total,
    })
}
