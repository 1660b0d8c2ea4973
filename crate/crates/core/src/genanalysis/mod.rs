//! Counting minimal generators of `I_X`.
//!
//! For a certified-generic, non-degenerate set the count is read off two
//! finite degree sets: every basis element in an initial degree is a
//! generator, and in each candidate degree the new generators are whatever
//! the products from the initial degrees below fail to span. Brute force
//! over a box is provided separately as an oracle and for arbitrary sets.

mod bounds;
mod brute;
mod general;
mod scan;
mod triple;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::multidegree::{compute_degree_sets, MultiDegree, SpaceShape};
use crate::points::{FieldPoints, GenericityCertificate};

pub use bounds::{upper_bound, v_bound};
pub use brute::{brute_force_nu, default_brute_box, BruteForceReport, DegreeCount};
pub use general::{general_generator_degrees, GeneralDegreeBound, Threshold};
pub use scan::{cell_seed, scan, write_scan_csv, ScanCell, ScanOptions, ScanRow, SCAN_HEADER};
pub use triple::{verify_triple_excess, TripleReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeGenerators {
    pub degree: MultiDegree,
    /// `dim (I_X)_j`.
    pub slice_dim: usize,
    /// `dim W_j`; absent for initial degrees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_dim: Option<usize>,
    pub new_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorReport {
    pub s: usize,
    pub shape: SpaceShape,
    pub field: String,
    pub generic: GenericityCertificate,
    pub per_degree: Vec<DegreeGenerators>,
    pub nu: u64,
    pub v: u64,
    pub upper: u64,
}

impl GeneratorReport {
    /// `nu - v`.
    pub fn gap(&self) -> i64 {
        self.nu as i64 - self.v as i64
    }

    pub fn at(&self, j: &MultiDegree) -> Option<&DegreeGenerators> {
        self.per_degree.iter().find(|d| &d.degree == j)
    }
}

pub(crate) fn check_non_degenerate(s: usize, shape: &SpaceShape) -> Result<()> {
    if s < 2 || !shape.is_non_degenerate(s) {
        return Err(Error::Degenerate {
            s,
            max_dim: shape.max_dim(),
        });
    }
    Ok(())
}

/// Minimal number of generators of `I_X` for a non-degenerate set in
/// generic position.
///
/// Refuses sets that fail the generic-position certificate instead of
/// falling back to [`brute_force_nu`].
pub fn nu<F: Field>(points: &FieldPoints<F>) -> Result<GeneratorReport> {
    let s = points.len();
    let shape = points.shape().clone();
    check_non_degenerate(s, &shape)?;
    let generic = points.is_generic_position()?;
    generic.require()?;

    let sets = compute_degree_sets(s, &shape);
    let mut per_degree = Vec::with_capacity(sets.initial.len() + sets.candidates.len());
    for i in &sets.initial {
        let slice_dim = points.slice_dim(i)?;
        per_degree.push(DegreeGenerators {
            degree: i.clone(),
            slice_dim,
            w_dim: None,
            new_generators: slice_dim,
        });
    }
    for j in &sets.candidates {
        let slice_dim = points.slice_dim(j)?;
        let axes = sets.axes_of(j).expect("every candidate has axes");
        let w = points.w_dim(j, axes)?;
        per_degree.push(DegreeGenerators {
            degree: j.clone(),
            slice_dim,
            w_dim: Some(w),
            new_generators: slice_dim - w,
        });
    }
    let nu = per_degree.iter().map(|d| d.new_generators as u64).sum();
    Ok(GeneratorReport {
        s,
        field: points.field().describe(),
        v: v_bound(s, &shape)?,
        upper: upper_bound(s, &shape)?,
        shape,
        generic,
        per_degree,
        nu,
    })
}
