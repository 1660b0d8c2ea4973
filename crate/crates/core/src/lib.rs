//! Hilbert functions, generic-position certificates and minimal generator
//! counts for finite sets of points in `P^{n_1} x ... x P^{n_k}`.
//!
//! All linear algebra is exact, over the rationals or a prime field.

pub mod error;
pub mod exactla;
pub mod genanalysis;
pub mod multidegree;
pub mod points;

pub use error::{Error, Result};
pub use exactla::{Field, PrimeField, Rationals};
pub use genanalysis::{
    brute_force_nu, general_generator_degrees, nu, scan, upper_bound, v_bound, verify_triple_excess, BruteForceReport,
    GeneralDegreeBound, GeneratorReport, ScanRow, TripleReport,
};
pub use multidegree::{compute_degree_sets, graded_dim, DegreeSetReport, MultiDegree, SpaceShape};
pub use points::{
    random_generic_point_set, random_point_set, FieldPoints, GenericityCertificate, MultiPoint, PointSet,
};
