use thiserror::Error;

use crate::multidegree::MultiDegree;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} parts, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid space shape: {0}")]
    InvalidShape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("degenerate input: s = {s} must exceed max(n_1, ..., n_k) = {max_dim} and be at least 2")]
    Degenerate { s: usize, max_dim: u32 },

    #[error("point set is not in generic position: H_X({degree}) = {hilbert}, expected {expected}")]
    NotGeneric {
        degree: MultiDegree,
        hilbert: usize,
        expected: usize,
    },

    #[error("sampling failed after {attempts} attempts: {reason}")]
    SamplingExhausted { attempts: usize, reason: String },

    #[error("graded piece of degree {0} is too large to materialize")]
    TooLarge(MultiDegree),

    #[error("count does not fit in 64 bits: {0}")]
    Overflow(String),

    #[error("value cannot be represented in the field: {0}")]
    FieldConversion(String),

    #[error("malformed point file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
