//! Exact dense linear algebra over the rationals or a prime field.
//!
//! No floating point is used anywhere. Rational ranks go through a
//! fraction-free integer accumulator; [`rank_by_rref`] is the plain
//! Gauss-Jordan route and must agree with it.

mod echelon;
mod field;
mod matrix;

pub use echelon::{GaussEchelon, IntegerEchelon, RowEchelon};
pub(crate) use field::primitive_integer_row;
pub use field::{is_prime, Field, PrimeField, Rationals};
pub use matrix::{apply, kernel_basis, rank, rank_by_rref, rref, span_dim, span_dim_capped, DenseMatrix, Rref};
