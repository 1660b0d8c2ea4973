//! Incremental row-echelon accumulators.
//!
//! Rows are inserted one at a time and reduced against the stored basis,
//! which is kept sorted by pivot column. A row that reduces to zero is
//! dependent and discarded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{is_negative, make_primitive, primitive_integer_row, Field};

pub trait RowEchelon {
    type Elem;

    /// Inserts a row; returns whether it enlarged the span.
    fn insert(&mut self, row: Vec<Self::Elem>) -> bool;

    fn rank(&self) -> usize;
}

fn insertion_point<T>(rows: &[(usize, T)], pivot: usize) -> usize {
    rows.partition_point(|(p, _)| *p < pivot)
}

/// Gaussian elimination with monic pivots over any exact field.
#[derive(Debug, Clone)]
pub struct GaussEchelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> GaussEchelon<F> {
    pub fn new(field: F, cols: usize) -> Self {
        GaussEchelon {
            field,
            cols,
            rows: Vec::new(),
        }
    }
}

impl<F: Field> RowEchelon for GaussEchelon<F> {
    type Elem = F::Elem;

    fn insert(&mut self, mut row: Vec<F::Elem>) -> bool {
        assert_eq!(row.len(), self.cols, "row length does not match column count");
        let f = &self.field;
        for (pivot, basis) in &self.rows {
            if f.is_zero(&row[*pivot]) {
                continue;
            }
            let factor = row[*pivot].clone();
            for c in *pivot..self.cols {
                if !f.is_zero(&basis[c]) {
                    row[c] = f.sub(&row[c], &f.mul(&factor, &basis[c]));
                }
            }
        }
        let Some(pivot) = row.iter().position(|v| !f.is_zero(v)) else {
            return false;
        };
        let inv = f.inv(&row[pivot]).expect("pivot is nonzero");
        for v in row.iter_mut().skip(pivot) {
            if !f.is_zero(v) {
                *v = f.mul(v, &inv);
            }
        }
        let at = insertion_point(&self.rows, pivot);
        self.rows.insert(at, (pivot, row));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Fraction-free elimination for rational rows.
///
/// Each row is scaled to a primitive integer vector; reduction uses
/// `r <- (b_c / g) r - (r_c / g) b` followed by content removal, so entries
/// stay integral and small. Produces the same ranks as [`GaussEchelon`].
#[derive(Debug, Clone)]
pub struct IntegerEchelon {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerEchelon {
    pub fn new(cols: usize) -> Self {
        IntegerEchelon { cols, rows: Vec::new() }
    }

    pub fn insert_integer(&mut self, mut row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.cols, "row length does not match column count");
        for (pivot, basis) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let g = row[*pivot].gcd(&basis[*pivot]);
            let scale_row = &basis[*pivot] / &g;
            let scale_basis = &row[*pivot] / &g;
            if !scale_row.is_one() {
                for v in row.iter_mut().filter(|v| !v.is_zero()) {
                    *v *= &scale_row;
                }
            }
            for c in *pivot..self.cols {
                if !basis[c].is_zero() {
                    row[c] -= &scale_basis * &basis[c];
                }
            }
            make_primitive(&mut row);
        }
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        if is_negative(&row[pivot]) {
            for v in row.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
        let at = insertion_point(&self.rows, pivot);
        self.rows.insert(at, (pivot, row));
        true
    }
}

impl RowEchelon for IntegerEchelon {
    type Elem = BigRational;

    fn insert(&mut self, row: Vec<BigRational>) -> bool {
        self.insert_integer(primitive_integer_row(&row))
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}
