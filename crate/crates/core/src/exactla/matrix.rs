use crate::error::{Error, Result};

use super::echelon::RowEchelon;
use super::field::Field;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> DenseMatrix<E> {
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(DenseMatrix { rows, cols, entries })
    }

    /// Stacks rows of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(DenseMatrix { rows: n, cols, entries })
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![value; rows * cols],
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn empty(cols: usize) -> Self {
        DenseMatrix {
            rows: 0,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl ExactSizeIterator<Item = &[E]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Vertical concatenation; all parts must share the column count.
    pub fn vstack(cols: usize, parts: &[DenseMatrix<E>]) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for part in parts {
            if part.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: part.cols,
                });
            }
            rows += part.rows;
            entries.extend_from_slice(&part.entries);
        }
        Ok(DenseMatrix { rows, cols, entries })
    }

    pub fn map<T, G: FnMut(&E) -> T>(&self, f: G) -> DenseMatrix<T> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Exact rank, using the field's echelon accumulator.
pub fn rank<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> usize {
    span_dim_capped(field, m.cols(), m.row_iter().map(<[_]>::to_vec), m.rows().min(m.cols()))
}

/// Dimension of the span of the rows of `vectors`.
pub fn span_dim<F: Field>(field: &F, vectors: &DenseMatrix<F::Elem>) -> usize {
    rank(field, vectors)
}

/// Dimension of the span of `rows`, stopping early once it reaches `cap`.
///
/// The caller asserts that the span cannot exceed `cap`, e.g. because all
/// rows lie in a subspace of known dimension.
pub fn span_dim_capped<F, I>(field: &F, cols: usize, rows: I, cap: usize) -> usize
where
    F: Field,
    I: IntoIterator<Item = Vec<F::Elem>>,
{
    let mut ech = field.echelon(cols);
    if cap == 0 {
        return 0;
    }
    for row in rows {
        ech.insert(row);
        if ech.rank() >= cap {
            break;
        }
    }
    ech.rank()
}

/// Reduced row echelon form with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<E> {
    pub matrix: DenseMatrix<E>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination. The first nonzero entry in each column is the
/// pivot; exact arithmetic makes the choice irrelevant for the result.
pub fn rref<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> Rref<F::Elem> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F::Elem>> = m.row_iter().map(<[_]>::to_vec).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = field.inv(&a[r][c]).expect("pivot is nonzero");
        for v in a[r].iter_mut().skip(c) {
            if !field.is_zero(v) {
                *v = field.mul(v, &inv);
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !field.is_zero(p) {
                    *v = field.sub(v, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let matrix = DenseMatrix::from_rows(cols, a).expect("row lengths are preserved");
    Rref { matrix, pivots }
}

/// Rank read off the reduced row echelon form. Independent of the
/// accumulator used by [`rank`].
pub fn rank_by_rref<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> usize {
    rref(field, m).pivots.len()
}

/// Basis of `{ v : M v^T = 0 }`, one row per free column in increasing
/// order. Row `f` has a 1 in free column `f`, zeros in the other free
/// columns, and `-rref[r][f]` in the pivot column of row `r`.
pub fn kernel_basis<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> DenseMatrix<F::Elem> {
    let cols = m.cols();
    let Rref { matrix, pivots } = rref(field, m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vec<F::Elem>> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                let e = matrix.get(r, f);
                if !field.is_zero(e) {
                    v[p] = field.neg(e);
                }
            }
            v
        })
        .collect();
    DenseMatrix::from_rows(cols, basis).expect("kernel rows have the column count")
}

/// `M v^T` for a single vector.
pub fn apply<F: Field>(field: &F, m: &DenseMatrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.row_iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                if field.is_zero(a) || field.is_zero(b) {
                    acc
                } else {
                    field.add(&acc, &field.mul(a, b))
                }
            })
        })
        .collect()
}
