use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::PointSet;
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, rank, span_dim_capped, DenseMatrix, Field};
use crate::multidegree::{
    genericity_degrees, graded_dim, graded_dim_usize, BlockMonomials, MonomialIndex, MultiDegree, SpaceShape,
};
use num_traits::ToPrimitive;

/// A basis of `(I_X)_j`: rows are coefficient vectors in the canonical
/// monomial order of degree `j`.
#[derive(Debug, Clone)]
pub struct IdealSlice<E> {
    pub degree: MultiDegree,
    pub basis: DenseMatrix<E>,
}

impl<E: Clone> IdealSlice<E> {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: MultiDegree,
    pub hilbert: usize,
    pub expected: usize,
}

impl DegreeCheck {
    pub fn passed(&self) -> bool {
        self.hilbert == self.expected
    }
}

/// Result of the finite generic-position check: `H_X(j) = N(j)` on
/// `{ N(j) < s }` and `H_X(j) = s` on `min { N(j) >= s }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericityCertificate {
    pub generic: bool,
    pub checks: Vec<DegreeCheck>,
}

impl GenericityCertificate {
    pub fn first_failure(&self) -> Option<&DegreeCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    /// `Ok` when generic, otherwise the not-generic error for the first failing degree.
    pub fn require(&self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::NotGeneric {
                degree: c.degree.clone(),
                hilbert: c.hilbert,
                expected: c.expected,
            }),
        }
    }
}

/// A point set with coordinates mapped into a field, plus memo tables for
/// Hilbert values and ideal slices.
///
/// The caches sit behind mutexes, so one instance can be shared across
/// threads. Locks are never held while computing.
#[derive(Debug)]
pub struct FieldPoints<F: Field> {
    field: F,
    set: PointSet,
    /// `coords[point][block][coordinate]`
    coords: Vec<Vec<Vec<F::Elem>>>,
    blocks: Mutex<HashMap<(u32, u32), Arc<BlockMonomials>>>,
    hilbert: Mutex<HashMap<MultiDegree, usize>>,
    slices: Mutex<HashMap<MultiDegree, Arc<IdealSlice<F::Elem>>>>,
}

impl<F: Field> FieldPoints<F> {
    /// Fails if a coordinate is not representable in the field or two
    /// points coincide after reduction.
    pub fn new(field: F, set: PointSet) -> Result<Self> {
        let coords: Vec<Vec<Vec<F::Elem>>> = set
            .points()
            .iter()
            .map(|p| {
                p.components()
                    .iter()
                    .map(|c| c.iter().map(|q| field.from_rational(q)).collect())
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut seen = HashSet::new();
        for (i, p) in coords.iter().enumerate() {
            if !seen.insert(format!("{p:?}")) {
                return Err(Error::InvalidPoint(format!(
                    "point {i} coincides with another point in {}",
                    field.describe()
                )));
            }
        }
        Ok(FieldPoints {
            field,
            set,
            coords,
            blocks: Mutex::default(),
            hilbert: Mutex::default(),
            slices: Mutex::default(),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn shape(&self) -> &SpaceShape {
        self.set.shape()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    fn block(&self, axis: usize, degree: u32) -> Arc<BlockMonomials> {
        let key = (self.shape().dim(axis), degree);
        if let Some(b) = self.blocks.lock().unwrap().get(&key) {
            return Arc::clone(b);
        }
        let b = Arc::new(BlockMonomials::new(key.0, degree));
        Arc::clone(self.blocks.lock().unwrap().entry(key).or_insert(b))
    }

    pub fn monomial_index(&self, j: &MultiDegree) -> Result<MonomialIndex> {
        self.shape().check_degree(j)?;
        let blocks = j.parts().iter().enumerate().map(|(h, &d)| self.block(h, d)).collect();
        MonomialIndex::from_blocks(j, self.shape(), blocks)
    }

    /// `s x N(j)` matrix whose entry `(r, c)` is monomial `c` evaluated at point `r`.
    pub fn evaluation_matrix(&self, j: &MultiDegree) -> Result<DenseMatrix<F::Elem>> {
        let index = self.monomial_index(j)?;
        let f = &self.field;
        let mut entries = Vec::with_capacity(self.len() * index.len());
        for point in &self.coords {
            let mut row = vec![f.one()];
            for (h, coords) in point.iter().enumerate() {
                let values: Vec<F::Elem> = index
                    .block(h)
                    .exponents()
                    .iter()
                    .map(|e| monomial_value(f, coords, e))
                    .collect();
                row = row
                    .iter()
                    .flat_map(|a| values.iter().map(move |b| f.mul(a, b)))
                    .collect();
            }
            entries.extend(row);
        }
        DenseMatrix::new(self.len(), index.len(), entries)
    }

    /// `H_X(j)`, the rank of the evaluation matrix.
    pub fn hilbert(&self, j: &MultiDegree) -> Result<usize> {
        if let Some(&h) = self.hilbert.lock().unwrap().get(j) {
            return Ok(h);
        }
        let h = rank(&self.field, &self.evaluation_matrix(j)?);
        self.hilbert.lock().unwrap().insert(j.clone(), h);
        Ok(h)
    }

    /// `dim (I_X)_j = N(j) - H_X(j)`, without building a basis.
    pub fn slice_dim(&self, j: &MultiDegree) -> Result<usize> {
        Ok(graded_dim_usize(j, self.shape())? - self.hilbert(j)?)
    }

    pub fn ideal_slice(&self, j: &MultiDegree) -> Result<Arc<IdealSlice<F::Elem>>> {
        if let Some(s) = self.slices.lock().unwrap().get(j) {
            return Ok(Arc::clone(s));
        }
        let eval = self.evaluation_matrix(j)?;
        let basis = kernel_basis(&self.field, &eval);
        let n = eval.cols();
        self.hilbert.lock().unwrap().insert(j.clone(), n - basis.rows());
        let slice = Arc::new(IdealSlice {
            degree: j.clone(),
            basis,
        });
        Ok(Arc::clone(
            self.slices.lock().unwrap().entry(j.clone()).or_insert(slice),
        ))
    }

    /// Coefficient vectors of `x_{axis,m} G` for every variable of the block
    /// and every basis row `G`, in the monomial order of `degree + e_axis`.
    /// Rows are grouped by basis row, variables innermost.
    pub fn multiply_slice(&self, slice: &IdealSlice<F::Elem>, axis: usize) -> Result<DenseMatrix<F::Elem>> {
        let rows = self.multiplied_rows(slice, axis)?;
        let target = slice.degree.plus_unit(axis);
        DenseMatrix::from_rows(graded_dim_usize(&target, self.shape())?, rows)
    }

    fn multiplied_rows(&self, slice: &IdealSlice<F::Elem>, axis: usize) -> Result<Vec<Vec<F::Elem>>> {
        if axis >= self.shape().k() {
            return Err(Error::InvalidArgument(format!(
                "axis {axis} out of range for {} factors",
                self.shape().k()
            )));
        }
        if slice.dim() == 0 {
            return Ok(Vec::new());
        }
        let source = self.monomial_index(&slice.degree)?;
        let target = self.monomial_index(&slice.degree.plus_unit(axis))?;
        let vars = self.shape().dim(axis) as usize + 1;
        let maps: Vec<Vec<usize>> = (0..vars).map(|m| source.shift_map(axis, m, &target)).collect();
        let f = &self.field;
        let mut out = Vec::with_capacity(slice.dim() * vars);
        for g in slice.basis.row_iter() {
            for map in &maps {
                let mut row = vec![f.zero(); target.len()];
                for (c, v) in g.iter().enumerate() {
                    if !f.is_zero(v) {
                        row[map[c]] = v.clone();
                    }
                }
                out.push(row);
            }
        }
        Ok(out)
    }

    /// Coefficients of `x_{axis,var} * g` for a form `g` of the given degree.
    pub fn times_variable(
        &self,
        degree: &MultiDegree,
        form: &[F::Elem],
        axis: usize,
        var: usize,
    ) -> Result<Vec<F::Elem>> {
        let source = self.monomial_index(degree)?;
        if form.len() != source.len() {
            return Err(Error::DimensionMismatch {
                expected: source.len(),
                got: form.len(),
            });
        }
        if axis >= self.shape().k() || var > self.shape().dim(axis) as usize {
            return Err(Error::InvalidArgument(format!(
                "no variable x_{{{axis},{var}}} in shape {}",
                self.shape()
            )));
        }
        let target = self.monomial_index(&degree.plus_unit(axis))?;
        let map = source.shift_map(axis, var, &target);
        let mut out = vec![self.field.zero(); target.len()];
        for (c, v) in form.iter().enumerate() {
            out[map[c]] = v.clone();
        }
        Ok(out)
    }

    /// `dim (R_{e_l} (I_X)_{j - e_l})`.
    pub fn multiplied_dim(&self, i: &MultiDegree, axis: usize) -> Result<usize> {
        let slice = self.ideal_slice(i)?;
        let target = i.plus_unit(axis);
        let cols = graded_dim_usize(&target, self.shape())?;
        let cap = self.slice_dim(&target)?;
        let rows = self.multiplied_rows(&slice, axis)?;
        Ok(span_dim_capped(&self.field, cols, rows, cap))
    }

    /// `dim W_j` with `W_j = sum_{l in axes} R_{e_l} (I_X)_{j - e_l}`.
    pub fn w_dim(&self, j: &MultiDegree, axes: &BTreeSet<usize>) -> Result<usize> {
        self.shape().check_degree(j)?;
        let mut rows = Vec::new();
        for &l in axes {
            let below = j
                .minus_unit(l)
                .ok_or_else(|| Error::InvalidArgument(format!("{j} - e_{l} has a negative part")))?;
            rows.extend(self.multiplied_rows(&*self.ideal_slice(&below)?, l)?);
        }
        let cols = graded_dim_usize(j, self.shape())?;
        let cap = self.slice_dim(j)?;
        Ok(span_dim_capped(&self.field, cols, rows, cap))
    }

    /// Minimal generators of degree `j`: `dim (I_X)_j` minus the dimension of
    /// everything coming from lower degrees. No genericity assumption.
    pub fn new_generators(&self, j: &MultiDegree) -> Result<usize> {
        let dim = self.slice_dim(j)?;
        if dim == 0 {
            return Ok(0);
        }
        let axes: BTreeSet<usize> = (0..j.len()).filter(|&l| j.parts()[l] > 0).collect();
        Ok(dim - self.w_dim(j, &axes)?)
    }

    /// Checks `H_X` against `min { N(j), s }` on the finite certifying set.
    pub fn is_generic_position(&self) -> Result<GenericityCertificate> {
        let s = self.len();
        let (below, frontier) = genericity_degrees(s, self.shape());
        let mut checks = Vec::with_capacity(below.len() + frontier.len());
        for j in below {
            let expected = graded_dim(&j, self.shape())?.to_usize().expect("below s, so it fits");
            checks.push(DegreeCheck {
                hilbert: self.hilbert(&j)?,
                degree: j,
                expected,
            });
        }
        for j in frontier {
            checks.push(DegreeCheck {
                hilbert: self.hilbert(&j)?,
                degree: j,
                expected: s,
            });
        }
        let generic = checks.iter().all(DegreeCheck::passed);
        Ok(GenericityCertificate { generic, checks })
    }
}

fn monomial_value<F: Field>(f: &F, coords: &[F::Elem], exps: &[u32]) -> F::Elem {
    let mut acc = f.one();
    for (c, &e) in coords.iter().zip(exps) {
        for _ in 0..e {
            acc = f.mul(&acc, c);
        }
    }
    acc
}
