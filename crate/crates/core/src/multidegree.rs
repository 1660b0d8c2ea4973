//! Combinatorics on `N^k`: multidegrees, graded dimensions `N(j)`, monomial
//! enumeration in a fixed canonical order, minimal elements of upward-closed
//! sets, and the degree sets that drive generator counting.
//!
//! Axes (blocks) are indexed from 0 throughout the crate.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `N^k`.
///
/// `Ord` is the lexicographic order, used only to make sets and reports
/// deterministic. The partial order of the grading is [`MultiDegree::leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "a multidegree needs at least one part");
        MultiDegree(parts)
    }

    pub fn zero(k: usize) -> Self {
        MultiDegree::new(vec![0; k])
    }

    /// The standard basis vector `e_axis`.
    pub fn unit(k: usize, axis: usize) -> Self {
        let mut parts = vec![0; k];
        parts[axis] = 1;
        MultiDegree::new(parts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// Componentwise `self <= other`. Degrees of different length are incomparable.
    pub fn leq(&self, other: &MultiDegree) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn comparable(&self, other: &MultiDegree) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn plus_unit(&self, axis: usize) -> MultiDegree {
        let mut parts = self.0.clone();
        parts[axis] += 1;
        MultiDegree(parts)
    }

    /// `self - e_axis`, or `None` when that has a negative part.
    pub fn minus_unit(&self, axis: usize) -> Option<MultiDegree> {
        let mut parts = self.0.clone();
        parts[axis] = parts[axis].checked_sub(1)?;
        Some(MultiDegree(parts))
    }

    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), other.len());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &MultiDegree) -> MultiDegree {
        assert_eq!(self.len(), other.len());
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Replaces one part.
    pub fn with_part(&self, axis: usize, value: u32) -> MultiDegree {
        let mut parts = self.0.clone();
        parts[axis] = value;
        MultiDegree(parts)
    }

    /// Drops the part at `axis`.
    pub fn complement(&self, axis: usize) -> Vec<u32> {
        let mut parts = self.0.clone();
        parts.remove(axis);
        parts
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_parts(&self.0))
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MultiDegree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list(s)?;
        if parts.is_empty() {
            return Err(Error::InvalidArgument(format!("empty degree {s:?}")));
        }
        Ok(MultiDegree(parts))
    }
}

impl From<Vec<u32>> for MultiDegree {
    fn from(parts: Vec<u32>) -> Self {
        MultiDegree::new(parts)
    }
}

/// The dimensions `(n_1, ..., n_k)` of `P^{n_1} x ... x P^{n_k}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct SpaceShape(Vec<u32>);

impl SpaceShape {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidShape("at least one factor is required".into()));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "every factor must have dimension >= 1, got {}",
                join_parts(&dims)
            )));
        }
        Ok(SpaceShape(dims))
    }

    /// `(P^1)^k`.
    pub fn p1_power(k: usize) -> Self {
        SpaceShape(vec![1; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn dims(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    pub fn max_dim(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of variables `sum (n_h + 1)`.
    pub fn num_vars(&self) -> usize {
        self.0.iter().map(|&n| n as usize + 1).sum()
    }

    /// Non-degenerate means `s > max n_h`.
    pub fn is_non_degenerate(&self, s: usize) -> bool {
        s > self.max_dim() as usize
    }

    pub fn check_degree(&self, j: &MultiDegree) -> Result<()> {
        if j.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: j.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SpaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(&self.0))
    }
}

impl fmt::Debug for SpaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpaceShape({self})")
    }
}

impl FromStr for SpaceShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceShape::new(parse_list(s)?)
    }
}

impl TryFrom<Vec<u32>> for SpaceShape {
    type Error = Error;

    fn try_from(dims: Vec<u32>) -> Result<Self> {
        SpaceShape::new(dims)
    }
}

impl From<SpaceShape> for Vec<u32> {
    fn from(shape: SpaceShape) -> Self {
        shape.0
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| Error::InvalidArgument(format!("bad integer {p:?} in {s:?}: {e}")))
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `N(j) = prod_h C(n_h + j_h, j_h)`, the dimension of `R_j`.
pub fn graded_dim(j: &MultiDegree, shape: &SpaceShape) -> Result<BigUint> {
    shape.check_degree(j)?;
    Ok(j.parts()
        .iter()
        .zip(shape.dims())
        .map(|(&d, &n)| binomial(u64::from(n) + u64::from(d), u64::from(d)))
        .product())
}

/// [`graded_dim`] as a machine integer, for sizing matrices.
pub fn graded_dim_usize(j: &MultiDegree, shape: &SpaceShape) -> Result<usize> {
    graded_dim(j, shape)?
        .to_usize()
        .ok_or_else(|| Error::TooLarge(j.clone()))
}

fn exceeds(j: &MultiDegree, shape: &SpaceShape, s: usize) -> bool {
    graded_dim(j, shape).expect("degree length checked by caller") > BigUint::from(s)
}

fn at_least(j: &MultiDegree, shape: &SpaceShape, s: usize) -> bool {
    graded_dim(j, shape).expect("degree length checked by caller") >= BigUint::from(s)
}

/// Grevlex comparison of two exponent vectors of equal total degree:
/// `a > b` iff the last nonzero entry of `a - b` is negative.
fn grevlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// All monomials of degree `d` in the `n + 1` variables of one block,
/// largest first in grevlex.
pub fn block_monomials(n: u32, d: u32) -> Vec<Vec<u32>> {
    fn fill(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = rest;
            out.push(cur.clone());
            return;
        }
        for e in (0..=rest).rev() {
            cur[pos] = e;
            fill(rest - e, pos + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n as usize + 1];
    fill(d, 0, &mut cur, &mut out);
    out.sort_by(|a, b| grevlex_cmp(b, a));
    out
}

/// The monomials of one block in one degree, with a reverse lookup table.
#[derive(Debug)]
pub struct BlockMonomials {
    n: u32,
    degree: u32,
    exps: Vec<Vec<u32>>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl BlockMonomials {
    pub fn new(n: u32, degree: u32) -> Self {
        let exps = block_monomials(n, degree);
        let lookup = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        BlockMonomials {
            n,
            degree,
            exps,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exps
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.lookup.get(exps).copied()
    }

    /// For each monomial here, the index of `x_var * monomial` in `next`,
    /// which must be the same block in degree one higher.
    pub fn times_var(&self, var: usize, next: &BlockMonomials) -> Vec<usize> {
        assert_eq!(next.degree, self.degree + 1);
        assert_eq!(next.n, self.n);
        self.exps
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e[var] += 1;
                next.index_of(&e).expect("shifted monomial has the next degree")
            })
            .collect()
    }
}

/// Canonical indexing of the monomial basis of `R_j`.
///
/// Blocks are concatenated in order and compared lexicographically, so the
/// index is a mixed-radix number with block 0 most significant.
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    degree: MultiDegree,
    blocks: Vec<Arc<BlockMonomials>>,
    strides: Vec<usize>,
    len: usize,
}

impl MonomialIndex {
    pub fn new(degree: &MultiDegree, shape: &SpaceShape) -> Result<Self> {
        let blocks = degree
            .parts()
            .iter()
            .zip(shape.dims())
            .map(|(&d, &n)| Arc::new(BlockMonomials::new(n, d)))
            .collect();
        Self::from_blocks(degree, shape, blocks)
    }

    /// Builds an index from already enumerated block monomials.
    pub fn from_blocks(degree: &MultiDegree, shape: &SpaceShape, blocks: Vec<Arc<BlockMonomials>>) -> Result<Self> {
        shape.check_degree(degree)?;
        let len = graded_dim_usize(degree, shape)?;
        let mut strides = vec![1; blocks.len()];
        for h in (0..blocks.len().saturating_sub(1)).rev() {
            strides[h] = strides[h + 1] * blocks[h + 1].len();
        }
        Ok(MonomialIndex {
            degree: degree.clone(),
            blocks,
            strides,
            len,
        })
    }

    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn block(&self, h: usize) -> &BlockMonomials {
        &self.blocks[h]
    }

    pub fn stride(&self, h: usize) -> usize {
        self.strides[h]
    }

    /// Splits a monomial index into its per-block indices.
    pub fn block_indices(&self, mut idx: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&stride| {
                let b = idx / stride;
                idx %= stride;
                b
            })
            .collect()
    }

    /// Concatenated exponent tuple of the monomial at `idx`.
    pub fn exponents(&self, idx: usize) -> Vec<u32> {
        self.block_indices(idx)
            .into_iter()
            .zip(&self.blocks)
            .flat_map(|(b, block)| block.exps[b].iter().copied())
            .collect()
    }

    /// Inverse of [`MonomialIndex::exponents`].
    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        let mut offset = 0;
        let mut idx = 0;
        for (h, block) in self.blocks.iter().enumerate() {
            let width = block.n as usize + 1;
            let part = exps.get(offset..offset + width)?;
            idx += block.index_of(part)? * self.strides[h];
            offset += width;
        }
        (offset == exps.len()).then_some(idx)
    }

    /// Column map for multiplication by `x_{axis,var}` into `target`, which
    /// must index degree `self.degree + e_axis`.
    pub fn shift_map(&self, axis: usize, var: usize, target: &MonomialIndex) -> Vec<usize> {
        let block_map = self.blocks[axis].times_var(var, &target.blocks[axis]);
        (0..self.len)
            .map(|idx| {
                self.block_indices(idx)
                    .into_iter()
                    .enumerate()
                    .map(|(h, b)| {
                        let b = if h == axis { block_map[b] } else { b };
                        b * target.strides[h]
                    })
                    .sum()
            })
            .collect()
    }
}

/// All exponent tuples of degree `j` in canonical order.
pub fn monomials_of_degree(j: &MultiDegree, shape: &SpaceShape) -> Result<Vec<Vec<u32>>> {
    let index = MonomialIndex::new(j, shape)?;
    Ok((0..index.len()).map(|i| index.exponents(i)).collect())
}

/// Every degree `<= bound`, in lexicographic order (so `j - e_l` always
/// precedes `j`).
pub fn degrees_in_box(bound: &MultiDegree) -> impl Iterator<Item = MultiDegree> + '_ {
    let k = bound.len();
    let mut next = Some(vec![0u32; k]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        for h in (0..k).rev() {
            if succ[h] < bound.parts()[h] {
                succ[h] += 1;
                next = Some(succ);
                break;
            }
            succ[h] = 0;
        }
        Some(MultiDegree(cur))
    })
}

/// Minimal elements of `{ j <= bound : pred(j) }` for an upward-closed `pred`.
///
/// Each degree in the box is evaluated at most once.
pub fn minimal_elements<P>(bound: &MultiDegree, mut pred: P) -> BTreeSet<MultiDegree>
where
    P: FnMut(&MultiDegree) -> bool,
{
    let mut memo: HashMap<MultiDegree, bool> = HashMap::new();
    let mut out = BTreeSet::new();
    for j in degrees_in_box(bound) {
        let holds = pred(&j);
        memo.insert(j.clone(), holds);
        if !holds {
            continue;
        }
        let minimal = (0..j.len()).filter_map(|l| j.minus_unit(l)).all(|below| !memo[&below]);
        if minimal {
            out.insert(j);
        }
    }
    out
}

/// Smallest `d` with `C(n + d, d) > s`.
fn first_exceeding(n: u32, s: usize) -> u32 {
    (0..)
        .find(|&d| binomial(u64::from(n + d), u64::from(d)) > BigUint::from(s))
        .expect("binomials grow without bound")
}

/// Smallest `d` with `C(n + d, d) >= s`.
fn first_reaching(n: u32, s: usize) -> u32 {
    (0..)
        .find(|&d| binomial(u64::from(n + d), u64::from(d)) >= BigUint::from(s))
        .expect("binomials grow without bound")
}

/// `min { j : N(j) > s }`, the degrees where a generic ideal first becomes nonzero.
pub fn initial_degrees(s: usize, shape: &SpaceShape) -> BTreeSet<MultiDegree> {
    let bound = MultiDegree(shape.dims().iter().map(|&n| first_exceeding(n, s)).collect());
    minimal_elements(&bound, |j| exceeds(j, shape, s))
}

/// The finite degree sets that certify a maximal Hilbert function:
/// `D_1 = { j : N(j) < s }` and `D_2 = min { j : N(j) >= s }`.
pub fn genericity_degrees(s: usize, shape: &SpaceShape) -> (Vec<MultiDegree>, Vec<MultiDegree>) {
    let bound = MultiDegree(shape.dims().iter().map(|&n| first_reaching(n, s)).collect());
    let below: Vec<_> = degrees_in_box(&bound).filter(|j| !at_least(j, shape, s)).collect();
    let frontier = minimal_elements(&bound, |j| at_least(j, shape, s))
        .into_iter()
        .collect();
    (below, frontier)
}

/// The degree sets attached to `s` generic points in a given space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSetReport {
    /// `min { j : N(j) > s }`.
    pub initial: BTreeSet<MultiDegree>,
    /// Degrees of `D + e_l` that survive the two-step exclusion.
    pub candidates: BTreeSet<MultiDegree>,
    /// For each candidate, the axes `l` with `j - e_l` initial.
    #[serde(serialize_with = "serialize_axes")]
    pub axes: BTreeMap<MultiDegree, BTreeSet<usize>>,
    /// `D` together with every `D + e_l`.
    pub possible: BTreeSet<MultiDegree>,
}

fn serialize_axes<S>(axes: &BTreeMap<MultiDegree, BTreeSet<usize>>, ser: S) -> std::result::Result<S::Ok, S::Error>
where
    S: serde::Serializer,
{
    #[derive(Serialize)]
    struct Entry<'a> {
        degree: &'a MultiDegree,
        axes: &'a BTreeSet<usize>,
    }
    ser.collect_seq(axes.iter().map(|(degree, axes)| Entry { degree, axes }))
}

impl DegreeSetReport {
    /// Axes `l` with `j - e_l` in the initial set.
    pub fn axes_of(&self, j: &MultiDegree) -> Option<&BTreeSet<usize>> {
        self.axes.get(j)
    }

    /// Some `(l1, l2, i)` with `j - e_l1 - e_l2 >= i` and `i` initial, if any.
    pub fn exclusion_witness(&self, j: &MultiDegree) -> Option<(usize, usize, MultiDegree)> {
        exclusion_witness(&self.initial, j)
    }
}

fn exclusion_witness(initial: &BTreeSet<MultiDegree>, j: &MultiDegree) -> Option<(usize, usize, MultiDegree)> {
    let k = j.len();
    for l1 in 0..k {
        for l2 in l1..k {
            let Some(lowered) = j.minus_unit(l1).and_then(|d| d.minus_unit(l2)) else {
                continue;
            };
            if let Some(i) = initial.iter().find(|i| i.leq(&lowered)) {
                return Some((l1, l2, i.clone()));
            }
        }
    }
    None
}

pub fn compute_degree_sets(s: usize, shape: &SpaceShape) -> DegreeSetReport {
    assert!(s >= 1, "a point set has at least one point");
    let initial = initial_degrees(s, shape);
    let mut possible = initial.clone();
    let mut candidates = BTreeSet::new();
    let mut axes = BTreeMap::new();
    for i in &initial {
        for l in 0..shape.k() {
            let j = i.plus_unit(l);
            possible.insert(j.clone());
            if candidates.contains(&j) || exclusion_witness(&initial, &j).is_some() {
                continue;
            }
            let ls: BTreeSet<usize> = (0..shape.k())
                .filter(|&m| j.minus_unit(m).is_some_and(|d| initial.contains(&d)))
                .collect();
            axes.insert(j.clone(), ls);
            candidates.insert(j);
        }
    }
    DegreeSetReport {
        initial,
        candidates,
        axes,
        possible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn deg(parts: &[u32]) -> MultiDegree {
        MultiDegree::new(parts.to_vec())
    }

    fn shape(dims: &[u32]) -> SpaceShape {
        SpaceShape::new(dims.to_vec()).unwrap()
    }

    fn set(items: &[&[u32]]) -> BTreeSet<MultiDegree> {
        items.iter().map(|p| deg(p)).collect()
    }

    #[test]
    fn graded_dim_examples() {
        assert_eq!(graded_dim(&deg(&[1, 1, 1]), &shape(&[1, 1, 1])).unwrap(), 8u32.into());
        assert_eq!(
            graded_dim(&deg(&[0, 0, 0, 0]), &shape(&[3, 1, 4, 2])).unwrap(),
            1u32.into()
        );
        assert_eq!(graded_dim(&deg(&[2, 1]), &shape(&[2, 3])).unwrap(), 24u32.into());
    }

    #[test]
    fn graded_dim_matches_enumeration() {
        // Oracle: count exponent tuples by brute force over all small vectors.
        fn count(n: u32, d: u32) -> usize {
            let vars = n as usize + 1;
            let mut total = 0;
            let mut e = vec![0u32; vars];
            loop {
                if e.iter().sum::<u32>() == d {
                    total += 1;
                }
                let mut h = 0;
                loop {
                    if h == vars {
                        return total;
                    }
                    e[h] += 1;
                    if e[h] <= d {
                        break;
                    }
                    e[h] = 0;
                    h += 1;
                }
            }
        }
        assert_eq!(count(2, 2) * count(3, 1), 24);
        for n in 1..4 {
            for d in 0..5 {
                assert_eq!(binomial(u64::from(n + d), u64::from(d)), count(n, d).into());
            }
        }
    }

    #[test]
    fn graded_dim_rejects_length_mismatch() {
        assert!(matches!(
            graded_dim(&deg(&[1, 1]), &shape(&[1, 1, 1])),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn monomials_examples() {
        let m = monomials_of_degree(&deg(&[1, 0]), &shape(&[1, 1])).unwrap();
        assert_eq!(m, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert_eq!(
            monomials_of_degree(&deg(&[1, 1, 1]), &shape(&[1, 1, 1])).unwrap().len(),
            8
        );
        let m = monomials_of_degree(&deg(&[2, 1]), &shape(&[2, 3])).unwrap();
        assert_eq!(m.len(), 24);
        let distinct: BTreeSet<_> = m.iter().collect();
        assert_eq!(distinct.len(), 24);
        for e in &m {
            assert_eq!(e[..3].iter().sum::<u32>(), 2);
            assert_eq!(e[3..].iter().sum::<u32>(), 1);
        }
    }

    #[test]
    fn block_order_is_grevlex() {
        assert_eq!(
            block_monomials(2, 2),
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn index_round_trips_and_shifts() {
        let sh = shape(&[2, 1]);
        let lo = MonomialIndex::new(&deg(&[1, 2]), &sh).unwrap();
        let hi = MonomialIndex::new(&deg(&[2, 2]), &sh).unwrap();
        for i in 0..lo.len() {
            assert_eq!(lo.index_of(&lo.exponents(i)), Some(i));
        }
        for var in 0..3 {
            let map = lo.shift_map(0, var, &hi);
            for (i, &target) in map.iter().enumerate() {
                let mut e = lo.exponents(i);
                e[var] += 1;
                assert_eq!(hi.exponents(target), e);
            }
        }
    }

    #[test]
    fn minimal_elements_examples() {
        let sh = shape(&[1, 1, 1]);
        let got = minimal_elements(&deg(&[3, 3, 3]), |j| exceeds(j, &sh, 3));
        assert_eq!(
            got,
            set(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
        );
        assert_eq!(minimal_elements(&deg(&[2, 2]), |_| true), set(&[&[0, 0]]));
        assert!(minimal_elements(&deg(&[2, 2]), |_| false).is_empty());
        let p2 = shape(&[2]);
        assert_eq!(minimal_elements(&deg(&[6]), |j| exceeds(j, &p2, 5)), set(&[&[2]]));
    }

    /// Oracle for the candidate set: apply the membership definition to every
    /// degree of a box, independently of `compute_degree_sets`.
    fn brute_candidates(s: usize, sh: &SpaceShape, bound: &MultiDegree) -> BTreeSet<MultiDegree> {
        let initial: Vec<MultiDegree> = degrees_in_box(bound)
            .filter(|j| exceeds(j, sh, s) && degrees_in_box(j).all(|i| i == *j || !exceeds(&i, sh, s)))
            .collect();
        degrees_in_box(bound)
            .filter(|j| (0..j.len()).any(|l| j.minus_unit(l).is_some_and(|d| initial.contains(&d))))
            .filter(|j| {
                !initial
                    .iter()
                    .any(|i| j.checked_sub(i).is_some_and(|diff| diff.total() >= 2))
            })
            .collect()
    }

    #[test]
    fn candidates_three_points_in_p1_cubed() {
        let sh = shape(&[1, 1, 1]);
        let report = compute_degree_sets(3, &sh);
        let expected = set(&[
            &[4, 0, 0],
            &[0, 4, 0],
            &[0, 0, 4],
            &[2, 1, 0],
            &[1, 2, 0],
            &[2, 0, 1],
            &[1, 0, 2],
            &[0, 2, 1],
            &[0, 1, 2],
            &[1, 1, 1],
        ]);
        assert_eq!(report.candidates, expected);
        assert_eq!(brute_candidates(3, &sh, &deg(&[4, 4, 4])), expected);
        assert_eq!(report.axes_of(&deg(&[1, 1, 1])).unwrap(), &BTreeSet::from([0, 1, 2]));
        assert!(!report.candidates.contains(&deg(&[3, 1, 0])));
        let (l1, l2, i) = report.exclusion_witness(&deg(&[3, 1, 0])).unwrap();
        assert_eq!((l1, l2, i), (0, 0, deg(&[1, 1, 0])));
    }

    #[test]
    fn candidates_single_point_on_a_line() {
        let report = compute_degree_sets(1, &shape(&[4]));
        assert_eq!(report.initial, set(&[&[1]]));
        assert_eq!(report.candidates, set(&[&[2]]));
        assert_eq!(report.axes_of(&deg(&[2])).unwrap(), &BTreeSet::from([0]));
    }

    #[test]
    fn candidates_agree_with_definition() {
        for (s, dims) in [(4, vec![1, 2]), (7, vec![2, 2]), (5, vec![1, 1, 2]), (9, vec![1, 4, 4])] {
            let sh = shape(&dims);
            let report = compute_degree_sets(s, &sh);
            let bound = MultiDegree(dims.iter().map(|&n| first_exceeding(n, s) + 1).collect());
            assert_eq!(report.candidates, brute_candidates(s, &sh, &bound), "s={s} shape={sh}");
        }
    }

    #[test]
    fn genericity_degree_sets() {
        let (below, frontier) = genericity_degrees(3, &shape(&[1, 1]));
        assert_eq!(below, vec![deg(&[0, 0]), deg(&[0, 1]), deg(&[1, 0])]);
        assert_eq!(frontier, vec![deg(&[0, 2]), deg(&[1, 1]), deg(&[2, 0])]);
        let (below, frontier) = genericity_degrees(1, &shape(&[2, 2]));
        assert!(below.is_empty());
        assert_eq!(frontier, vec![deg(&[0, 0])]);
    }

    #[test]
    fn binomial_growth_inequality() {
        for n in 1..=30u64 {
            for l in 1..=30u64 {
                assert!(binomial(n + l + 1, l + 1) <= binomial(n + l, l) * BigUint::from(n + 1));
            }
        }
    }

    #[test]
    fn parses_lists() {
        assert_eq!("1, 2,2".parse::<SpaceShape>().unwrap(), shape(&[1, 2, 2]));
        assert!("1,0".parse::<SpaceShape>().is_err());
        assert!("".parse::<SpaceShape>().is_err());
        assert_eq!("3,0,1".parse::<MultiDegree>().unwrap(), deg(&[3, 0, 1]));
        assert!("a,1".parse::<MultiDegree>().is_err());
    }

    fn small_degree(k: usize) -> impl Strategy<Value = MultiDegree> {
        proptest::collection::vec(0u32..5, k).prop_map(MultiDegree::new)
    }

    proptest! {
        #[test]
        fn leq_is_a_partial_order(a in small_degree(3), b in small_degree(3), c in small_degree(3)) {
            prop_assert!(a.leq(&a));
            if a.leq(&b) && b.leq(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.leq(&b) && b.leq(&c) {
                prop_assert!(a.leq(&c));
            }
        }

        #[test]
        fn graded_dim_is_monotone(a in small_degree(3), b in small_degree(3), dims in proptest::collection::vec(1u32..4, 3)) {
            let sh = SpaceShape::new(dims).unwrap();
            let lo = a.clone();
            let hi = a.join(&b);
            prop_assert!(graded_dim(&lo, &sh).unwrap() <= graded_dim(&hi, &sh).unwrap());
        }

        #[test]
        fn minimal_elements_form_a_covering_antichain(s in 1usize..15, dims in proptest::collection::vec(1u32..3, 1..4)) {
            let sh = SpaceShape::new(dims.clone()).unwrap();
            let bound = MultiDegree::new(dims.iter().map(|&n| first_exceeding(n, s)).collect());
            let mins = minimal_elements(&bound, |j| exceeds(j, &sh, s));
            for a in &mins {
                for b in &mins {
                    prop_assert!(a == b || !a.comparable(b));
                }
            }
            for j in degrees_in_box(&bound) {
                if exceeds(&j, &sh, s) {
                    prop_assert!(mins.iter().any(|m| m.leq(&j)));
                }
            }
        }

        #[test]
        fn degree_set_invariants(s in 1usize..20, dims in proptest::collection::vec(1u32..4, 1..4)) {
            let sh = SpaceShape::new(dims).unwrap();
            let report = compute_degree_sets(s, &sh);
            for j in &report.candidates {
                prop_assert!(!report.initial.contains(j));
                prop_assert!(report.possible.contains(j));
                let ls = report.axes_of(j).unwrap();
                prop_assert!(!ls.is_empty());
                for l in 0..sh.k() {
                    let below_initial = j.minus_unit(l).is_some_and(|d| report.initial.contains(&d));
                    prop_assert_eq!(ls.contains(&l), below_initial);
                }
            }
            for j in &report.possible {
                if !report.initial.contains(j) && !report.candidates.contains(j) {
                    let (l1, l2, i) = report.exclusion_witness(j).unwrap();
                    let lowered = j.minus_unit(l1).and_then(|d| d.minus_unit(l2)).unwrap();
                    prop_assert!(i.leq(&lowered) && report.initial.contains(&i));
                }
            }
        }
    }
}
