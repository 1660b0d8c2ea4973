//! Helpers shared by the integration tests: independent oracles written
//! with plain machine integers, and samplers for arbitrary point sets.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use genpos_core::points::random_generic_point_set;
use genpos_core::{FieldPoints, MultiDegree, MultiPoint, PointSet, Rationals, SpaceShape};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn shape(dims: &[u32]) -> SpaceShape {
    SpaceShape::new(dims.to_vec()).unwrap()
}

pub fn deg(parts: &[u32]) -> MultiDegree {
    MultiDegree::new(parts.to_vec())
}

pub fn binom(n: u64, k: u64) -> u128 {
    (1..=k).fold(1u128, |acc, i| acc * u128::from(n - k + i) / u128::from(i))
}

/// `N(j)`, or 0 when some part is negative.
pub fn n_of(j: &[i64], dims: &[u32]) -> u128 {
    if j.iter().any(|&p| p < 0) {
        return 0;
    }
    j.iter()
        .zip(dims)
        .map(|(&d, &n)| binom(u64::from(n) + d as u64, d as u64))
        .product()
}

fn signed(d: &MultiDegree) -> Vec<i64> {
    d.parts().iter().map(|&p| i64::from(p)).collect()
}

pub fn n_deg(d: &MultiDegree, dims: &[u32]) -> u128 {
    n_of(&signed(d), dims)
}

fn all_in_box(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// The initial set `D` and the candidate set with its `L_j`, straight from
/// the definitions by scanning a box.
pub struct OracleSets {
    pub initial: BTreeSet<MultiDegree>,
    pub candidates: BTreeMap<MultiDegree, BTreeSet<usize>>,
}

pub fn oracle_sets(s: usize, dims: &[u32]) -> OracleSets {
    let s = s as u128;
    let bound: Vec<u32> = dims
        .iter()
        .map(|&n| (0..).find(|&d| binom(u64::from(n) + d, d) > s).unwrap() as u32 + 2)
        .collect();
    let k = dims.len();
    let mut initial = BTreeSet::new();
    for j in all_in_box(&bound) {
        let js: Vec<i64> = j.iter().map(|&p| i64::from(p)).collect();
        if n_of(&js, dims) <= s {
            continue;
        }
        let minimal = (0..k).all(|l| {
            let mut below = js.clone();
            below[l] -= 1;
            below[l] < 0 || n_of(&below, dims) <= s
        });
        if minimal {
            initial.insert(MultiDegree::new(j));
        }
    }
    let mut candidates = BTreeMap::new();
    for i in &initial {
        for l in 0..k {
            let j = i.plus_unit(l);
            let js = signed(&j);
            let excluded = (0..k).any(|a| {
                (0..k).any(|b| {
                    let mut low = js.clone();
                    low[a] -= 1;
                    low[b] -= 1;
                    low.iter().all(|&p| p >= 0)
                        && initial
                            .iter()
                            .any(|d| d.parts().iter().zip(&low).all(|(&x, &y)| i64::from(x) <= y))
                })
            });
            if excluded {
                continue;
            }
            let ls: BTreeSet<usize> = (0..k)
                .filter(|&m| j.minus_unit(m).is_some_and(|d| initial.contains(&d)))
                .collect();
            candidates.insert(j, ls);
        }
    }
    OracleSets { initial, candidates }
}

/// The lower bound, evaluated from [`oracle_sets`] in signed arithmetic.
pub fn oracle_v(s: usize, dims: &[u32]) -> i128 {
    let sets = oracle_sets(s, dims);
    let si = s as i128;
    let mut v: i128 = sets.initial.iter().map(|i| n_deg(i, dims) as i128 - si).sum();
    for (j, ls) in &sets.candidates {
        let mut term = n_deg(j, dims) as i128 - si;
        for &l in ls {
            let below = j.minus_unit(l).unwrap();
            term -= (i128::from(dims[l]) + 1) * (n_deg(&below, dims) as i128 - si);
        }
        v += term.max(0);
    }
    v
}

pub fn generic(s: usize, dims: &[u32], seed: u64) -> FieldPoints<Rationals> {
    random_generic_point_set(&Rationals, s, &shape(dims), 50, seed, 100)
        .unwrap()
        .points
}

/// `s` distinct points whose components are drawn from small pools, so
/// projections collide and the set is usually not in generic position.
pub fn pooled_set(rng: &mut ChaCha8Rng, dims: &[u32], s: usize, pool: usize) -> PointSet {
    let pools: Vec<Vec<Vec<i64>>> = dims
        .iter()
        .map(|&n| {
            // Leading coordinate 1 keeps distinct vectors projectively distinct.
            let mut entries: Vec<Vec<i64>> = Vec::new();
            while entries.len() < pool {
                let e: Vec<i64> = std::iter::once(1)
                    .chain((0..n).map(|_| rng.gen_range(-9..=9)))
                    .collect();
                if !entries.contains(&e) {
                    entries.push(e);
                }
            }
            entries
        })
        .collect();
    let mut points: Vec<MultiPoint> = Vec::new();
    let mut guard = 0;
    while points.len() < s {
        guard += 1;
        assert!(guard < 10_000, "pools too small for {s} distinct points");
        let comps: Vec<Vec<BigRational>> = pools
            .iter()
            .map(|p| {
                p[rng.gen_range(0..p.len())]
                    .iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        let point = MultiPoint::new(comps).unwrap();
        if !points.contains(&point) {
            points.push(point);
        }
    }
    PointSet::new(shape(dims), points).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
