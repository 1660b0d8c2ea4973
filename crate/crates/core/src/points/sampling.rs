use std::collections::HashSet;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::engine::{FieldPoints, GenericityCertificate};
use super::{MultiPoint, PointSet};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::multidegree::SpaceShape;

const DRAWS_PER_POINT: usize = 1000;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic child seed. Stream 0 is the base seed itself.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    if stream == 0 {
        base
    } else {
        splitmix64(base ^ splitmix64(stream))
    }
}

/// `s` distinct points whose components are `[1 : u_1 : ... : u_n]` with
/// `u_i` uniform in `[-coord_bound, coord_bound]`.
///
/// Putting 1 in every 0-th slot makes `x_{l,0}` a non-zero divisor modulo
/// the ideal of the points.
pub fn random_point_set(s: usize, shape: &SpaceShape, coord_bound: u64, seed: u64) -> Result<PointSet> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    if coord_bound < s as u64 {
        return Err(Error::InvalidArgument(format!(
            "coord_bound {coord_bound} must be at least s = {s}"
        )));
    }
    let bound = i64::try_from(coord_bound)
        .map_err(|_| Error::InvalidArgument(format!("coord_bound {coord_bound} is too large")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(s);
    while points.len() < s {
        let mut fresh = None;
        for _ in 0..DRAWS_PER_POINT {
            let comps: Vec<Vec<i64>> = shape
                .dims()
                .iter()
                .map(|&n| {
                    std::iter::once(1)
                        .chain((0..n).map(|_| rng.gen_range(-bound..=bound)))
                        .collect()
                })
                .collect();
            if seen.insert(comps.clone()) {
                fresh = Some(comps);
                break;
            }
        }
        let comps = fresh.ok_or_else(|| Error::SamplingExhausted {
            attempts: DRAWS_PER_POINT,
            reason: format!("could not draw point {} distinct from the others", points.len() + 1),
        })?;
        points.push(MultiPoint::new(
            comps
                .into_iter()
                .map(|c| c.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )?);
    }
    PointSet::new(shape.clone(), points)
}

/// A point set certified to be in generic position.
#[derive(Debug)]
pub struct GenericSample<F: Field> {
    pub points: FieldPoints<F>,
    /// Seed of the accepted draw.
    pub seed: u64,
    /// Number of draws, including the accepted one.
    pub attempts: usize,
    pub certificate: GenericityCertificate,
}

/// Rejection sampling: tries `derive_seed(seed, 0..retry_cap)` in order and
/// returns the first certified-generic draw. Never returns a non-generic set.
pub fn random_generic_point_set<F: Field>(
    field: &F,
    s: usize,
    shape: &SpaceShape,
    coord_bound: u64,
    seed: u64,
    retry_cap: usize,
) -> Result<GenericSample<F>> {
    let mut last_failure = String::from("no attempts made");
    for attempt in 0..retry_cap {
        let child = derive_seed(seed, attempt as u64);
        let set = match random_point_set(s, shape, coord_bound, child) {
            Ok(set) => set,
            Err(Error::SamplingExhausted { reason, .. }) => {
                last_failure = reason;
                continue;
            }
            Err(e) => return Err(e),
        };
        let points = match FieldPoints::new(field.clone(), set) {
            Ok(p) => p,
            Err(Error::InvalidPoint(reason)) => {
                last_failure = reason;
                continue;
            }
            Err(e) => return Err(e),
        };
        let certificate = points.is_generic_position()?;
        if certificate.generic {
            return Ok(GenericSample {
                points,
                seed: child,
                attempts: attempt + 1,
                certificate,
            });
        }
        if let Some(c) = certificate.first_failure() {
            last_failure = format!("H_X{} = {} < {}", c.degree, c.hilbert, c.expected);
        }
    }
    Err(Error::SamplingExhausted {
        attempts: retry_cap,
        reason: format!("no generic draw for s = {s} in {shape}; last: {last_failure}"),
    })
}
