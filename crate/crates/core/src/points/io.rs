//! JSON point files:
//! `{ "shape": [n1, ..., nk], "points": [ [ [c, ...], ... ], ... ] }`
//! with every coordinate a decimal integer string.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{MultiPoint, PointSet};
use crate::error::{Error, Result};
use crate::multidegree::SpaceShape;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFile {
    pub shape: Vec<u32>,
    pub points: Vec<Vec<Vec<String>>>,
}

impl PointFile {
    /// Components are written as primitive integer vectors.
    pub fn from_set(set: &PointSet) -> Self {
        PointFile {
            shape: set.shape().dims().to_vec(),
            points: set
                .points()
                .iter()
                .map(|p| {
                    p.integer_components()
                        .into_iter()
                        .map(|c| c.iter().map(ToString::to_string).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn into_set(self) -> Result<PointSet> {
        let shape = SpaceShape::new(self.shape)?;
        let points = self
            .points
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                let comps = p
                    .into_iter()
                    .map(|c| {
                        c.iter()
                            .map(|v| {
                                v.trim()
                                    .parse::<BigInt>()
                                    .map(BigRational::from_integer)
                                    .map_err(|e| Error::Format(format!("point {i}: bad coordinate {v:?}: {e}")))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                MultiPoint::new(comps)
            })
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(shape, points)
    }
}

pub fn write_points<W: Write>(set: &PointSet, writer: W) -> Result<()> {
    let mut writer = writer;
    serde_json::to_writer_pretty(&mut writer, &PointFile::from_set(set))?;
    writeln!(writer)?;
    Ok(())
}

pub fn read_points<R: Read>(reader: R) -> Result<PointSet> {
    let file: PointFile = serde_json::from_reader(reader).map_err(|e| Error::Format(e.to_string()))?;
    file.into_set()
}

pub fn save_points(set: &PointSet, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_points(set, &mut w)?;
    w.flush()?;
    Ok(())
}

/// Loads and normalizes a point file.
pub fn load_points(path: &Path) -> Result<PointSet> {
    read_points(BufReader::new(File::open(path)?))
}
