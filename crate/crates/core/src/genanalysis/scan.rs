use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_non_degenerate, nu};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::multidegree::SpaceShape;
use crate::points::{derive_seed, random_generic_point_set};

pub const SCAN_HEADER: [&str; 7] = ["s", "shape", "seed", "nu", "v", "equal", "status"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanCell {
    pub s: usize,
    pub shape: SpaceShape,
}

impl ScanCell {
    /// All `(s, shape)` pairs, `s`-major, shapes in the given order.
    pub fn grid(s_values: impl IntoIterator<Item = usize>, shapes: &[SpaceShape]) -> Vec<ScanCell> {
        s_values
            .into_iter()
            .flat_map(|s| {
                shapes.iter().map(move |shape| ScanCell {
                    s,
                    shape: shape.clone(),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub seeds_per_cell: usize,
    pub base_seed: u64,
    pub coord_bound: u64,
    pub retry_cap: usize,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            seeds_per_cell: 1,
            base_seed: 0,
            coord_bound: 50,
            retry_cap: 100,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub s: usize,
    pub shape: SpaceShape,
    /// Seed of the accepted draw, or the cell seed when sampling failed.
    pub seed: u64,
    pub nu: Option<u64>,
    pub v: Option<u64>,
    pub equal: Option<bool>,
    pub status: String,
}

impl ScanRow {
    pub fn ok(&self) -> bool {
        self.status == "ok"
    }
}

/// Seed for replicate `rep` of a cell. Depends only on the cell, never on
/// its position in the scan.
pub fn cell_seed(base: u64, s: usize, shape: &SpaceShape, rep: usize) -> u64 {
    let mut seed = derive_seed(base, s as u64 + 1);
    for &n in shape.dims() {
        seed = derive_seed(seed, u64::from(n) + 1);
    }
    derive_seed(seed, rep as u64 + 1)
}

fn run_one<F: Field>(field: &F, cell: &ScanCell, rep: usize, opts: &ScanOptions) -> ScanRow {
    let seed = cell_seed(opts.base_seed, cell.s, &cell.shape, rep);
    let mut row = ScanRow {
        s: cell.s,
        shape: cell.shape.clone(),
        seed,
        nu: None,
        v: None,
        equal: None,
        status: String::new(),
    };
    if let Err(e) = check_non_degenerate(cell.s, &cell.shape) {
        row.status = format!("degenerate: {e}");
        return row;
    }
    let sample = match random_generic_point_set(field, cell.s, &cell.shape, opts.coord_bound, seed, opts.retry_cap) {
        Ok(sample) => sample,
        Err(e) => {
            row.status = format!("sampling-failed: {e}");
            return row;
        }
    };
    row.seed = sample.seed;
    match nu(&sample.points) {
        Ok(report) => {
            row.nu = Some(report.nu);
            row.v = Some(report.v);
            row.equal = Some(report.nu == report.v);
            row.status = "ok".into();
        }
        Err(e) => row.status = format!("failed: {e}"),
    }
    row
}

/// Samples `seeds_per_cell` certified-generic sets per cell and records
/// `nu` against `v`. Rows come out in cell order, replicates innermost,
/// whatever the thread count. Per-cell failures are recorded in `status`.
pub fn scan<F: Field>(field: &F, cells: &[ScanCell], opts: &ScanOptions) -> Result<Vec<ScanRow>> {
    let work: Vec<(&ScanCell, usize)> = cells
        .iter()
        .flat_map(|c| (0..opts.seeds_per_cell).map(move |r| (c, r)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {} workers: {e}", opts.jobs)))?;
    Ok(pool.install(|| {
        work.par_iter()
            .map(|(cell, rep)| run_one(field, cell, *rep, opts))
            .collect()
    }))
}

/// CSV with header `s,shape,seed,nu,v,equal,status`; missing values are empty.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], writer: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(SCAN_HEADER)?;
    for r in rows {
        out.write_record([
            r.s.to_string(),
            r.shape.to_string(),
            r.seed.to_string(),
            r.nu.map(|v| v.to_string()).unwrap_or_default(),
            r.v.map(|v| v.to_string()).unwrap_or_default(),
            r.equal.map(|v| v.to_string()).unwrap_or_default(),
            r.status.clone(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
