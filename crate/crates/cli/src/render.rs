use std::fmt::Write as _;

use genpos_core::genanalysis::{BruteForceReport, GeneralDegreeBound, GeneratorReport, ScanRow, TripleReport};
use genpos_core::{DegreeSetReport, MultiDegree, SpaceShape};
use serde::Serialize;

use crate::Outcome;

#[derive(Debug, Serialize)]
pub struct BoundsReport {
    pub s: usize,
    pub shape: SpaceShape,
    pub v: u64,
    pub upper: u64,
    pub degree_sets: DegreeSetReport,
}

#[derive(Debug, Serialize)]
pub struct HilbertValue {
    pub degree: MultiDegree,
    pub hilbert: usize,
}

#[derive(Debug, Serialize)]
pub struct HilbertTable {
    pub shape: SpaceShape,
    pub bound: MultiDegree,
    pub values: Vec<HilbertValue>,
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Outcome<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let wrap = |e: csv::Error| crate::Failure::from(genpos_core::Error::from(e));
    w.write_record(header).map_err(wrap)?;
    for r in rows {
        w.write_record(&r).map_err(wrap)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Failure::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn degree_list<'a>(ds: impl IntoIterator<Item = &'a MultiDegree>) -> String {
    ds.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// For two factors the table is a matrix with the first degree down the
/// rows; otherwise one `degree value` line per degree.
pub fn hilbert_text(t: &HilbertTable) -> String {
    let mut out = String::new();
    if t.bound.len() == 2 {
        let cols = t.bound.parts()[1] as usize + 1;
        let width = t
            .values
            .iter()
            .map(|v| v.hilbert.to_string().len())
            .chain([
                t.bound.parts()[0].to_string().len(),
                t.bound.parts()[1].to_string().len(),
            ])
            .max()
            .unwrap_or(1);
        let _ = write!(out, "{:>width$} |", "");
        for j in 0..cols {
            let _ = write!(out, " {j:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}", "-".repeat((width + 1) * (cols + 1) + 1));
        for (i, row) in t.values.chunks(cols).enumerate() {
            let _ = write!(out, "{i:>width$} |");
            for v in row {
                let _ = write!(out, " {:>width$}", v.hilbert);
            }
            out.push('\n');
        }
    } else {
        for v in &t.values {
            let _ = writeln!(out, "{} {}", v.degree, v.hilbert);
        }
    }
    out
}

pub fn hilbert_csv(t: &HilbertTable) -> Outcome<String> {
    csv_string(
        &["degree", "hilbert"],
        t.values.iter().map(|v| {
            vec![
                v.degree
                    .parts()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                v.hilbert.to_string(),
            ]
        }),
    )
}

pub fn nu_text(r: &GeneratorReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s = {}, shape = {}, field = {}", r.s, r.shape, r.field);
    let _ = writeln!(out, "nu = {}", r.nu);
    let _ = writeln!(out, "v = {}", r.v);
    let _ = writeln!(out, "upper = {}", r.upper);
    let _ = writeln!(out, "gap = {}", r.gap());
    for d in &r.per_degree {
        match d.w_dim {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "{}: dim I = {}, dim W = {}, new = {}",
                    d.degree, d.slice_dim, w, d.new_generators
                );
            }
            None => {
                let _ = writeln!(out, "{}: dim I = {}, new = {}", d.degree, d.slice_dim, d.new_generators);
            }
        }
    }
    out
}

pub fn nu_csv(r: &GeneratorReport) -> Outcome<String> {
    csv_string(
        &["degree", "slice_dim", "w_dim", "new_generators"],
        r.per_degree.iter().map(|d| {
            vec![
                d.degree
                    .parts()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                d.slice_dim.to_string(),
                d.w_dim.map(|w| w.to_string()).unwrap_or_default(),
                d.new_generators.to_string(),
            ]
        }),
    )
}

pub fn brute_text(r: &BruteForceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "nu = {} (degree by degree over box {})", r.total, r.bound);
    for d in &r.per_degree {
        let _ = writeln!(out, "{}: new = {}", d.degree, d.new_generators);
    }
    out
}

pub fn gens_text(b: &GeneralDegreeBound) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "projection box = {}", b.t_box);
    let _ = writeln!(out, "E = {}", degree_list(&b.e));
    out
}

pub fn bounds_text(r: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s = {}, shape = {}", r.s, r.shape);
    let _ = writeln!(out, "v = {}", r.v);
    let _ = writeln!(out, "upper = {}", r.upper);
    let _ = writeln!(out, "initial degrees = {}", degree_list(&r.degree_sets.initial));
    let _ = writeln!(out, "candidate degrees = {}", degree_list(&r.degree_sets.candidates));
    out
}

pub fn triple_text(r: &TripleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "seed = {} (attempt {})", r.seed, r.attempts);
    let _ = writeln!(out, "a = ({}), b = ({})", r.a.join(", "), r.b.join(", "));
    let _ = writeln!(out, "forms span the (1,1,0)-type slices: {}", r.forms_span_slices);
    let _ = writeln!(out, "product relations hold: {}", r.identities_hold);
    let _ = writeln!(out, "dim W(1,1,1) = {} of dim I(1,1,1) = {}", r.w_dim, r.slice_dim);
    let _ = writeln!(out, "nu = {}, v = {}, gap = {}", r.nu, r.v, r.gap);
    out
}

pub fn scan_text(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let show = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "s={:<3} shape={:<10} nu={:<5} v={:<5} {}",
            r.s,
            r.shape.to_string(),
            show(r.nu),
            show(r.v),
            match r.equal {
                Some(true) => "equal".to_string(),
                Some(false) => "DIFFERENT".to_string(),
                None => r.status.clone(),
            }
        );
    }
    out
}
