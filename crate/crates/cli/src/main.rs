mod args;
mod render;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use genpos_core::genanalysis::{
    brute_force_nu, default_brute_box, general_generator_degrees, nu, scan, upper_bound, v_bound, verify_triple_excess,
    write_scan_csv, ScanCell, ScanOptions,
};
use genpos_core::multidegree::degrees_in_box;
use genpos_core::points::{load_points, random_generic_point_set, random_point_set, PointFile};
use genpos_core::{compute_degree_sets, Error, Field, FieldPoints, MultiDegree, Rationals};
use serde::Serialize;

use args::{Cli, Command, OutputArgs, OutputFormat, PointArgs, SamplingArgs, ScanArgs};

const EXIT_FAILURE: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_SAMPLING: u8 = 3;
const EXIT_GENERICITY: u8 = 4;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::SamplingExhausted { .. } => EXIT_SAMPLING,
            Error::NotGeneric { .. } => EXIT_GENERICITY,
            Error::DimensionMismatch { .. }
            | Error::InvalidShape(_)
            | Error::InvalidArgument(_)
            | Error::InvalidPoint(_)
            | Error::Degenerate { .. }
            | Error::FieldConversion(_)
            | Error::Format(_) => EXIT_CONFIG,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("genpos: {e}");
            ExitCode::from(e.code)
        }
    }
}

/// GENPOS_SEED wins over --seed.
fn apply_env_seed(sampling: &mut SamplingArgs) -> Outcome {
    if let Ok(raw) = std::env::var("GENPOS_SEED") {
        sampling.seed = raw
            .trim()
            .parse()
            .map_err(|e| Failure::config(format!("GENPOS_SEED={raw:?}: {e}")))?;
    }
    Ok(())
}

/// Runs `$body` with `$f` bound to the selected field.
macro_rules! with_field {
    ($choice:expr, $bound:expr, |$f:ident| $body:expr) => {
        match $choice.prime_field($bound).map_err(Failure::config)? {
            None => {
                let $f = Rationals;
                $body
            }
            Some(p) => {
                let $f = p;
                $body
            }
        }
    };
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen(mut a) => {
            apply_env_seed(&mut a.sampling)?;
            with_field!(a.field, a.sampling.coord_bound, |f| cmd_gen(f, &a))
        }
        Command::Hilbert { points: mut a, bound } => {
            apply_env_seed(&mut a.sampling)?;
            with_field!(a.field, a.sampling.coord_bound, |f| cmd_hilbert(f, &a, &bound))
        }
        Command::Gens(mut a) => {
            apply_env_seed(&mut a.sampling)?;
            with_field!(a.field, a.sampling.coord_bound, |f| cmd_gens(f, &a))
        }
        Command::Nu {
            points: mut a,
            brute,
            bound,
        } => {
            apply_env_seed(&mut a.sampling)?;
            with_field!(a.field, a.sampling.coord_bound, |f| cmd_nu(
                f,
                &a,
                brute,
                bound.as_ref()
            ))
        }
        Command::Vbound { shape, s, output } => {
            let v = v_bound(s, &shape)?;
            let upper = upper_bound(s, &shape)?;
            let sets = compute_degree_sets(s, &shape);
            let report = render::BoundsReport {
                s,
                shape,
                v,
                upper,
                degree_sets: sets,
            };
            emit(&output, &report, || Ok(render::bounds_text(&report)), None)
        }
        Command::Scan(mut a) => {
            apply_env_seed(&mut a.sampling)?;
            with_field!(a.field, a.sampling.coord_bound, |f| cmd_scan(f, &a))
        }
        Command::VerifyTriple { mut sampling, output } => {
            apply_env_seed(&mut sampling)?;
            let report = verify_triple_excess(sampling.seed, sampling.coord_bound, sampling.retry_cap)?;
            emit(&output, &report, || Ok(render::triple_text(&report)), None)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure {
                    code: EXIT_FAILURE,
                    message: "the triple check did not reproduce the expected excess".into(),
                })
            }
        }
    }
}

fn load_or_sample<F: Field>(field: F, a: &PointArgs) -> Outcome<FieldPoints<F>> {
    if let Some(path) = &a.points {
        let set = load_points(path).map_err(|e| match e {
            Error::Io(io) => Failure::config(format!("{}: {io}", path.display())),
            other => other.into(),
        })?;
        return Ok(FieldPoints::new(field, set)?);
    }
    let (Some(shape), Some(s)) = (&a.shape, a.s) else {
        return Err(Failure::config("--shape and --s are required without --points"));
    };
    let sp = &a.sampling;
    if a.any {
        let set = random_point_set(s, shape, sp.coord_bound, sp.seed)?;
        Ok(FieldPoints::new(field, set)?)
    } else {
        Ok(random_generic_point_set(&field, s, shape, sp.coord_bound, sp.seed, sp.retry_cap)?.points)
    }
}

fn cmd_gen<F: Field>(field: F, a: &PointArgs) -> Outcome {
    let points = load_or_sample(field, a)?;
    let file = PointFile::from_set(points.set());
    emit(&a.output, &file, || Ok(render::json(&file)), None)
}

fn cmd_hilbert<F: Field>(field: F, a: &PointArgs, bound: &MultiDegree) -> Outcome {
    let points = load_or_sample(field, a)?;
    points.shape().check_degree(bound)?;
    let values = degrees_in_box(bound)
        .map(|d| {
            Ok(render::HilbertValue {
                hilbert: points.hilbert(&d)?,
                degree: d,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let table = render::HilbertTable {
        shape: points.shape().clone(),
        bound: bound.clone(),
        values,
    };
    emit(
        &a.output,
        &table,
        || Ok(render::hilbert_text(&table)),
        Some(&|| render::hilbert_csv(&table)),
    )
}

fn cmd_gens<F: Field>(field: F, a: &PointArgs) -> Outcome {
    let points = load_or_sample(field, a)?;
    let bound = general_generator_degrees(&points)?;
    emit(&a.output, &bound, || Ok(render::gens_text(&bound)), None)
}

fn cmd_nu<F: Field>(field: F, a: &PointArgs, brute: bool, bound: Option<&MultiDegree>) -> Outcome {
    let points = load_or_sample(field, a)?;
    if brute {
        let bound = bound.cloned().unwrap_or_else(|| default_brute_box(&points));
        let report = brute_force_nu(&points, &bound)?;
        emit(&a.output, &report, || Ok(render::brute_text(&report)), None)
    } else {
        let report = nu(&points)?;
        emit(
            &a.output,
            &report,
            || Ok(render::nu_text(&report)),
            Some(&|| render::nu_csv(&report)),
        )
    }
}

fn cmd_scan<F: Field>(field: F, a: &ScanArgs) -> Outcome {
    let cells = ScanCell::grid(a.s_range.lo..=a.s_range.hi, &a.shapes);
    let opts = ScanOptions {
        seeds_per_cell: a.seeds_per_cell,
        base_seed: a.sampling.seed,
        coord_bound: a.sampling.coord_bound,
        retry_cap: a.sampling.retry_cap,
        jobs: a.jobs,
    };
    let rows = scan(&field, &cells, &opts)?;
    let csv = || -> Outcome<String> {
        let mut buf = Vec::new();
        write_scan_csv(&rows, &mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    };
    let output = OutputArgs {
        output: a.output,
        out: a.out.clone(),
    };
    emit(&output, &rows, || Ok(render::scan_text(&rows)), Some(&csv))
}

/// Writes the report in the requested format, to `--out` or stdout.
fn emit<T: Serialize>(
    output: &OutputArgs,
    value: &T,
    text: impl Fn() -> Outcome<String>,
    csv: Option<&dyn Fn() -> Outcome<String>>,
) -> Outcome {
    let body = match output.output {
        OutputFormat::Json => render::json(value),
        OutputFormat::Text => text()?,
        OutputFormat::Csv => match csv {
            Some(csv) => csv()?,
            None => return Err(Failure::config("csv output is not available for this command")),
        },
    };
    write_out(output.out.as_deref(), &body)
}

fn write_out(path: Option<&Path>, body: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, body)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
