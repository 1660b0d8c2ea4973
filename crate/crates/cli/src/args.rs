use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genpos_core::{MultiDegree, PrimeField, SpaceShape};

#[derive(Debug, Parser)]
#[command(
    name = "genpos",
    version,
    about = "Hilbert functions and generator counts for points in products of projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a point set and write it as a points file.
    Gen(PointArgs),
    /// Table of H_X over a box of degrees.
    Hilbert {
        #[command(flatten)]
        points: PointArgs,
        /// Upper corner of the table, e.g. 3,3.
        #[arg(long = "box", value_name = "DEGREE")]
        bound: MultiDegree,
    },
    /// Candidate generator degrees computed from H_X alone.
    Gens(PointArgs),
    /// Minimal number of generators of I_X.
    Nu {
        #[command(flatten)]
        points: PointArgs,
        /// Count generators degree by degree instead of using the generic formula.
        #[arg(long)]
        brute: bool,
        /// Box for --brute; defaults to the projection box joined with the initial degrees plus one.
        #[arg(long = "box", value_name = "DEGREE", requires = "brute")]
        bound: Option<MultiDegree>,
    },
    /// The lower bound v(s; n_1, ..., n_k) and the upper bound.
    Vbound {
        #[arg(long)]
        shape: SpaceShape,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare nu with v over a grid of (s, shape) cells.
    Scan(ScanArgs),
    /// Check the excess generator of three generic points in P1 x P1 x P1.
    #[command(name = "verify-thm55")]
    VerifyTriple {
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SamplingArgs {
    /// Base seed. GENPOS_SEED overrides it when set.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Affine coordinates are drawn from [-B, B].
    #[arg(long, default_value_t = 50, value_name = "B")]
    pub coord_bound: u64,
    /// Draws tried before giving up on a generic set.
    #[arg(long, default_value_t = 100)]
    pub retry_cap: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[arg(long, required_unless_present = "points")]
    pub shape: Option<SpaceShape>,
    #[arg(long, required_unless_present = "points")]
    pub s: Option<usize>,
    /// Read the point set from a points file instead of sampling.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["shape", "s"])]
    pub points: Option<PathBuf>,
    /// Sample without requiring generic position.
    #[arg(long)]
    pub any: bool,
    #[arg(long, default_value = "rational")]
    pub field: FieldChoice,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Inclusive range of s, as A..B or a single value.
    #[arg(long, value_name = "A..B")]
    pub s_range: SRange,
    /// A shape to scan; repeat for several.
    #[arg(long = "shape", required = true)]
    pub shapes: Vec<SpaceShape>,
    #[arg(long, default_value_t = 1)]
    pub seeds_per_cell: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value = "rational")]
    pub field: FieldChoice,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub output: OutputFormat,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Fp(u64),
}

impl FieldChoice {
    /// The prime must exceed `2 * coord_bound` so sampled coordinates stay distinct.
    pub fn prime_field(&self, coord_bound: u64) -> Result<Option<PrimeField>, String> {
        match *self {
            FieldChoice::Rational => Ok(None),
            FieldChoice::Fp(p) => {
                let field = PrimeField::new(p).map_err(|e| e.to_string())?;
                if u128::from(p) <= 2 * u128::from(coord_bound) {
                    return Err(format!(
                        "fp:{p} needs p > 2 * coord_bound = {}",
                        2 * u128::from(coord_bound)
                    ));
                }
                Ok(Some(field))
            }
        }
    }
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "rational" | "q" => Ok(FieldChoice::Rational),
            other => other
                .strip_prefix("fp:")
                .and_then(|p| p.trim().parse().ok())
                .map(FieldChoice::Fp)
                .ok_or_else(|| format!("expected `rational` or `fp:P`, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for SRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("empty or invalid range {s:?}"));
        }
        Ok(SRange { lo, hi })
    }
}
