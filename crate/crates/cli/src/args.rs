use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csst_core::qsim::{DEFAULT_AMP_CAP, DEFAULT_TOL};
use csst_core::DEFAULT_CAP;

#[derive(Parser, Debug)]
#[command(name = "csst-kit", version, about = "Construct and check CSS-T codes over F_{2^s}")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Extension degree s of the base field F_{2^s} for constructions.
    #[arg(long, global = true, visible_alias = "s", default_value_t = 1)]
    pub field_s: u32,
    /// Irreducible polynomial of degree s, decimal or 0x-prefixed hex.
    #[arg(long, global = true, value_parser = parse_u32)]
    pub primitive_poly: Option<u32>,
    /// Maximum number of codewords enumerated by any exhaustive scan.
    #[arg(long, global = true, env = "CSST_KIT_CAP", default_value_t = DEFAULT_CAP, value_parser = parse_positive)]
    pub cap: u128,
    /// Maximum number of state-vector amplitudes.
    #[arg(long, global = true, default_value_t = DEFAULT_AMP_CAP, value_parser = parse_positive)]
    pub amp_cap: u128,
    /// Residual tolerance for code-space preservation.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; search-cyclic defaults to jsonl, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Jsonl,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code or a doubled pair and print it as JSON.
    #[command(subcommand)]
    Construct(Construct),
    /// Run a check; exits 0 if it passes, 1 if it fails, 2 on error.
    Check(Check),
    /// Apply transversal T gates to the code space of a pair.
    Simulate(Simulate),
    /// Enumerate CSS-T pairs of cyclic codes.
    SearchCyclic(SearchCyclic),
    /// Print a code with its parameters.
    Show(Show),
    /// Generate a seeded random CSS pair.
    RandomPair(RandomPair),
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Binary Reed-Muller code RM(r, m).
    Rm {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Generalized Reed-Muller code over F_{2^s}.
    Grm {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Cyclic code from a generator polynomial or a defining or generating set.
    Cyclic {
        #[arg(long)]
        n: usize,
        /// Generator polynomial coefficients, constant term first.
        #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with_all = ["defining_set", "generating_set"])]
        gen: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "generating_set")]
        defining_set: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        generating_set: Option<Vec<usize>>,
        /// Print all three descriptions instead of the code.
        #[arg(long)]
        describe: bool,
    },
    /// Repetition code of length n.
    Repetition {
        #[arg(long)]
        n: usize,
    },
    /// Length-doubled pair (x, φ(x)); φ defaults to the identity.
    Double {
        #[command(flatten)]
        pair: PairInput,
        /// JSON matrix: row i is φ of the i-th canonical generator of C1.
        #[arg(long)]
        phi: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PairInput {
    /// Pair file {"c1": code, "c2": code}.
    #[arg(long, conflicts_with_all = ["c1", "c2"])]
    pub pair: Option<PathBuf>,
    #[arg(long, requires = "c2")]
    pub c1: Option<PathBuf>,
    #[arg(long, requires = "c1")]
    pub c2: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Css,
    CsstBinary,
    CsstQary,
    TraceNecessary,
    Bounds,
    CyclicConditions,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    Star,
    Intersection,
    Definition,
}

#[derive(Args, Debug)]
pub struct Check {
    #[arg(value_enum)]
    pub method: Method,
    #[command(flatten)]
    pub pair: PairInput,
    /// Criterion for csst-binary.
    #[arg(long, value_enum, default_value_t = Via::Star)]
    pub via: Via,
    /// Cyclic spec files for cyclic-conditions.
    #[arg(long)]
    pub spec1: Option<PathBuf>,
    #[arg(long)]
    pub spec2: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Simulate {
    #[command(flatten)]
    pub pair: PairInput,
    /// Field elements λ to test; defaults to all of F_q.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub lambda: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
pub struct SearchCyclic {
    /// Lengths to search; each must be odd.
    #[arg(long, value_delimiter = ',', num_args = 1.., required_unless_present = "n_to")]
    pub n: Vec<usize>,
    /// Search every odd length in [n-from, n-to].
    #[arg(long, default_value_t = 3)]
    pub n_from: usize,
    #[arg(long)]
    pub n_to: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Show {
    pub code: PathBuf,
}

#[derive(Args, Debug)]
pub struct RandomPair {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k1: usize,
    #[arg(long)]
    pub k2: usize,
    /// Draw a binary pair satisfying the star criterion.
    #[arg(long)]
    pub csst: bool,
}

fn parse_u32(s: &str) -> Result<u32, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

fn parse_positive(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e: std::num::ParseFloatError| e.to_string())?;
    if v > 0.0 && v <= 1e-3 {
        Ok(v)
    } else {
        Err("tolerance must lie in (0, 1e-3]".into())
    }
}
