//! Command-line front end.
//!
//! [`JobConfig`] is parsed by clap; [`run`] computes a [`Report`] and renders
//! it as JSON, CSV or LaTeX. Errors map to stable exit codes.

mod emit;
mod report;

use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num::BigRational;

use crate::combinatorics::{Modulus, Weight};
use crate::error::{Error, Result};
use crate::klr::DEFAULT_MEMO_CAP;

pub use emit::{emit, emit_csv, emit_json, emit_latex};
pub use report::{build_report, OracleReport, ParamsVerdict, PosetReport, Report, ShapeReport};

/// Exit status of a successful run.
pub const EXIT_OK: i32 = 0;
/// Usage errors and anything not covered below.
pub const EXIT_USAGE: i32 = 1;
/// The weight is missing or violates the residue gap condition.
pub const EXIT_INVALID_WEIGHT: i32 = 2;
/// `n` or `r` exceed what the command supports.
pub const EXIT_BOUNDS: i32 = 3;
/// Hecke parameters are degenerate or outside the semisimple regime.
pub const EXIT_PARAMETERS: i32 = 4;

/// Environment variable overriding the worker count.
pub const ENV_WORKERS: &str = "TLR_WORKERS";
/// Environment variable overriding the memo-cache cap per cell module.
pub const ENV_MEMO_CAP: &str = "TLR_MEMO_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// The poset of one-column shapes with its cover relations.
    Poset,
    /// Standard tableaux of every shape.
    Std,
    /// Official reduced expressions of every shape.
    Ore,
    /// Gram matrices, ranks and degrees.
    Gram,
    /// The decomposition matrix.
    Decomp,
    /// Cell and simple dimensions and the total dimension.
    Dims,
    /// Semisimplicity verdicts.
    Semisimple,
    /// Compare with the Hecke-algebra oracle.
    OracleValidate,
    /// Everything above.
    All,
}

impl Command {
    fn needs_weight(self) -> bool {
        matches!(self, Command::Gram | Command::Decomp | Command::Dims | Command::Semisimple | Command::All)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Latex,
}

/// Rational Hecke parameters `q, v_1, ..., v_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeParams {
    pub q: BigRational,
    pub v: Vec<BigRational>,
}

impl FromStr for HeckeParams {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|x| BigRational::from_str(x.trim()).map_err(|e| format!("bad rational {x:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match values.split_first() {
            Some((q, v)) if !v.is_empty() => Ok(HeckeParams { q: q.clone(), v: v.to_vec() }),
            _ => Err("expected q,v1,...,vr".into()),
        }
    }
}

/// One invocation.
#[derive(Debug, Clone, Parser)]
#[command(name = "gentl", version, about = "Cell data of generalised Temperley-Lieb algebras")]
pub struct JobConfig {
    /// Number of nodes.
    #[arg(long)]
    pub n: usize,
    /// Number of components.
    #[arg(long)]
    pub r: usize,
    /// Quantum characteristic; 0 means infinite.
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    /// Weight residues `i_1,...,i_r`.
    #[arg(long = "weight", value_delimiter = ',', allow_hyphen_values = true)]
    pub weight_residues: Vec<i64>,
    #[arg(long = "format", value_enum, default_value_t = OutputFormat::Json)]
    pub output_format: OutputFormat,
    /// Seed selecting the official reduced expressions.
    #[arg(long = "seed", default_value_t = 0)]
    pub official_seed: u64,
    /// Hecke parameters `q,v1,...,vr` for `semisimple` and `oracle-validate`.
    #[arg(long)]
    pub params: Option<HeckeParams>,
    /// Largest number of non-empty components listed by `poset`.
    #[arg(long, default_value_t = 2)]
    pub max_components: usize,
    /// Worker threads; overrides the environment.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Memoised words per cell module; overrides the environment.
    #[arg(long)]
    pub memo_cap: Option<usize>,
    #[arg(value_enum)]
    pub command: Command,
}

impl JobConfig {
    /// Fills worker count and memo cap from the environment when not given
    /// on the command line.
    pub fn with_env_overrides(mut self) -> Self {
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse::<usize>().ok());
        self.workers = self.workers.or_else(|| read(ENV_WORKERS));
        self.memo_cap = self.memo_cap.or_else(|| read(ENV_MEMO_CAP));
        self
    }

    pub fn memo_cap(&self) -> usize {
        self.memo_cap.unwrap_or(DEFAULT_MEMO_CAP)
    }

    /// The weight, if residues were supplied.
    pub fn weight(&self) -> Result<Option<Weight>> {
        if self.weight_residues.is_empty() {
            return Ok(None);
        }
        if self.weight_residues.len() != self.r {
            return Err(Error::InvalidWeight(format!(
                "{} residues given for r = {}",
                self.weight_residues.len(),
                self.r
            )));
        }
        Weight::new(&self.weight_residues, Modulus::from_e(self.e)).map(Some)
    }
}

/// Result of [`run`]: exit status, the rendered document on success, and a
/// diagnostic on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub document: String,
    pub diagnostic: Option<String>,
}

/// Largest `n` each command accepts.
pub fn max_n(command: Command) -> usize {
    match command {
        Command::Gram | Command::All => 12,
        Command::OracleValidate => 5,
        Command::Std | Command::Ore | Command::Decomp | Command::Dims => 16,
        Command::Poset | Command::Semisimple => 64,
    }
}

fn check_bounds(cfg: &JobConfig) -> Result<()> {
    if cfg.n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    if cfg.r < 2 {
        return Err(Error::InvalidInput("r must be at least 2".into()));
    }
    let limit = max_n(cfg.command);
    if cfg.n > limit {
        return Err(Error::UnsupportedBounds(format!("n = {} exceeds {limit} for {:?}", cfg.n, cfg.command)));
    }
    if cfg.command == Command::OracleValidate && cfg.r > 4 {
        return Err(Error::UnsupportedBounds(format!("r = {} exceeds 4 for the oracle", cfg.r)));
    }
    if cfg.r > 8 {
        return Err(Error::UnsupportedBounds(format!("r = {} exceeds 8", cfg.r)));
    }
    Ok(())
}

/// Exit code for an error class.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidWeight(_) => EXIT_INVALID_WEIGHT,
        Error::UnsupportedBounds(_) => EXIT_BOUNDS,
        Error::DegenerateParameters(_) | Error::NotSemisimple(_) => EXIT_PARAMETERS,
        _ => EXIT_USAGE,
    }
}

/// Runs one job.
pub fn run(cfg: &JobConfig) -> Outcome {
    let result = (|| {
        check_bounds(cfg)?;
        let weight = cfg.weight()?;
        if cfg.command.needs_weight() && weight.is_none() {
            return Err(Error::InvalidWeight(format!("{:?} needs --weight", cfg.command)));
        }
        let report = match cfg.workers {
            Some(w) if w > 0 => rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))?
                .install(|| build_report(cfg, weight.as_ref()))?,
            _ => build_report(cfg, weight.as_ref())?,
        };
        emit(&report, cfg.output_format)
    })();
    match result {
        Ok(document) => Outcome { code: EXIT_OK, document, diagnostic: None },
        Err(err) => {
            Outcome { code: exit_code(&err), document: String::new(), diagnostic: Some(err.to_string()) }
        }
    }
}
