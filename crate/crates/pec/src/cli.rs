//! Command dispatch. Exit codes: 0 on success, 1 for usage, I/O and syntax
//! errors, 2 for semantic failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use pec_core::aspgen::{emit, AspError};
use pec_core::engine::{EngineError, Model, Sampler};
use pec_core::lang::IFormula;
use pec_core::prob::Probability;
use pec_core::syntax::{parse_domain, parse_query, DomainDescription, ParseError, Proposition, QueryError};

use crate::dot::{labeled_graph, to_dot};

#[derive(Debug, Parser)]
#[command(name = "pec", version, about = "Exact reasoning over probabilistic event calculus domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a domain description.
    Check { file: PathBuf },
    /// Probability of an i-formula, optionally conditioned on another.
    Query {
        file: PathBuf,
        #[arg(short = 'q', long = "query")]
        query: String,
        #[arg(long)]
        given: Option<String>,
        #[arg(long, env = "PEC_PRECISION", default_value_t = 6)]
        precision: usize,
        /// Print the exact fraction instead of a decimal.
        #[arg(long)]
        exact: bool,
    },
    /// Emit the answer set program for a domain.
    Translate {
        file: PathBuf,
        /// Output path; defaults to the input with an `.lp` extension.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        with_axioms: bool,
    },
    /// Print the transition graph.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Estimate a marginal by sampling worlds.
    Sample {
        file: PathBuf,
        #[arg(short = 'n', long = "count")]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'q', long = "query")]
        query: String,
        #[arg(long, env = "PEC_PRECISION", default_value_t = 6)]
        precision: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Dot,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{source}")]
    Syntax { path: PathBuf, source: ParseError },
    #[error("{path}: invalid domain description\n{source}")]
    Invalid { path: PathBuf, source: ParseError },
    #[error("query: {0}")]
    Query(#[from] QueryError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Asp(#[from] AspError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Syntax { .. } | CliError::Query(_) => 1,
            CliError::Invalid { .. } | CliError::Engine(_) | CliError::Asp(_) => 2,
        }
    }
}

/// A probability with its rendering at the requested precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryResult {
    pub exact: Probability,
    pub decimal: String,
}

impl QueryResult {
    pub fn new(exact: Probability, precision: usize) -> Self {
        let decimal = exact.to_decimal(precision);
        QueryResult { exact, decimal }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load(path: &Path) -> Result<DomainDescription, CliError> {
    let text = read(path)?;
    parse_domain(&text).map_err(|source| match source {
        ParseError::Syntax { .. } => CliError::Syntax { path: path.to_path_buf(), source },
        ParseError::Invalid(_) => CliError::Invalid { path: path.to_path_buf(), source },
    })
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
}

fn check(file: &Path) -> Result<String, CliError> {
    let dd = load(file)?;
    let props = dd.propositions();
    let count = |pred: fn(&Proposition<'_>) -> bool| props.iter().filter(|p| pred(p)).count();
    Ok(format!(
        "{}: valid; {} fluents, {} actions, maxinst {}; {} propositions ({} v, {} i, {} c, {} p)\n",
        file.display(),
        dd.signature().fluent_count(),
        dd.signature().action_count(),
        dd.maxinst(),
        props.len(),
        count(|p| matches!(p, Proposition::V { .. })),
        count(|p| matches!(p, Proposition::I(_))),
        count(|p| matches!(p, Proposition::C(_))),
        count(|p| matches!(p, Proposition::P(_))),
    ))
}

pub fn query(dd: &DomainDescription, phi: &str, given: Option<&str>, precision: usize) -> Result<QueryResult, CliError> {
    let phi = parse_query(dd.signature(), phi)?;
    let psi: Option<IFormula> = given.map(|g| parse_query(dd.signature(), g)).transpose()?;
    let model = Model::new(dd)?;
    let p = match psi {
        Some(psi) => model.conditional(&phi, &psi)?,
        None => model.marginal(&phi)?,
    };
    Ok(QueryResult::new(p, precision))
}

fn translate(file: &Path, output: Option<PathBuf>, with_axioms: bool) -> Result<String, CliError> {
    let dd = load(file)?;
    let text = emit(&dd, with_axioms)?;
    let target = output.unwrap_or_else(|| file.with_extension("lp"));
    fs::write(&target, text).map_err(|source| CliError::Io { path: target.clone(), source })?;
    Ok(format!("wrote {}\n", target.display()))
}

fn sample(file: &Path, count: u64, seed: u64, q: &str, precision: usize) -> Result<String, CliError> {
    if count == 0 {
        return Err(CliError::Usage("sample count must be positive".into()));
    }
    let dd = load(file)?;
    let phi = parse_query(dd.signature(), q)?;
    let mut sampler = Sampler::new(&dd, seed);
    let mut hits = 0u64;
    for _ in 0..count {
        if phi.holds_in(&sampler.sample()?) {
            hits += 1;
        }
    }
    let freq = Probability::from_ratio(hits, count).expect("hits never exceed the count");
    let exact = Model::new(&dd)?.marginal(&phi)?;
    Ok(format!(
        "samples: {count}\nfrequency: {} ({hits}/{count})\nexact: {} ({exact})\n",
        freq.to_decimal(precision),
        exact.to_decimal(precision),
    ))
}

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Query { file, query: q, given, precision, exact } => {
            let dd = load(&file)?;
            let r = query(&dd, &q, given.as_deref(), precision)?;
            Ok(if exact { format!("{}\n", r.exact) } else { format!("{}\n", r.decimal) })
        }
        Command::Translate { file, output, with_axioms } => translate(&file, output, with_axioms),
        Command::Graph { file, format: GraphFormat::Dot } => {
            let dd = load(&file)?;
            Ok(to_dot(&labeled_graph(&dd)?))
        }
        Command::Sample { file, count, seed, query: q, precision } => sample(&file, count, seed, &q, precision),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                1
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match dispatch(cli).and_then(|text| write_out(out, &text)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
