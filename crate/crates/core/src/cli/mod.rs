//! Command-line surface: fitting, arithmetic, curve sampling and checks over
//! JSON number documents.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain/precondition error,
//! 4 parse error.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod document;
pub mod render;

pub use commands::ArithOp;
pub use document::{parse_document, parse_documents, NumberDocument, Realized};
pub use render::NumberFormat;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(#[from] crate::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Domain(_) => 3,
            CliError::Parse(_) => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pdmf", version, about = "Probability-density fuzzy numbers")]
pub struct Cli {
    /// Print numbers with this many decimals instead of 12 significant digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    pub round: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit each document in FILE and print its parameter form.
    Fit { file: PathBuf },
    /// A + B.
    Add { a: PathBuf, b: PathBuf },
    /// A - B.
    Sub { a: PathBuf, b: PathBuf },
    /// lambda * FILE.
    Scale {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        file: PathBuf,
    },
    /// Solve B + X = A by X = A - B and report the residual.
    Solve { a: PathBuf, b: PathBuf },
    /// Sample the membership curve of FILE as CSV.
    Curve {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Add pointwise min/max columns of two baseline operands.
        #[arg(long, num_args = 2, value_names = ["FILE_A", "FILE_B"])]
        compare: Option<Vec<PathBuf>>,
    },
    /// Run the structural and auxiliary-function checks on each document.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = 10_001)]
        grid: usize,
    },
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let io_err = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_one(path: &Path) -> Result<NumberDocument, CliError> {
    parse_document(&read_text(path)?)
}

/// Executes a parsed command line and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = NumberFormat::from_round(cli.round);
    let mut out = match &cli.command {
        Command::Fit { file } => {
            let docs = parse_documents(&read_text(file)?)?;
            let lines = docs
                .iter()
                .map(|d| commands::fit(d, fmt))
                .collect::<Result<Vec<_>, _>>()?;
            lines.join("\n")
        }
        Command::Add { a, b } => commands::arith(ArithOp::Add, &[read_one(a)?, read_one(b)?], None, fmt)?,
        Command::Sub { a, b } => commands::arith(ArithOp::Sub, &[read_one(a)?, read_one(b)?], None, fmt)?,
        Command::Solve { a, b } => {
            commands::arith(ArithOp::Solve, &[read_one(a)?, read_one(b)?], None, fmt)?
        }
        Command::Scale { lambda, file } => {
            commands::arith(ArithOp::Scale, &[read_one(file)?], Some(*lambda), fmt)?
        }
        Command::Curve { file, n, compare } => {
            let doc = read_one(file)?;
            let baselines = match compare.as_deref() {
                Some([x, y]) => Some((read_one(x)?, read_one(y)?)),
                Some(_) => return Err(CliError::Usage("--compare takes two files".into())),
                None => None,
            };
            let pair = baselines.as_ref().map(|(x, y)| (x, y));
            // The CSV already ends with a newline.
            return commands::curve(&doc, *n, pair, fmt);
        }
        Command::Check { file, grid } => {
            let docs = parse_documents(&read_text(file)?)?;
            let mut text = String::new();
            for d in &docs {
                text.push_str(&commands::check(d, *grid)?.0);
            }
            return Ok(text);
        }
    };
    out.push('\n');
    Ok(out)
}
