//! `gselc`: build graphs, apply LC/ELC, run the oracle suites and compare
//! logical cluster-state constructions.
//!
//! Exit status: 0 when every asserted check passes, 1 when a check fails,
//! 2 for usage, input and resource errors.

mod commands;
mod error;
mod input;
mod names;

use clap::{Parser, Subcommand, ValueEnum};
use error::CliError;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "gselc",
    version,
    about = "Graph states, local and edge local complementation"
)]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest register the state-vector oracle may allocate.
    #[arg(long, global = true, env = "GSELC_MAX_QUBITS", default_value_t = 20,
          value_parser = clap::value_parser!(u32).range(1..=30))]
    max_qubits: u32,
    /// Amplitude tolerance for equality checks.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = positive_tol)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named graph: star:N, cycle:N, path:N, empty:N or file:PATH.
    Graph { spec: String },
    /// Apply lc:V and elc:A,B operations left to right.
    Apply {
        #[arg(required = true)]
        ops: Vec<String>,
        /// Input graph source; reads JSON from stdin when omitted.
        #[arg(long, default_value = "-")]
        graph: String,
        /// Emit every intermediate LC graph.
        #[arg(long)]
        trace: bool,
        /// Comma-separated vertex names, usable in operations and text output.
        #[arg(long)]
        names: Option<String>,
    },
    /// Run a verification suite: theorem1, vertex-lc, stabilizers,
    /// properties, cs2 or chain:N.
    Verify {
        suite: String,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = gselc::suites::DEFAULT_SEED)]
        seed: u64,
    },
    /// Build an n-block logical cluster state both ways and compare.
    Encode {
        #[arg(long, value_enum, default_value_t = Construction::Both)]
        construction: Construction,
        #[arg(long, default_value_t = 2)]
        n_logical: usize,
    },
    /// Re-serialize a graph as DOT or canonical JSON.
    Export { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Direct,
    Elc,
    Both,
}

fn positive_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a positive tolerance")),
    }
}

/// Rendered command output and, for checks, whether they all passed.
pub struct Output {
    pub body: String,
    pub passed: bool,
}

fn emit(out: Option<&PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli).and_then(|output| {
        emit(cli.out.as_ref(), &output.body)?;
        Ok(output.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("gselc: {err}");
            ExitCode::from(2)
        }
    }
}
