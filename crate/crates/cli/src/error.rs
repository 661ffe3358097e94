use gselc::graph::GraphParseError;
use gselc::logical::EncodingError;
use gselc::{GraphError, OracleError};
use std::path::PathBuf;
use thiserror::Error;

/// Anything that stops a command before it can report a verdict. All of
/// these exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] GraphParseError),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Encoding(#[from] EncodingError),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}
