//! Library side of the `voigt` command: every subcommand is a function here,
//! so tests drive the same code paths as the binary.

pub mod bench;
pub mod boundary;
pub mod errmap;
pub mod eval;
pub mod grid;

use thiserror::Error;
use voigt_core::VoigtError;
use voigt_oracle::OracleError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Voigt(#[from] VoigtError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no boundary in [{lo}, {hi}] for y = {y}, eps = {eps}")]
    NoBoundary { y: f64, eps: f64, lo: f64, hi: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::NoBoundary { .. } => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_shortest(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else {
        format!("{v:e}")
    }
}
