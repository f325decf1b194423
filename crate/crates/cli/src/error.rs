use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Failures of a CLI run, each mapped to a stable exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Eval(#[from] clausen_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    VerifyFailed(String),
    #[error("cannot write {}: {source}", path.display())]
    Output { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use clausen_core::Error as E;
        match self {
            CliError::Eval(E::Convergence { .. }) => 3,
            CliError::Eval(_) | CliError::Usage(_) => 2,
            CliError::VerifyFailed(_) => 4,
            CliError::Output { .. } | CliError::Io(_) => 1,
        }
    }
}
