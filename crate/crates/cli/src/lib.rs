//! Library side of the `orlicz` command-line tool: input specs, report
//! documents and the command implementations.

pub mod commands;
pub mod report;
pub mod spec;

use thiserror::Error;

/// Errors carried to the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or invalid input. Exit code 2.
    #[error("{0}")]
    Input(String),
    /// Out-of-domain argument. Exit code 3.
    #[error("{0}")]
    Domain(String),
    /// An inequality or suite failed; the report was still written. Exit code 4.
    #[error("{0}")]
    Failure(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Failure(_) => 4,
        }
    }
}

impl From<orlicz_core::Error> for CliError {
    fn from(e: orlicz_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}
