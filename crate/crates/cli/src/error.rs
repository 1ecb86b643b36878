use std::path::PathBuf;

use thiserror::Error;

/// Failure of a CLI run, grouped by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("numerical failure: {0}")]
    Numerical(#[source] vortexpaths_core::Error),

    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<vortexpaths_core::Error> for CliError {
    fn from(err: vortexpaths_core::Error) -> Self {
        match err {
            // Bad parameters rather than a solver breakdown.
            vortexpaths_core::Error::Domain(msg) => CliError::Validation(msg),
            other => CliError::Numerical(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
