use std::path::PathBuf;

use desitter_monopole::ode::IntegrationFailure;
use desitter_monopole::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Integration(#[from] IntegrationFailure),
    #[error("{what} = {value:e} exceeds tolerance {tol:e}")]
    Tolerance { what: String, value: f64, tol: f64 },
}

impl CliError {
    /// 1 for I/O, 2 for invalid input, 3 for degenerate parameters or
    /// non-convergence, 4 for results outside tolerance.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Usage(_) | CliError::Config(_) => 2,
            CliError::Core(e) => match e {
                Error::Lattice(_) | Error::Domain { .. } => 2,
                Error::Pole { .. } | Error::Degenerate { .. } | Error::NonConvergence { .. } => 3,
            },
            CliError::Integration(_) => 3,
            CliError::Tolerance { .. } => 4,
        }
    }
}
