use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("{0} row(s) failed to converge")]
    Convergence(usize),
    #[error(transparent)]
    Core(#[from] hydrent_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }

    /// Process exit code: 2 for bad input, 3 for convergence failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Core(hydrent_core::Error::Validation(_) | hydrent_core::Error::Domain(_)) => 2,
            CliError::Convergence(_) | CliError::Core(hydrent_core::Error::Convergence { .. }) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
