use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] salem_core::Error),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    /// 1 for bad input or arguments, 2 when a certified result fails an
    /// internal consistency check or the search gives up.
    pub fn exit_code(&self) -> u8 {
        use salem_core::Error as E;
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Core(E::Internal(_) | E::TooManyUnresolved { .. }) => 2,
            CliError::Core(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}
