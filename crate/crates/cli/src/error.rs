use thiserror::Error;

/// Errors surfaced by the command-line tools, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("precondition failed: {0}")]
    Core(#[from] cathedral::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Precondition(_) | CliError::Core(_) => 3,
        }
    }
}

/// Exit code for a verification run that found discrepancies.
pub const EXIT_VERIFY_FAILED: u8 = 2;
