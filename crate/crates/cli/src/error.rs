use graded_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid {context}: {source}")]
    Invalid {
        context: &'static str,
        #[source]
        source: AlgebraError,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 for cap violations, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Algebra(AlgebraError::CapExceeded { .. })
            | CliError::Invalid {
                source: AlgebraError::CapExceeded { .. },
                ..
            } => 3,
            _ => 1,
        }
    }
}
