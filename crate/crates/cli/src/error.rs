use raman_core::{Error as CoreError, SchemeError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Argument(String),
    #[error("invalid scheme: {0}")]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Kernel(CoreError),
    #[error("oracle disagrees with kernel: |Δw| = {diff:e} exceeds {tolerance:e}")]
    OracleDisagreement { diff: f64, tolerance: f64 },
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    #[error("output error: {0}")]
    Csv(#[from] csv::Error),
    #[error("output error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Argument(_) => 2,
            CliError::Scheme(_) => 3,
            CliError::Kernel(_) => 1,
            CliError::OracleDisagreement { .. } => 4,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::Scheme(e) => CliError::Scheme(e),
            CoreError::InvalidAngle { .. }
            | CoreError::ZeroPolarization
            | CoreError::NonPositiveParameter { .. } => CliError::Argument(err.to_string()),
            other => CliError::Kernel(other),
        }
    }
}
