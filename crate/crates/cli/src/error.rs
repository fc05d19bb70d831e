use brauer_core::CoreError;
use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("l = {0} is not an odd prime")]
    InvalidPrime(u64),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot parse {what}: {source}")]
    Parse { what: String, source: ParseError },
    #[error("invalid job: {0}")]
    InvalidJob(String),
    #[error("invalid report: {0}")]
    InvalidReport(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn parse(what: &str, source: ParseError) -> CliError {
        CliError::Parse { what: what.to_string(), source }
    }

    /// 0 success, 2 out of scope (`l | [L:K]`), 3 invalid input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::OutOfScope(_)) => 2,
            CliError::Core(CoreError::Internal(_)) | CliError::Io(_) => 1,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
