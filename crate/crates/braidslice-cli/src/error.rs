use braidslice_core::{AlgebraError, PipelineError, StringError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported at {stage}: {message}")]
    Unsupported {
        stage: &'static str,
        message: String,
    },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Unsupported { .. } => 3,
            CliError::Internal(_) | CliError::Io(_) => 4,
        }
    }

    /// Attaches the pipeline stage to an error from the core crate.
    pub fn at(stage: &'static str) -> impl Fn(PipelineError) -> CliError {
        move |e| match e {
            PipelineError::Unsupported(message) => CliError::Unsupported { stage, message },
            PipelineError::String(s) => CliError::Parse(s.to_string()),
            other => CliError::Internal(format!("{stage}: {other}")),
        }
    }
}

impl From<StringError> for CliError {
    fn from(e: StringError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(format!("json: {e}"))
    }
}
