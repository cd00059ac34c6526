use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StringError {
    #[error("invalid string: {0}")]
    Invalid(String),
    #[error("braid word is not in alternating normal form: {0}")]
    NotNormalForm(String),
    #[error("domain error: {0}")]
    Domain(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PipelineError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("conventions check failed: {0}")]
    Conventions(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    String(#[from] StringError),
}
