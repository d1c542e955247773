use thiserror::Error;

/// Errors raised by the engine. Domain errors map to CLI exit code 1.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("not an eigenvector: {0}")]
    NotEigenvector(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("stencil node out of range: {0}")]
    OutOfRange(String),
    #[error("no admissible root: {0}")]
    NoRoot(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
