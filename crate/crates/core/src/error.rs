use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid tensor: {0}")]
    InvalidTensor(String),

    #[error("invalid polynomial form: {0}")]
    InvalidForm(String),

    #[error("tensor is not symmetric")]
    NotSymmetric,

    #[error("zero vector has no eigen class")]
    ZeroVector,

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("term budget exceeded: {needed} terms > cap {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },

    #[error("zero leading coefficient in resultant input")]
    ZeroLeadingCoefficient,

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
