use thiserror::Error;

/// Errors raised while building or checking cycle systems.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle: {0}")]
    MalformedCycle(String),

    #[error("vertex family mismatch: {0}")]
    FamilyMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested (ell, v) pair lies outside the constructible range.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// A construction failed its own audit. Never returned for a correct build;
    /// surfaced instead of emitting an unverified system.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
