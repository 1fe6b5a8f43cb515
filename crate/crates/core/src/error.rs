use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A Cayley table violates a group axiom. `axiom` names the first failure.
    #[error("invalid group table: {axiom} violated at {indices:?}")]
    InvalidGroup {
        axiom: &'static str,
        indices: Vec<usize>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("order {order} exceeds the configured cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor mismatch: {0} and {1}")]
    ConductorMismatch(u32, u32),

    #[error("invalid character table: {0}")]
    InvalidTable(String),

    #[error("inconsistent oracle: {0}")]
    InconsistentOracle(String),

    #[error("invalid symmetrized products: {0}")]
    InvalidProducts(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal self-check failed. Never caused by user input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
