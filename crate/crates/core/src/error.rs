use thiserror::Error;

/// Errors raised by the weight, pattern and chain operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected m = {expected}, found m = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("factors {position} and {next} do not agree on their shared boundary weight", next = .position + 1)]
    BoundaryMismatch { position: usize },

    #[error("factor {position} has level {level}, above the bound K = {bound}")]
    LevelExceeded { position: usize, level: u64, bound: u64 },

    #[error("tuple has no internal zero separating nonzero entries")]
    NoInternalZero,

    #[error("size guard: {what} would produce more than {limit} objects")]
    SizeGuard { what: String, limit: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
