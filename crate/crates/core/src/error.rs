use thiserror::Error;

/// Errors raised by equation construction, formula evaluation, and I/O.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadoError {
    #[error("invalid equation: m = {m}, a = {a} (need m >= 2 and a >= 1)")]
    InvalidEquation { m: u64, a: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("template has {got} slots but the equation has {expected} variables")]
    SlotMismatch { expected: u64, got: u64 },

    #[error("malformed template: {0}")]
    MalformedTemplate(String),

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(
        "instance too large for brute force: about {estimate} candidate solutions (limit {limit})"
    )]
    InstanceTooLarge { estimate: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, RadoError>;
