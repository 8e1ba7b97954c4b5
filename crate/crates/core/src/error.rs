use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Variants fall into two groups. Most are precondition or validation failures
/// caused by the caller's input. [`Error::InvariantViolation`] is different: it
/// signals that a computed object failed an internal consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate root: (alpha, alpha) = 0")]
    DegenerateRoot,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource guard exceeded: {what} (limit {limit})")]
    ResourceGuard { what: String, limit: usize },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("positivity gate failed: theta* sends the positive root {0} into the positive system")]
    PositivityGate(String),

    #[error("weight is not special: theta*(lambda) != -lambda")]
    NotSpecial,

    #[error("no matrix realization for involution family {0}")]
    Unrealized(String),

    #[error("not an idempotent: {0}")]
    NotIdempotent(String),

    #[error("cone is not strongly convex: the origin lies in the polytope")]
    NotStronglyConvex,

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True when the error reports a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
