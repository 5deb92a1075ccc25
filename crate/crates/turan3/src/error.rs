//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad parameter, unknown name, out-of-range size, and similar caller mistakes.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation's freeness precondition failed; carries the offending
    /// pattern name and one witness embedding (host vertices, in pattern order).
    #[error("precondition violated: input contains {pattern} at {witness:?}")]
    Precondition { pattern: String, witness: Vec<usize> },

    /// No closed-form bound is known for the requested forbidden set.
    #[error("unsupported bound: {0}")]
    UnsupportedBound(String),

    /// Malformed graph6 input.
    #[error("graph6: {0}")]
    Graph6(String),

    /// A bounded search ran out of its node budget before finishing.
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    /// A structural property that should hold for every valid input failed;
    /// carries a dump sufficient to reproduce.
    #[error("property falsified: {0}")]
    PropertyFalsified(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
