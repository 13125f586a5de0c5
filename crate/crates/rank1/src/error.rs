//! The crate-wide error type.

use thiserror::Error;

/// Errors raised by library operations.
///
/// Every variant has a stable name (see [`Error::name`]) that the CLI reports
/// verbatim, so scripts can match on it without parsing messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a spacer tuple must have at least one entry")]
    EmptyTuple,

    #[error("cut count must be at least 2, got {0}")]
    InvalidCutCount(u64),

    #[error("cut count {cut_count} does not match spacer tuple length {spacer_len} + 1")]
    LevelSpecMismatch { cut_count: u64, spacer_len: usize },

    #[error(
        "tuples have lengths {left} and {right}; compatibility is only defined for equal lengths"
    )]
    LengthMismatch { left: usize, right: usize },

    #[error("premise violation: {0}")]
    PremiseViolation(String),

    #[error("level {level} is beyond the explicit prefix (length {prefix_len}) and the tail is unspecified")]
    BeyondPrefix { level: u64, prefix_len: u64 },

    #[error("word at level {level} has {length} symbols, exceeding the budget of {budget}")]
    BudgetExceeded {
        level: u64,
        length: String,
        budget: u64,
    },

    #[error("inner level {inner} exceeds outer level {outer}")]
    LevelOrder { inner: u64, outer: u64 },

    #[error("pattern of length {pattern_len} does not fit strictly inside a gap sequence of length {gap_count}")]
    PatternTooLong {
        pattern_len: usize,
        gap_count: usize,
    },

    #[error("level {level} lies in the periodic tail; unroll the cycle into the prefix before collapsing")]
    TailCollapse { level: u64 },

    #[error("the operation requires a periodic tail, but the tail is unspecified")]
    UnspecifiedTail,

    #[error("canonical necessary condition fails at level {level}: the combined spacer tuple of levels {level} and {} is constant", level + 1)]
    CanonicalConditionFailed { level: u64 },

    #[error("no non-palindromic spacer tuple recurs in the periodic tail")]
    NoRecurringAsymmetry,

    #[error(
        "parameter representations cannot be aligned periodically and no finite horizon was given"
    )]
    IncompatibleRepresentations,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyTuple => "EmptyTuple",
            Error::InvalidCutCount(_) => "InvalidCutCount",
            Error::LevelSpecMismatch { .. } => "LevelSpecMismatch",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::PremiseViolation(_) => "PremiseViolation",
            Error::BeyondPrefix { .. } => "BeyondPrefix",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::LevelOrder { .. } => "LevelOrder",
            Error::PatternTooLong { .. } => "PatternTooLong",
            Error::TailCollapse { .. } => "TailCollapse",
            Error::UnspecifiedTail => "UnspecifiedTail",
            Error::CanonicalConditionFailed { .. } => "CanonicalConditionFailed",
            Error::NoRecurringAsymmetry => "NoRecurringAsymmetry",
            Error::IncompatibleRepresentations => "IncompatibleRepresentations",
            Error::InvalidParams(_) => "InvalidParams",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::Io(_) => "Io",
        }
    }
}
