use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The polynomial is not the character of a finite-dimensional
    /// sl(2)-representation.
    #[error("not an sl(2)-character: {0}")]
    NotACharacter(String),

    /// A polynomial division that must be exact left a remainder.
    #[error("inexact polynomial division by 1 - t^{0}")]
    InexactDivision(u32),

    #[error("partition has {parts} nonzero parts, at most {max} allowed")]
    TooManyParts { parts: usize, max: usize },

    #[error("tableau enumeration exceeded budget of {0}")]
    BudgetExceeded(u64),

    #[error("invalid partition {0:?}")]
    InvalidPartition(String),

    #[error("invalid composition {0:?}")]
    InvalidComposition(String),

    #[error("invalid rank n = {0}")]
    InvalidRank(usize),

    /// No strip addition up to the search bound satisfies the predicate.
    #[error("no even completion found with at most {0} added boxes")]
    NoCompletion(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
