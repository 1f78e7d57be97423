//! Error type shared by all modules.

use thiserror::Error;

/// Domain rejections and malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    /// The (family, rank) pair does not describe a compact simple Lie algebra.
    #[error("invalid type {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: u32,
        reason: String,
    },
    /// A family name could not be parsed.
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    /// A fundamental weight index is outside 1..=rank.
    #[error("weight index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    /// Coefficient vector length differs from the rank.
    #[error("weight has {got} coefficients, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    /// The fundamental weight is not fixed by the Galois involution.
    #[error("fundamental weight {0} is of complex type")]
    ComplexType(usize),
    /// A precondition of an operation was violated.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Input could not be parsed.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    /// Query outside the range covered by the classification.
    #[error("out of classified range: {0}")]
    OutOfRange(String),
    /// A fixture id was not found or could not be read.
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
