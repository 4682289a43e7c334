use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("ground set size {0} exceeds the supported maximum of {max}", max = crate::combinatorics::MAX_GROUND_SET)]
    GroundSetTooLarge(usize),

    #[error("colex rank {rank} out of range for {k}-subsets of a {n}-set")]
    RankOutOfRange { rank: u64, k: usize, n: usize },

    #[error("ground set mismatch: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("element is zero")]
    ZeroElement,

    #[error("element is not a {0}-trade")]
    NotATrade(usize),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("column {column} out of range 1..={max}")]
    ColumnOutOfRange { column: usize, max: usize },

    #[error("straightening exceeded its fuel of {0} rewrites")]
    FuelExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
