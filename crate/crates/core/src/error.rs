use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("bilinear form is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },

    #[error("matrix is not symmetric: entry ({row},{col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("metric is not orthonormal (expected a diagonal of +1/-1 entries)")]
    NotOrthonormal,

    #[error("Jacobi identity fails at basis triple ({0},{1},{2})")]
    Jacobi(usize, usize, usize),

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("unknown Lie algebra family {0:?}")]
    UnknownFamily(String),

    #[error("parameters out of range for {family}: requires {condition}")]
    ParamOutOfRange { family: String, condition: String },

    #[error("theorem conditions are not satisfied for {0}")]
    PredicateNotSatisfied(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
