use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("sets A, B, C do not partition [1..{n}]")]
    NotAPartition { n: usize },

    #[error("variable index {index} out of range for n = {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("complex is not minimal: {0}")]
    NotMinimal(String),

    #[error("zero vector has no primitive normalization")]
    DegenerateSolution,

    #[error("invalid degree triplet: {0}")]
    Triplet(String),

    #[error("{0}")]
    NoInternalNondegree(String),

    #[error("degree {degree} is a nondegree of the pinching data")]
    Nondegree { degree: i64 },

    #[error("chain map lifting failed: {0}")]
    Lifting(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
