use thiserror::Error;

/// Errors raised by the algebra, ring and catalog layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator count mismatch: expected {expected}, found {found}")]
    GeneratorMismatch { expected: usize, found: usize },
    #[error("at most {max} generators are supported, got {found}")]
    TooManyGenerators { max: usize, found: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    InvalidGeneratorDegree(String),
    #[error("generator index {index} out of range for {count} generators")]
    InvalidIndex { index: usize, count: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("series with zero constant term is not invertible")]
    NotInvertible,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected a class of positive degree")]
    DegreeZero,
    #[error("relation {index} is not homogeneous")]
    NonHomogeneousRelation { index: usize },
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("rank {0} is not supported")]
    UnsupportedRank(usize),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("products with an oriented Grassmannian factor are not supported")]
    OrientedProduct,
    #[error("cannot parse polynomial `{input}`: {reason}")]
    PolyParse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
