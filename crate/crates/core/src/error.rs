use thiserror::Error;

/// Errors raised by the detection library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("the generator list is empty")]
    EmptyInput,

    #[error("variable name `{0}` is already declared")]
    VariableCollision(String),

    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),

    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),

    #[error("generators are not homogeneous for any supported grading")]
    NonHomogeneous,

    #[error("subduction did not terminate within {0} steps")]
    SubductionCapExceeded(usize),

    #[error("leading tuple does not match the generators")]
    InvalidLeadingTuple,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
