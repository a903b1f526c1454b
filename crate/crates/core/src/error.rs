use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient {0} is not in the coefficient domain")]
    CoefficientNotInDomain(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("variable `{0}` has no assigned value")]
    Unassigned(String),
    #[error("matrix entry at ({row}, {col}) is not a constant")]
    NonConstantEntry { row: usize, col: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("point is not on the variety: {0}")]
    PointNotOnVariety(String),
    #[error("points not enumerable: {0}")]
    PointsNotEnumerable(String),
    #[error("position {0} is out of range")]
    PositionOutOfRange(i64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
