use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("form is degenerate")]
    Degenerate,
    #[error("form is not negative definite")]
    NotNegativeDefinite,
    #[error("not an involution: {0}")]
    NotAnInvolution(String),
    #[error("not an isometry: {0}")]
    NotAnIsometry(String),
    #[error("not antiunitary: {0}")]
    NotAntiunitary(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("invalid controlling vector: {0}")]
    InvalidController(String),
    #[error("group closure exceeded cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("subdiagram is not a product of (-1)-types: {0}")]
    NotMinusOneType(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
