use thiserror::Error;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible variable lists: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("vector has {found} coordinates, context has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("expected degree {expected}, found degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("polarization of a degree-{degree} form needs {degree} vectors, got {given}")]
    Arity { degree: usize, given: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("S-polynomial degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("form is not contained in the subspace")]
    NotInSpace,

    #[error("sample set is rank deficient: {0}")]
    Sampling(String),

    #[error("parametrization is not an immersion at the base point: {0}")]
    Immersion(String),

    #[error("truncation degree {degree} too small; a jet survives beyond it (try at least {needed})")]
    Truncation { degree: usize, needed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
