use thiserror::Error;

/// Errors raised by class arithmetic and the scenario pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: P^{dim} holds at most {max} coefficients, got {found}")]
    DimensionMismatch { dim: usize, max: usize, found: usize },

    #[error("ambient mismatch: class in P^{left} combined with class in P^{right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("class is not invertible: codimension-0 coefficient is zero")]
    NotInvertible,

    #[error("codimension {codim} out of range for P^{dim}")]
    CodimOutOfRange { codim: usize, dim: usize },

    #[error("invalid degree {0}: degrees must be positive integers")]
    InvalidDegree(i64),

    #[error("{count} hypersurfaces cannot cut out a complete intersection in P^{dim}")]
    TooManyDegrees { count: usize, dim: usize },

    #[error("linear subspace of dimension {k} is not a proper subspace of P^{dim}")]
    SubspaceOutOfRange { k: usize, dim: usize },

    #[error("unsupported scenario: {0}")]
    Unsupported(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("invalid rational '{0}'")]
    InvalidRational(String),

    #[error("scenario error at {field}: {message}")]
    Scenario { field: String, message: String },

    #[error("{0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
