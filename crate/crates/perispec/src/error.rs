//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operator is not elliptic: min Re-eigenvalue {min_eig:.6e} at sample {at:?}")]
    NotElliptic { min_eig: f64, at: Vec<f64> },

    #[error("self-adjointness violated: {0}")]
    SelfAdjointViolation(String),

    #[error("integer matrix is singular")]
    SingularMatrix,

    #[error("fiber matrix is not Hermitian (max asymmetry {0:.3e})")]
    NotHermitian(f64),

    #[error("eigensolver failed to converge at index {0}")]
    ConvergenceFailure(usize),

    #[error("semigroup time must be positive, got {0}")]
    NonpositiveTime(f64),

    #[error("cell problem matrix is singular")]
    SingularCellProblem,

    #[error("torus quadrature order {q} does not resolve the translate window {w}")]
    AliasingWindow { q: usize, w: usize },

    #[error("grid incompatible: {0}")]
    GridIncompatible(String),

    #[error("plane-wave bases do not match: {0}")]
    TruncationMismatch(String),

    #[error("operator has lower-order terms; this operation requires a pure second-order operator")]
    NotPureSecondOrder,

    #[error("operator is not self-adjoint")]
    NotSelfAdjoint,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
