use thiserror::Error;

/// Errors raised by group arithmetic, representation construction and the
/// spectral routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("n = {0} is outside the supported range 1..={1}")]
    UnsupportedN(usize, usize),

    #[error("group too large for enumeration (n = {0}, limit {1})")]
    GroupTooLarge(usize, usize),

    #[error("weights must be nonnegative (got {0})")]
    NegativeWeight(f64),

    #[error("group-ring element is not symmetric; its Laplacian would not be self-adjoint")]
    NotSymmetric,

    #[error("element has a non-diagonal term")]
    NotDiagonal,

    #[error("psi undefined on trivial irrep")]
    TrivialIrrep,

    #[error("representation dimension {0} exceeds the limit {1}")]
    DimensionTooLarge(usize, usize),

    #[error("non-integral multiplicity {value} (residual {residual:e})")]
    NonIntegralMultiplicity { value: f64, residual: f64 },

    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid label `{0}`")]
    InvalidLabel(String),

    #[error("{message} at line {line}")]
    Parse { line: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
