use thiserror::Error;

/// Errors surfaced by the algebra operations.
///
/// Context mismatches (mixing elements over different `n`) are programming
/// errors and panic instead; everything here is reachable from user input
/// or flags a genuine internal-consistency failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator index {index} out of range 1..={max} (n = {n})")]
    IndexOutOfRange { index: u32, n: u32, max: u32 },

    #[error("bracket indices must be strictly increasing without repeats, got {0:?}")]
    InvalidBracket(Vec<u32>),

    #[error("graded commutator requires parity-homogeneous arguments")]
    NonHomogeneous,

    #[error("coefficient index {k} out of range 0..={n}")]
    CoeffIndexOutOfRange { k: u32, n: u32 },

    #[error("triangle action left a non-scalar residual at bracket {bracket}: {residual}")]
    NonScalarResidual { bracket: String, residual: String },

    #[error("not a simultaneous eigenvector of the Cartan action: {0}")]
    NotAWeightVector(String),

    #[error("fundamental representation solve failed: {0}")]
    RepSolveFailed(String),
}
