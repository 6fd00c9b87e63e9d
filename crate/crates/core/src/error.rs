use thiserror::Error;

use crate::report::CheckReport;

/// Errors raised by constructors and operations across the crate.
///
/// Variants that carry a [`CheckReport`] signal a violated precondition; the
/// report holds the witnesses that broke it.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("conflicting values for structure constant at {indices:?}")]
    ConflictingEntry { indices: Vec<usize> },

    #[error("nonzero structure constant at {indices:?} violates antisymmetry")]
    NonzeroDiagonal { indices: Vec<usize> },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("representations are defined over different base algebras")]
    BaseMismatch,

    #[error("bilinear form is not antisymmetric")]
    NotAntisymmetric,

    #[error("bilinear form is degenerate")]
    Degenerate,

    #[error("subspaces do not split the ambient space")]
    NonComplementarySplits,

    #[error("binary bracket fails the Jacobi identity")]
    JacobiFailure(CheckReport),

    #[error("operator fails the relative Rota-Baxter equations")]
    RboViolation(CheckReport),

    #[error("form fails the symplectic conditions")]
    SymplecticViolation(CheckReport),

    #[error("product tables fail the pre-Lie-Yamaguti axioms")]
    PreLyViolation(CheckReport),
}

impl Error {
    /// The witness report attached to a violated precondition, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::JacobiFailure(r)
            | Error::RboViolation(r)
            | Error::SymplecticViolation(r)
            | Error::PreLyViolation(r) => Some(r),
            _ => None,
        }
    }
}
