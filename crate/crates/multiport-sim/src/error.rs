//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// A degree / size argument is outside the supported range.
    #[error("size {got} out of range: {reason}")]
    Size { got: usize, reason: String },

    /// Two objects that must share a dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// The argument is not a valid permutation mapping.
    #[error("invalid permutation mapping: {0}")]
    InvalidPermutation(String),

    /// A matrix expected to be Hermitian is not, within tolerance.
    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})")]
    NotHermitian { max_asymmetry: f64 },

    /// A Gram matrix is not realizable by state vectors.
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.6e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    /// A multiport matrix is not unitary within tolerance.
    #[error("matrix is not unitary (residual {residual:.3e})")]
    NotUnitary { residual: f64 },

    /// A state failed a structural invariant (norm, trace, positivity).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// An input specification is malformed.
    #[error("invalid input specification: {0}")]
    InvalidInput(String),

    /// A cycle traverses an absent (infinite-distance) edge.
    #[error("cycle traverses a disconnected edge {from} -> {to}")]
    Disconnected { from: usize, to: usize },

    /// A POVM is infeasible or incomplete.
    #[error("invalid POVM: {0}")]
    InvalidPovm(String),

    /// The requested case is recognized but not supported.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A computed quantity violated an internal consistency bound.
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),

    /// Scenario configuration errors (CLI layer).
    #[error("config error: {0}")]
    Config(String),

    /// I/O errors surfaced verbatim.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
