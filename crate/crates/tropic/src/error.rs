//! Error type shared by all library operations.

use thiserror::Error;

/// Errors raised by the algebra, the solvers, and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Multiplicative inversion of the zero element is undefined.
    #[error("inversion of the zero element")]
    InversionOfZero,

    /// `𝟘^q` is defined only for positive exponents.
    #[error("zero element raised to a non-positive power")]
    ZeroToNonpositivePower,

    /// Operand shapes do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The conjugate is defined only for nonzero vectors.
    #[error("conjugate of the zero vector is undefined")]
    ConjugateOfZeroVector,

    /// The operation requires a regular (fully nonzero) vector.
    #[error("input vector must be regular (no zero components)")]
    IrregularInput,

    /// The right-hand side vector is zero where a nonzero vector is required.
    #[error("right-hand side vector is the zero vector")]
    ZeroVectorD,

    /// The matrix is not consistent with the right-hand side vector.
    #[error("matrix is not consistent with the right-hand side; apply consistify first")]
    InconsistentInput,

    /// The independence residual is undefined for a one-column system.
    #[error("independence residual is undefined for a single column")]
    SingleColumn,

    /// No pseudo-solution exists when the residual is infinite.
    #[error("residual is infinite; no pseudo-solution exists")]
    InfiniteResidual,

    /// Subset enumeration would exceed the configured column cap.
    #[error("subset enumeration over {columns} columns exceeds the cap of {cap}")]
    EnumerationCapExceeded { columns: usize, cap: usize },

    /// The requested grid has too many points to sweep.
    #[error("grid of {points} points exceeds the limit of {limit}")]
    GridTooLarge { points: u128, limit: u128 },

    /// A scalar value is outside the carrier of its semifield.
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),

    /// A token or structured input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
