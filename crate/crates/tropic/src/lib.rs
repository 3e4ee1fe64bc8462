//! Tropical (idempotent) linear algebra.
//!
//! The crate computes distances from vectors to tropical linear spans,
//! solves the vector equation `A ⊗ x = d` over linearly ordered idempotent
//! semifields, decides linear dependence and independence, and enumerates
//! the complete solution family, with brute-force oracles for verification.

pub mod dependence;
pub mod error;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod residual;
pub mod semifield;
pub mod solver;

pub use error::{Error, Result};
pub use linalg::{Matrix, RowVector, Vector};
pub use metric::Distance;
pub use semifield::{
    MaxPlus, MaxPlusExact, MaxPlusSemifield, MaxTimes, MinPlus, Scalar, Semifield, SemifieldKind,
    SemifieldSpec, DEFAULT_TOLERANCE,
};
