//! The distance function `ρ` between vectors and its Chebyshev form.
//!
//! `ρ(a,b)` is the `⊕`-sum of `bᵢ⁻¹aᵢ ⊕ aᵢ⁻¹bᵢ` over the common support,
//! `∞` when the supports differ, and `𝟙` when both vectors are zero. Every
//! finite value it produces is ≥ `𝟙`. Over max-plus reals the function
//! coincides with the Chebyshev metric `max |bᵢ − aᵢ|` on regular vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::semifield::{MaxPlusSemifield, Scalar, Semifield};

/// A distance value: finite (a semifield element) or the symbolic `∞`.
///
/// `∞` is not a semifield element; keeping it a dedicated variant prevents
/// silent arithmetic on it. `Infinite` compares greater than every finite
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance<S: Semifield> {
    Finite(Scalar<S>),
    Infinite,
}

impl<S: Semifield> Distance<S> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Distance::Infinite)
    }

    pub fn as_finite(&self) -> Option<&Scalar<S>> {
        match self {
            Distance::Finite(v) => Some(v),
            Distance::Infinite => None,
        }
    }

    /// True when the distance equals `𝟙` under the kind's equality policy.
    pub fn is_one(&self, tol: f64) -> bool {
        match self {
            Distance::Finite(v) => v.is_one(tol),
            Distance::Infinite => false,
        }
    }

    /// True when the distance is strictly greater than `𝟙` (equality tested
    /// under the kind's policy; `∞` counts as greater).
    pub fn gt_one(&self, tol: f64) -> bool {
        match self {
            Distance::Infinite => true,
            Distance::Finite(v) => !v.is_one(tol) && Scalar::one().leq(v),
        }
    }
}

impl<S: Semifield> PartialOrd for Distance<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Semifield> Ord for Distance<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Infinite, Distance::Infinite) => Ordering::Equal,
            (Distance::Infinite, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Finite(_), Distance::Infinite) => Ordering::Less,
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
        }
    }
}

impl<S: Semifield> fmt::Display for Distance<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(v) => write!(f, "{v}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// The distance `ρ(a,b) = ⊕_{i∈supp(a)} (bᵢ⁻¹aᵢ ⊕ aᵢ⁻¹bᵢ)`.
///
/// Returns `∞` when the supports differ and `𝟙` when both vectors are zero.
pub fn rho<S: Semifield>(a: &Vector<S>, b: &Vector<S>) -> Result<Distance<S>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "rho: expected {}, got {}",
            a.len(),
            b.len()
        )));
    }
    let mut acc: Option<Scalar<S>> = None;
    for (x, y) in a.iter().zip(b.iter()) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return Ok(Distance::Infinite),
            (false, false) => {
                let term = y.conj().mul(x).add(&x.conj().mul(y));
                acc = Some(match acc {
                    Some(cur) => cur.add(&term),
                    None => term,
                });
            }
        }
    }
    // empty common support means a = b = 𝟘, where ρ is defined to be 𝟙
    Ok(Distance::Finite(acc.unwrap_or_else(Scalar::one)))
}

/// The Chebyshev distance `max |bᵢ − aᵢ|` of two regular max-plus vectors,
/// as an ordinary real.
pub fn chebyshev<S: MaxPlusSemifield>(a: &Vector<S>, b: &Vector<S>) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "chebyshev: expected {}, got {}",
            a.len(),
            b.len()
        )));
    }
    let mut best = f64::NEG_INFINITY;
    for (x, y) in a.iter().zip(b.iter()) {
        match (x, y) {
            (Scalar::Val(x), Scalar::Val(y)) => {
                let diff = (S::elem_to_f64(y) - S::elem_to_f64(x)).abs();
                best = best.max(diff);
            }
            _ => return Err(Error::IrregularInput),
        }
    }
    Ok(best)
}
