//! Linear dependence and independence of column systems.
//!
//! A vector `d` is linearly dependent on columns `a₁,…,aₙ` iff the residual
//! `Δ_A(d)` equals `𝟙`. A system is linearly independent iff
//! `δ(A) = min_i Δ_{Aᵢ}(aᵢ) > 𝟙`, where `Aᵢ` drops column `i`. The
//! sequential reduction removes, in column order, every column that the
//! currently retained others generate; the survivors are an independent
//! system equivalent to the input.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::metric::Distance;
use crate::residual::{consistify, delta_on_consistent};
use crate::semifield::Semifield;

/// Verdict of a dependence test together with the raw residual it rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceCheck<S: Semifield> {
    pub dependent: bool,
    pub residual: Distance<S>,
}

/// Record of the sequential reduction: which columns survived, which were
/// removed, and the per-step residuals the decisions rest on.
///
/// `kept ∪ removed = {0..n}`, disjoint; the decisions are order-dependent
/// by construction and the trace makes every run reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace<S: Semifield> {
    pub kept: Vec<usize>,
    pub removed: Vec<usize>,
    pub step_residuals: Vec<Distance<S>>,
}

/// Residual of `d` against the span of the columns of `a`, with the
/// consistency transform applied internally.
fn span_residual<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<Distance<S>> {
    let consistency = consistify(a, d)?;
    Ok(delta_on_consistent(&consistency.a_hat, d))
}

/// Tests whether `d` is linearly dependent on the columns of `a`
/// (equivalently, `d` lies in their span), returning the raw residual
/// alongside the verdict.
pub fn is_dependent<S: Semifield>(
    d: &Vector<S>,
    a: &Matrix<S>,
    tol: f64,
) -> Result<DependenceCheck<S>> {
    let residual = span_residual(a, d)?;
    Ok(DependenceCheck {
        dependent: residual.is_one(tol),
        residual,
    })
}

/// The independence residual `δ(A) = min_i Δ_{Aᵢ}(aᵢ)`.
///
/// Undefined for a single column; `∞` sub-residuals participate in the
/// minimum as the top element.
pub fn delta_independence<S: Semifield>(a: &Matrix<S>) -> Result<Distance<S>> {
    if a.cols() < 2 {
        return Err(Error::SingleColumn);
    }
    let mut best: Option<Distance<S>> = None;
    for i in 0..a.cols() {
        let rest = a.column_removed(i).expect("at least two columns");
        let delta = span_residual(&rest, &a.column(i))?;
        best = Some(match best {
            Some(cur) => cur.min(delta),
            None => delta,
        });
    }
    Ok(best.expect("at least two columns"))
}

/// Tests linear independence: `δ(A) > 𝟙`, with a single nonzero column
/// independent by convention.
pub fn is_independent<S: Semifield>(a: &Matrix<S>, tol: f64) -> Result<bool> {
    if a.cols() == 1 {
        return Ok(!a.column(0).is_zero());
    }
    Ok(delta_independence(a)?.gt_one(tol))
}

/// Sequential reduction to an equivalent linearly independent system.
///
/// At step `i` column `i` is removed iff the columns still retained at that
/// moment (both survivors of earlier steps and not-yet-visited columns)
/// generate it. A step whose retained set is empty keeps its column and
/// records an `∞` residual.
pub fn reduce_to_independent<S: Semifield>(a: &Matrix<S>, tol: f64) -> Result<ReductionTrace<S>> {
    let n = a.cols();
    let mut retained = vec![true; n];
    let mut step_residuals = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != i && retained[j]).collect();
        if others.is_empty() {
            step_residuals.push(Distance::Infinite);
            continue;
        }
        let rest = a.select_columns(&others);
        let delta = span_residual(&rest, &a.column(i))?;
        if delta.is_one(tol) {
            retained[i] = false;
        }
        step_residuals.push(delta);
    }
    let kept: Vec<usize> = (0..n).filter(|&i| retained[i]).collect();
    let removed: Vec<usize> = (0..n).filter(|&i| !retained[i]).collect();
    Ok(ReductionTrace {
        kept,
        removed,
        step_residuals,
    })
}

/// Two systems are equivalent when each column of one is a linear
/// combination of the columns of the other.
pub fn systems_equivalent<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>, tol: f64) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "systems live in different dimensions: {} vs {}",
            a.rows(),
            b.rows()
        )));
    }
    for j in 0..a.cols() {
        if !is_dependent(&a.column(j), b, tol)?.dependent {
            return Ok(false);
        }
    }
    for j in 0..b.cols() {
        if !is_dependent(&b.column(j), a, tol)?.dependent {
            return Ok(false);
        }
    }
    Ok(true)
}
