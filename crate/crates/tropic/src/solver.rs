//! Solution theory for the vector equation `A ⊗ x = d`.
//!
//! The equation has solutions iff the residual `Δ` of the consistified
//! instance equals `𝟙`; the principal solution `(d⁻A)⁻` is then the greatest
//! one, and it is unique exactly when all columns form a minimal generating
//! system for `d`. When the equation is unsolvable, the pseudo-solution
//! `Δ ⊗ (d⁻A)⁻` realizes the minimum distance to `d` over the span.
//!
//! The general solution is a family of boxes, one per minimal generating
//! subset `I` of the columns: `xᵢ = (d⁻aᵢ)⁻` for `i ∈ I` and
//! `xᵢ ≤ (d⁻aᵢ)⁻` otherwise. Box data is computed on the consistified
//! matrix so that the bounds of columns touching zero rows of `d` collapse
//! to `𝟘`, exactly as every solution requires.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::metric::Distance;
use crate::residual::{consistify, delta_on_consistent};
use crate::semifield::{Scalar, Semifield};

/// Default cap on the number of columns entered into subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Solvability verdict of [`solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NoSolution,
    Unique,
    Family,
}

/// Outcome of [`solve`]: the verdict, the residual it rests on, and the
/// principal and pseudo solutions where they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport<S: Semifield> {
    pub verdict: Verdict,
    pub residual: Distance<S>,
    /// The greatest solution `(d⁻A)⁻`; present iff the verdict is not
    /// `NoSolution`. Components at `free_indices` are reported as `𝟘` and
    /// actually range over all of `𝕏`.
    pub principal: Option<Vector<S>>,
    /// `Δ ⊗ (d⁻A)⁻`; present whenever the residual is finite.
    pub pseudo: Option<Vector<S>>,
    /// Original indices of zero columns: their components are unconstrained.
    pub free_indices: Vec<usize>,
}

/// Upper bound of a non-fixed box component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound<S: Semifield> {
    Finite(Scalar<S>),
    /// The component ranges over all of `𝕏` (zero columns only).
    Unbounded,
}

/// One member `x_I` of the general solution family: components fixed on a
/// minimal generating index set `I`, componentwise upper bounds elsewhere.
///
/// Every selection with `xᵢ = fixed[i]` for `i ∈ I` and `𝟘 ≤ xᵢ ≤ bound`
/// otherwise solves `A ⊗ x = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxSolution<S: Semifield> {
    /// `I`, sorted ascending (original column indices).
    pub index_set: Vec<usize>,
    /// `i ∈ I ↦ (d⁻aᵢ)⁻`, sorted by index.
    pub fixed: Vec<(usize, Scalar<S>)>,
    /// `i ∉ I ↦ (d⁻aᵢ)⁻` (or unbounded for zero columns), sorted by index.
    pub upper_bounds: Vec<(usize, Bound<S>)>,
}

/// The complete solution family; empty iff the equation is unsolvable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSolution<S: Semifield> {
    /// Boxes in increasing characteristic-bitmask order of `I`.
    pub family: Vec<BoxSolution<S>>,
    /// True when the enumeration was exhaustive.
    pub complete: bool,
}

/// Short-circuit verdicts discovered during preprocessing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialVerdict {
    /// `A = 𝟘` and `d = 𝟘`: every vector solves the equation.
    AllVectors,
    /// `A = 𝟘` and `d ≠ 𝟘`: no solution exists.
    NoSolution,
    /// `d = 𝟘`: `x = 𝟘` solves; unique iff `A` has no zero columns.
    ZeroVector { unique: bool },
}

/// Result of [`preprocess`]: degenerate cases resolved, zero columns
/// stripped, and the consistency transform applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessed<S: Semifield> {
    /// The reduced, consistified matrix; `None` exactly when `trivial`
    /// short-circuits the instance.
    pub matrix: Option<Matrix<S>>,
    /// Original indices of the retained (nonzero) columns.
    pub kept_columns: Vec<usize>,
    /// Original indices of removed zero columns; these components of `x`
    /// take all values in `𝕏`.
    pub free_indices: Vec<usize>,
    /// `J` of the consistency transform, as original column indices.
    pub forced_zero_columns: Vec<usize>,
    /// `I`: zero rows of `d`.
    pub zero_rows_of_d: Vec<usize>,
    pub trivial: Option<TrivialVerdict>,
}

/// Strips zero columns, resolves the `A = 𝟘` and `d = 𝟘` cases, and applies
/// the consistency transform to what remains.
pub fn preprocess<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<Preprocessed<S>> {
    if a.rows() != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, vector has {} components",
            a.rows(),
            d.len()
        )));
    }
    let free_indices = a.zero_columns();
    let kept_columns: Vec<usize> = (0..a.cols())
        .filter(|j| free_indices.binary_search(j).is_err())
        .collect();
    if kept_columns.is_empty() {
        let trivial = if d.is_zero() {
            TrivialVerdict::AllVectors
        } else {
            TrivialVerdict::NoSolution
        };
        return Ok(Preprocessed {
            matrix: None,
            kept_columns,
            free_indices,
            forced_zero_columns: Vec::new(),
            zero_rows_of_d: Vec::new(),
            trivial: Some(trivial),
        });
    }
    if d.is_zero() {
        return Ok(Preprocessed {
            matrix: None,
            kept_columns,
            free_indices: free_indices.clone(),
            forced_zero_columns: Vec::new(),
            zero_rows_of_d: Vec::new(),
            trivial: Some(TrivialVerdict::ZeroVector {
                unique: free_indices.is_empty(),
            }),
        });
    }
    let reduced = a.select_columns(&kept_columns);
    let consistency = consistify(&reduced, d)?;
    Ok(Preprocessed {
        matrix: Some(consistency.a_hat),
        forced_zero_columns: consistency
            .forced_zero_columns
            .iter()
            .map(|&j| kept_columns[j])
            .collect(),
        zero_rows_of_d: consistency.zero_rows_of_d,
        kept_columns,
        free_indices,
        trivial: None,
    })
}

/// Places a reduced-system vector back into `n` components, `𝟘` elsewhere.
fn embed<S: Semifield>(values: &Vector<S>, kept: &[usize], n: usize) -> Vector<S> {
    let mut full = vec![Scalar::Zero; n];
    for (slot, value) in kept.iter().zip(values.iter()) {
        full[*slot] = value.clone();
    }
    Vector::new(full)
}

/// The principal solution `(d⁻A)⁻` of a consistified reduced instance.
/// `None` when every column is forced to zero (the residual is `∞` then).
fn principal_reduced<S: Semifield>(a_hat: &Matrix<S>, d: &Vector<S>) -> Option<Vector<S>> {
    let d_a = d.conjugate().ok()?.mul_mat(a_hat).ok()?;
    d_a.conjugate().ok()
}

/// True when all columns of the (consistified) matrix form a minimal
/// generating system for `d`: no single-column removal still generates it.
fn full_set_minimal<S: Semifield>(a_hat: &Matrix<S>, d: &Vector<S>, tol: f64) -> bool {
    for i in 0..a_hat.cols() {
        match a_hat.column_removed(i) {
            // removing the only column leaves the empty system, which
            // generates nothing but 𝟘
            None => continue,
            Some(sub) => {
                if delta_on_consistent(&sub, d).is_one(tol) {
                    return false;
                }
            }
        }
    }
    true
}

/// Solves `A ⊗ x = d`: existence, the principal solution, and uniqueness.
pub fn solve<S: Semifield>(a: &Matrix<S>, d: &Vector<S>, tol: f64) -> Result<SolutionReport<S>> {
    let pre = preprocess(a, d)?;
    let n = a.cols();
    match pre.trivial {
        Some(TrivialVerdict::AllVectors) => Ok(SolutionReport {
            verdict: Verdict::Family,
            residual: Distance::Finite(Scalar::one()),
            principal: Some(Vector::zeros(n)),
            pseudo: Some(Vector::zeros(n)),
            free_indices: pre.free_indices,
        }),
        Some(TrivialVerdict::NoSolution) => Ok(SolutionReport {
            verdict: Verdict::NoSolution,
            residual: Distance::Infinite,
            principal: None,
            pseudo: None,
            free_indices: pre.free_indices,
        }),
        Some(TrivialVerdict::ZeroVector { unique }) => Ok(SolutionReport {
            verdict: if unique { Verdict::Unique } else { Verdict::Family },
            residual: Distance::Finite(Scalar::one()),
            principal: Some(Vector::zeros(n)),
            pseudo: Some(Vector::zeros(n)),
            free_indices: pre.free_indices,
        }),
        None => {
            let a_hat = pre.matrix.as_ref().expect("non-trivial instance");
            let residual = delta_on_consistent(a_hat, d);
            let delta = match residual.as_finite() {
                None => {
                    return Ok(SolutionReport {
                        verdict: Verdict::NoSolution,
                        residual,
                        principal: None,
                        pseudo: None,
                        free_indices: pre.free_indices,
                    })
                }
                Some(delta) => delta.clone(),
            };
            let u = principal_reduced(a_hat, d).expect("finite residual has a principal vector");
            let pseudo = embed(&u.scale(&delta), &pre.kept_columns, n);
            if !residual.is_one(tol) {
                return Ok(SolutionReport {
                    verdict: Verdict::NoSolution,
                    residual,
                    principal: None,
                    pseudo: Some(pseudo),
                    free_indices: pre.free_indices,
                });
            }
            let principal = embed(&u, &pre.kept_columns, n);
            let unique = pre.free_indices.is_empty() && full_set_minimal(a_hat, d, tol);
            Ok(SolutionReport {
                verdict: if unique { Verdict::Unique } else { Verdict::Family },
                residual,
                principal: Some(principal),
                pseudo: Some(pseudo),
                free_indices: pre.free_indices,
            })
        }
    }
}

/// The pseudo-solution `x = Δ ⊗ (d⁻A)⁻`, defined whenever `Δ` is finite.
///
/// It satisfies `A ⊗ x = Δ ⊗ A ⊗ (d⁻A)⁻` and realizes the minimum
/// ρ-distance from the span of `A` to `d`; when `Δ = 𝟙` it is an actual
/// solution.
pub fn pseudo_solve<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<Vector<S>> {
    let pre = preprocess(a, d)?;
    match pre.trivial {
        Some(TrivialVerdict::NoSolution) => Err(Error::InfiniteResidual),
        Some(_) => Ok(Vector::zeros(a.cols())),
        None => {
            let a_hat = pre.matrix.as_ref().expect("non-trivial instance");
            match delta_on_consistent(a_hat, d).as_finite() {
                None => Err(Error::InfiniteResidual),
                Some(delta) => {
                    let u = principal_reduced(a_hat, d)
                        .expect("finite residual has a principal vector");
                    Ok(embed(&u.scale(delta), &pre.kept_columns, a.cols()))
                }
            }
        }
    }
}

/// Checks `A ⊗ x = d` under the kind's equality policy.
pub fn verify<S: Semifield>(a: &Matrix<S>, d: &Vector<S>, x: &Vector<S>, tol: f64) -> Result<bool> {
    if a.rows() != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, vector has {} components",
            a.rows(),
            d.len()
        )));
    }
    Ok(a.mul_vec(x)?.approx_eq(d, tol))
}

/// Enumerates the complete solution family of `A ⊗ x = d`.
///
/// Every subset of the retained columns is tested for generating `d`
/// (via `Δ = 𝟙` on the sub-instance); minimality needs only the
/// one-element-removed subsets because generation is monotone. One box is
/// emitted per minimal generating subset, in increasing
/// characteristic-bitmask order.
pub fn general_solution<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    cap: usize,
    tol: f64,
) -> Result<GeneralSolution<S>> {
    let pre = preprocess(a, d)?;
    let kept = &pre.kept_columns;
    let free = &pre.free_indices;

    if d.is_zero() {
        // the empty set generates 𝟘; nonzero columns are capped at 𝟘
        let upper_bounds = bound_list(kept.iter().map(|&j| (j, Bound::Finite(Scalar::Zero))), free);
        return Ok(GeneralSolution {
            family: vec![BoxSolution {
                index_set: Vec::new(),
                fixed: Vec::new(),
                upper_bounds,
            }],
            complete: true,
        });
    }
    if kept.is_empty() {
        // A = 𝟘 with d ≠ 𝟘: nothing generates d
        return Ok(GeneralSolution {
            family: Vec::new(),
            complete: true,
        });
    }
    if kept.len() > cap {
        return Err(Error::EnumerationCapExceeded {
            columns: kept.len(),
            cap,
        });
    }

    let a_hat = pre.matrix.as_ref().expect("non-trivial instance");
    let k = kept.len();
    // (d⁻âⱼ)⁻ per retained column: the fixed value inside I, the bound outside
    let d_a = d
        .conjugate()
        .expect("d is nonzero")
        .mul_mat(a_hat)
        .expect("shapes agree by construction");
    let bounds: Vec<Scalar<S>> = d_a.iter().map(Scalar::conj).collect();

    let mut generates = vec![false; 1usize << k];
    for (mask, slot) in generates.iter_mut().enumerate().skip(1) {
        let cols: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let sub = a_hat.select_columns(&cols);
        *slot = delta_on_consistent(&sub, d).is_one(tol);
    }

    let mut family = Vec::new();
    for mask in 1..(1usize << k) {
        if !generates[mask] {
            continue;
        }
        let minimal = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| !generates[mask & !(1 << i)]);
        if !minimal {
            continue;
        }
        let mut index_set = Vec::new();
        let mut fixed = Vec::new();
        let mut finite_bounds = Vec::new();
        for i in 0..k {
            if mask & (1 << i) != 0 {
                index_set.push(kept[i]);
                fixed.push((kept[i], bounds[i].clone()));
            } else {
                finite_bounds.push((kept[i], Bound::Finite(bounds[i].clone())));
            }
        }
        family.push(BoxSolution {
            index_set,
            fixed,
            upper_bounds: bound_list(finite_bounds.into_iter(), free),
        });
    }
    Ok(GeneralSolution {
        family,
        complete: true,
    })
}

/// Merges finite bounds with unbounded free components, sorted by index.
fn bound_list<S: Semifield>(
    finite: impl Iterator<Item = (usize, Bound<S>)>,
    free: &[usize],
) -> Vec<(usize, Bound<S>)> {
    let mut out: Vec<(usize, Bound<S>)> = finite.collect();
    out.extend(free.iter().map(|&j| (j, Bound::Unbounded)));
    out.sort_by_key(|(j, _)| *j);
    out
}
