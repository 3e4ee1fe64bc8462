//! The consistency transform `Â` and the residual `Δ_A(d)`.
//!
//! For a matrix `A` consistent with a nonzero vector `d`, the residual
//! `Δ_A(d) = √((A(d⁻A)⁻)⁻ d)` equals the ρ-distance from `d` to the linear
//! span of the columns of `A`, and the minimum is attained at
//! `x = Δ ⊗ (d⁻A)⁻`.
//!
//! Consistency is an explicit, checkable precondition: [`consistify`]
//! produces the transform, and [`residual_delta`] validates it rather than
//! applying it silently. [`distance_to_span`] is the all-inclusive entry
//! point that handles zero right-hand sides and applies the transform
//! internally.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::metric::Distance;
use crate::semifield::{Scalar, Semifield};

/// Output of the consistency transform.
///
/// `a_hat` differs from the input only at entries `(i,j)` with
/// `i ∉ I` and `j ∈ J`, which are set to `𝟘`, where `I` is the set of zero
/// rows of `d` and `J` the set of columns with a nonzero entry in some
/// `I`-row. For regular `d` the transform is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyResult<S: Semifield> {
    pub a_hat: Matrix<S>,
    /// `J`: columns forced to zero outside the `I`-rows (sorted).
    pub forced_zero_columns: Vec<usize>,
    /// `I`: indices with `dᵢ = 𝟘` (sorted).
    pub zero_rows_of_d: Vec<usize>,
}

/// Distance from a vector to the span of a matrix's columns, with the
/// minimizing combination when the distance is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDistanceResult<S: Semifield> {
    pub delta: Distance<S>,
    /// `x = Δ ⊗ (d⁻Â)⁻`; present iff `delta` is finite.
    pub minimizer: Option<Vector<S>>,
    /// `A ⊗ minimizer`; present iff `delta` is finite.
    pub nearest_point: Option<Vector<S>>,
}

fn check_dims<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<()> {
    if a.rows() != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, vector has {} components",
            a.rows(),
            d.len()
        )));
    }
    Ok(())
}

fn zero_rows_of<S: Semifield>(d: &Vector<S>) -> Vec<usize> {
    d.iter()
        .enumerate()
        .filter(|(_, c)| c.is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn forced_columns<S: Semifield>(a: &Matrix<S>, zero_rows: &[usize]) -> Vec<usize> {
    (0..a.cols())
        .filter(|&j| zero_rows.iter().any(|&i| !a.get(i, j).is_zero()))
        .collect()
}

/// Produces the matrix `Â` consistent with `d`, together with the index
/// sets `I` and `J`.
///
/// Requires `d ≠ 𝟘`. Guarantee (tested as a property): for every `x`,
/// `ρ(Ax, d) = ρ(Âx, d)`.
pub fn consistify<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<ConsistencyResult<S>> {
    check_dims(a, d)?;
    if d.is_zero() {
        return Err(Error::ZeroVectorD);
    }
    let zero_rows = zero_rows_of(d);
    let forced = forced_columns(a, &zero_rows);
    let mut a_hat = a.clone();
    if !forced.is_empty() {
        let in_i = |i: usize| zero_rows.binary_search(&i).is_ok();
        for i in (0..a.rows()).filter(|&i| !in_i(i)) {
            for &j in &forced {
                *a_hat.get_mut(i, j) = Scalar::Zero;
            }
        }
    }
    Ok(ConsistencyResult {
        a_hat,
        forced_zero_columns: forced,
        zero_rows_of_d: zero_rows,
    })
}

/// True when `A` is already consistent with `d`, i.e. the consistency
/// transform would leave it unchanged.
pub fn is_consistent<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> bool {
    let zero_rows = zero_rows_of(d);
    if zero_rows.is_empty() {
        return true;
    }
    let forced = forced_columns(a, &zero_rows);
    let in_i = |i: usize| zero_rows.binary_search(&i).is_ok();
    forced.iter().all(|&j| {
        (0..a.rows())
            .filter(|&i| !in_i(i))
            .all(|i| a.get(i, j).is_zero())
    })
}

/// The residual and its minimizer, computed on a matrix already consistent
/// with `d ≠ 𝟘`.
///
/// The residual is `∞` exactly when some row outside `I` is all-`𝟘`
/// (equivalently, when the instance reduced by `I`-rows and `J`-columns has
/// a zero row); rows inside `I` are matched by zero components of `d` and
/// drop out of every `⊕`-sum on their own.
fn delta_and_minimizer<S: Semifield>(
    a_hat: &Matrix<S>,
    d: &Vector<S>,
) -> (Distance<S>, Option<Vector<S>>) {
    let zero_rows = zero_rows_of(d);
    let in_i = |i: usize| zero_rows.binary_search(&i).is_ok();
    for i in 0..a_hat.rows() {
        if !in_i(i) && (0..a_hat.cols()).all(|j| a_hat.get(i, j).is_zero()) {
            return (Distance::Infinite, None);
        }
    }
    let d_conj = match d.conjugate() {
        Ok(r) => r,
        Err(_) => return (Distance::Infinite, None),
    };
    let d_a = match d_conj.mul_mat(a_hat) {
        Ok(r) => r,
        Err(_) => return (Distance::Infinite, None),
    };
    let u = match d_a.conjugate() {
        Ok(v) => v,
        Err(_) => return (Distance::Infinite, None),
    };
    let y = a_hat.mul_vec(&u).expect("shapes agree by construction");
    let y_conj = match y.conjugate() {
        Ok(r) => r,
        Err(_) => return (Distance::Infinite, None),
    };
    let delta_sq = y_conj.mul_vec(d).expect("shapes agree by construction");
    let delta = delta_sq.sqrt();
    let minimizer = u.scale(&delta);
    (Distance::Finite(delta), Some(minimizer))
}

/// The residual `Δ_A(d) = √((A(d⁻A)⁻)⁻ d)` of a consistent pair, or `∞`
/// when the (reduced) matrix is irregular.
///
/// Validates consistency and returns [`Error::InconsistentInput`] when the
/// consistency transform was skipped. Finite residuals are always ≥ `𝟙`.
pub fn residual_delta<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<Distance<S>> {
    check_dims(a, d)?;
    if d.is_zero() {
        return Err(Error::ZeroVectorD);
    }
    if !is_consistent(a, d) {
        return Err(Error::InconsistentInput);
    }
    Ok(delta_and_minimizer(a, d).0)
}

/// Residual of a pair already known to be consistent (both sets of callers
/// in this crate construct such pairs via [`consistify`]).
pub(crate) fn delta_on_consistent<S: Semifield>(a_hat: &Matrix<S>, d: &Vector<S>) -> Distance<S> {
    delta_and_minimizer(a_hat, d).0
}

/// Distance from `d` to the linear span of the columns of `A`, with the
/// minimizing combination and the nearest span point.
///
/// Handles every input: `d = 𝟘` yields `Finite(𝟙)` with the zero minimizer
/// (the span always contains `𝟘`); otherwise the consistency transform is
/// applied and the closed form evaluated on `Â`. Zero columns of `A`
/// contribute nothing and receive `𝟘` in the minimizer.
pub fn distance_to_span<S: Semifield>(a: &Matrix<S>, d: &Vector<S>) -> Result<SpanDistanceResult<S>> {
    check_dims(a, d)?;
    if d.is_zero() {
        let minimizer = Vector::zeros(a.cols());
        let nearest = Vector::zeros(a.rows());
        return Ok(SpanDistanceResult {
            delta: Distance::Finite(Scalar::one()),
            minimizer: Some(minimizer),
            nearest_point: Some(nearest),
        });
    }
    let consistency = consistify(a, d)?;
    let (delta, minimizer) = delta_and_minimizer(&consistency.a_hat, d);
    let nearest_point = minimizer
        .as_ref()
        .map(|x| a.mul_vec(x).expect("shapes agree by construction"));
    Ok(SpanDistanceResult {
        delta,
        minimizer,
        nearest_point,
    })
}
