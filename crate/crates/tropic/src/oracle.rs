//! Brute-force reference implementations for validating closed-form results.
//!
//! [`grid_min_distance`] minimizes `ρ(A⊗x, d)` over a finite grid of
//! regular vectors plus the closed-form candidate point `Δ(d⁻A)⁻`, so the
//! oracle-vs-formula comparison is exact rather than grid-limited.
//! [`enumerate_minimal_generators`] tests every column subset for
//! generating `d` with the principal-solution check — a route independent
//! of the residual — and filters to inclusion-minimal subsets by comparing
//! against all proper subsets. [`random_instance`] produces deterministic
//! max-plus rational instances on the quarter-integer lattice.
//!
//! These functions live in the library (not test code) so the results can
//! be reproduced from the command line.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::metric::{rho, Distance};
use crate::residual::{consistify, distance_to_span};
use crate::semifield::{MaxPlusExact, Scalar, Semifield, SemifieldKind};

/// Default limit on the number of grid points a sweep may visit.
pub const DEFAULT_GRID_POINT_LIMIT: u128 = 10_000_000;

/// Cap on the column count of [`enumerate_minimal_generators`].
pub const GENERATOR_ENUMERATION_CAP: usize = 12;

/// A regular search grid: per-component values `lo, lo⊗step, lo⊗step², …`
/// up to `hi`, in `dims` dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec<S: Semifield> {
    lo: S::Elem,
    hi: S::Elem,
    step: S::Elem,
    dims: usize,
}

impl<S: Semifield> GridSpec<S> {
    /// Builds a grid; `lo < hi`, `step > 𝟙`, all three nonzero, `dims ≥ 1`.
    pub fn new(lo: Scalar<S>, hi: Scalar<S>, step: Scalar<S>, dims: usize) -> Result<Self> {
        let invalid = |msg: &str| Error::InvalidScalar(format!("grid: {msg}"));
        let (lo, hi, step) = match (lo, hi, step) {
            (Scalar::Val(lo), Scalar::Val(hi), Scalar::Val(step)) => (lo, hi, step),
            _ => return Err(invalid("bounds and step must be nonzero")),
        };
        if dims == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if S::cmp(&lo, &hi) != std::cmp::Ordering::Less {
            return Err(invalid("lower bound must be below upper bound"));
        }
        if S::cmp(&step, &S::one()) != std::cmp::Ordering::Greater {
            return Err(invalid("step must exceed the identity"));
        }
        Ok(GridSpec { lo, hi, step, dims })
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// The per-component value alphabet, ascending in the induced order.
    pub fn values(&self) -> Vec<Scalar<S>> {
        let mut out = Vec::new();
        let mut cur = self.lo.clone();
        loop {
            if S::cmp(&cur, &self.hi) == std::cmp::Ordering::Greater {
                break;
            }
            out.push(Scalar::Val(cur.clone()));
            cur = S::mul(&cur, &self.step);
        }
        out
    }
}

/// Minimizes `ρ(A⊗x, d)` over the grid plus the closed-form candidate
/// point, with the default point limit of 10⁷.
pub fn grid_min_distance<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    grid: &GridSpec<S>,
) -> Result<(Distance<S>, Vector<S>)> {
    grid_min_distance_with_cap(a, d, grid, DEFAULT_GRID_POINT_LIMIT)
}

/// [`grid_min_distance`] with an explicit point limit.
///
/// The candidate `Δ(d⁻A)⁻` is evaluated first and each grid point after it
/// in lexicographic order; only a strictly smaller ρ replaces the incumbent,
/// so the candidate wins all ties. On max-plus rational data whose values
/// share a small denominator the sweep runs on scaled integers and skips
/// subtrees that provably cannot contain a strictly better point; the
/// result is identical to the unconditional sweep's.
pub fn grid_min_distance_with_cap<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    grid: &GridSpec<S>,
    limit: u128,
) -> Result<(Distance<S>, Vector<S>)> {
    if grid.dims != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "grid has {} dimensions, matrix has {} columns",
            grid.dims,
            a.cols()
        )));
    }
    if a.rows() != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, vector has {} components",
            a.rows(),
            d.len()
        )));
    }
    let values = grid.values();
    let points = (values.len() as u128)
        .checked_pow(grid.dims as u32)
        .unwrap_or(u128::MAX);
    if points > limit {
        return Err(Error::GridTooLarge { points, limit });
    }

    // the candidate seeds the incumbent; its ρ is evaluated honestly
    let span = distance_to_span(a, d)?;
    let mut best: Option<(Distance<S>, Vector<S>)> = span.minimizer.map(|x| {
        let at = rho(&a.mul_vec(&x).expect("shapes agree"), d).expect("shapes agree");
        (at, x)
    });

    match int_sweep(a, d, &values, best.as_ref().map(|(b, _)| b)) {
        Some(Some(point)) => {
            let exact = rho(&a.mul_vec(&point).expect("shapes agree"), d).expect("shapes agree");
            best = Some((exact, point));
        }
        Some(None) => {} // sweep ran; nothing strictly better than the incumbent
        None => generic_sweep(a, d, &values, &mut best),
    }

    Ok(best.unwrap_or_else(|| {
        // every evaluation was ∞ and no candidate exists
        let first = Vector::new(vec![values[0].clone(); grid.dims]);
        (Distance::Infinite, first)
    }))
}

/// ρ(A⊗x, d) for one assignment, aborting as soon as the running value can
/// no longer beat `best`. `None` means "not strictly better than best".
fn rho_at_point<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    x: &[Scalar<S>],
    best: Option<&Distance<S>>,
) -> Option<Distance<S>> {
    let mut acc: Option<Scalar<S>> = None;
    for i in 0..a.rows() {
        let mut y = Scalar::Zero;
        for (j, xj) in x.iter().enumerate() {
            y = y.add(&a.get(i, j).mul(xj));
        }
        let di = d.get(i);
        match (y.is_zero(), di.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return None,
            (false, false) => {
                let term = di.conj().mul(&y).add(&y.conj().mul(di));
                let next = match acc {
                    Some(cur) => cur.add(&term),
                    None => term,
                };
                if let Some(b) = best {
                    if Distance::Finite(next.clone()) >= *b {
                        return None;
                    }
                }
                acc = Some(next);
            }
        }
    }
    let value = Distance::Finite(acc.unwrap_or_else(Scalar::one));
    match best {
        Some(b) if value >= *b => None,
        _ => Some(value),
    }
}

/// Plain lexicographic sweep used when no exact integer view exists.
fn generic_sweep<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    values: &[Scalar<S>],
    best: &mut Option<(Distance<S>, Vector<S>)>,
) {
    let n = a.cols();
    let mut indices = vec![0usize; n];
    let mut x: Vec<Scalar<S>> = vec![values[0].clone(); n];
    loop {
        if let Some(value) = rho_at_point(a, d, &x, best.as_ref().map(|(b, _)| b)) {
            *best = Some((value, Vector::new(x.clone())));
        } else if best.is_none() {
            // remember the earliest point even when it evaluates to ∞
            *best = Some((Distance::Infinite, Vector::new(x.clone())));
        }
        // advance the odometer, last dimension fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < values.len() {
                x[pos] = values[indices[pos]].clone();
                break;
            }
            indices[pos] = 0;
            x[pos] = values[0].clone();
        }
    }
}

/// Exact branch-and-bound state for the scaled-integer sweep.
struct IntSearch<'a> {
    vals: &'a [i64],
    /// per grid dimension: the (live-row, scaled entry) pairs of that column
    col_entries: &'a [Vec<(usize, i64)>],
    /// `suffix_max[k][r] = max_{j ≥ k} a_rj` (scaled), `None` when empty
    suffix_max: &'a [Vec<Option<i64>>],
    d_live: &'a [i64],
    hi: i64,
    dims: usize,
    incumbent: Option<i64>,
    winner: Option<Vec<usize>>,
    indices: Vec<usize>,
}

impl IntSearch<'_> {
    /// `prefix[r] = max_{j < level} (a_rj + x_j)`, `i64::MIN/4` when empty.
    fn dfs(&mut self, level: usize, prefix: &[i64]) {
        if level == self.dims {
            let mut value = 0i64;
            for (r, &p) in prefix.iter().enumerate() {
                value = value.max((p - self.d_live[r]).abs());
                if let Some(b) = self.incumbent {
                    if value >= b {
                        return;
                    }
                }
            }
            self.incumbent = Some(value);
            self.winner = Some(self.indices.clone());
            return;
        }
        let mut next = prefix.to_vec();
        for (vi, &v) in self.vals.iter().enumerate() {
            self.indices[level] = vi;
            next.copy_from_slice(prefix);
            for &(r, entry) in &self.col_entries[level] {
                next[r] = next[r].max(entry + v);
            }
            if let Some(b) = self.incumbent {
                // per row, every completed point below this node satisfies
                // next[r] ≤ y_r ≤ max(next[r], suffix_max + hi), which bounds
                // its ρ term from below in both directions
                let mut bound = 0i64;
                for (r, &p) in next.iter().enumerate() {
                    let over = p - self.d_live[r];
                    let reach = match self.suffix_max[level + 1][r] {
                        Some(s) => p.max(s + self.hi),
                        None => p,
                    };
                    let under = self.d_live[r] - reach;
                    bound = bound.max(over).max(under);
                }
                if bound >= b {
                    continue;
                }
            }
            self.dfs(level + 1, &next);
        }
    }
}

/// Exact scaled-integer sweep for max-plus rational data.
///
/// Returns `None` when the fast path does not apply (wrong kind, values off
/// the shared-denominator lattice); `Some(None)` when it ran and found
/// nothing strictly better than the incumbent; `Some(Some(point))` with the
/// winning grid point otherwise (its ρ is recomputed exactly by the caller).
fn int_sweep<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    values: &[Scalar<S>],
    best: Option<&Distance<S>>,
) -> Option<Option<Vector<S>>> {
    if S::KIND != SemifieldKind::MaxPlusRational {
        return None;
    }
    let m = a.rows();
    let n = a.cols();

    let mut elems: Vec<&S::Elem> = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if let Scalar::Val(e) = a.get(i, j) {
                elems.push(e);
            }
        }
    }
    for c in d.iter().chain(values.iter()) {
        if let Scalar::Val(e) = c {
            elems.push(e);
        }
    }
    if let Some(Distance::Finite(Scalar::Val(e))) = best {
        elems.push(e);
    }
    let scale = S::common_denominator(elems.into_iter())?;

    let incumbent: Option<i64> = match best {
        None | Some(Distance::Infinite) => None,
        Some(Distance::Finite(Scalar::Zero)) => return None, // ρ ≥ 𝟙; unexpected
        Some(Distance::Finite(Scalar::Val(e))) => Some(S::scaled_int(e, scale)?),
    };

    let mut rows: Vec<Vec<(usize, i64)>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::new();
        for j in 0..n {
            match a.get(i, j) {
                Scalar::Zero => {}
                Scalar::Val(e) => row.push((j, S::scaled_int(e, scale)?)),
            }
        }
        rows.push(row);
    }
    let mut d_scaled: Vec<Option<i64>> = Vec::with_capacity(m);
    for c in d.iter() {
        match c {
            Scalar::Zero => d_scaled.push(None),
            Scalar::Val(e) => d_scaled.push(Some(S::scaled_int(e, scale)?)),
        }
    }
    let mut vals: Vec<i64> = Vec::with_capacity(values.len());
    for v in values {
        match v {
            Scalar::Zero => return None,
            Scalar::Val(e) => vals.push(S::scaled_int(e, scale)?),
        }
    }

    // over a grid of regular vectors supp(Ax) is exactly the set of nonzero
    // rows; a mismatch with supp(d) makes every grid evaluation ∞
    for i in 0..m {
        if rows[i].is_empty() != d_scaled[i].is_none() {
            return Some(None);
        }
    }
    let live: Vec<usize> = (0..m).filter(|&i| !rows[i].is_empty()).collect();
    if live.is_empty() {
        return Some(None); // d = 𝟘; the candidate already covers this
    }
    let d_live: Vec<i64> = live.iter().map(|&i| d_scaled[i].unwrap()).collect();

    let mut col_entries: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for (r, &i) in live.iter().enumerate() {
        for &(j, v) in &rows[i] {
            col_entries[j].push((r, v));
        }
    }
    let mut suffix_max: Vec<Vec<Option<i64>>> = vec![vec![None; live.len()]; n + 1];
    for level in (0..n).rev() {
        suffix_max[level] = suffix_max[level + 1].clone();
        for &(r, v) in &col_entries[level] {
            let slot = &mut suffix_max[level][r];
            *slot = Some(slot.map_or(v, |cur| cur.max(v)));
        }
    }

    let mut search = IntSearch {
        vals: &vals,
        col_entries: &col_entries,
        suffix_max: &suffix_max,
        d_live: &d_live,
        hi: *vals.last().expect("grid has at least one value"),
        dims: n,
        incumbent,
        winner: None,
        indices: vec![0; n],
    };
    search.dfs(0, &vec![i64::MIN / 4; live.len()]);

    Some(search.winner.map(|indices| {
        Vector::new(
            indices
                .iter()
                .map(|&vi| values[vi].clone())
                .collect::<Vec<_>>(),
        )
    }))
}

/// Enumerates all inclusion-minimal column subsets that generate `d`,
/// sorted by increasing characteristic bitmask.
///
/// Generation is decided by the principal-solution check on the
/// consistified sub-instance: `A_I ⊗ (d⁻Â_I)⁻ = d`. For `d = 𝟘` the empty
/// set is the unique minimal generator.
pub fn enumerate_minimal_generators<S: Semifield>(
    a: &Matrix<S>,
    d: &Vector<S>,
    tol: f64,
) -> Result<Vec<Vec<usize>>> {
    if a.rows() != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "matrix has {} rows, vector has {} components",
            a.rows(),
            d.len()
        )));
    }
    let n = a.cols();
    if n > GENERATOR_ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded {
            columns: n,
            cap: GENERATOR_ENUMERATION_CAP,
        });
    }
    if d.is_zero() {
        return Ok(vec![Vec::new()]);
    }

    let mut generates = vec![false; 1usize << n];
    for (mask, slot) in generates.iter_mut().enumerate().skip(1) {
        let cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        let sub = a.select_columns(&cols);
        if sub.is_zero() {
            continue;
        }
        let hat = match consistify(&sub, d) {
            Ok(c) => c.a_hat,
            Err(_) => continue,
        };
        let principal = d
            .conjugate()
            .ok()
            .and_then(|r| r.mul_mat(&hat).ok())
            .and_then(|da| da.conjugate().ok());
        let Some(x) = principal else { continue };
        let product = sub.mul_vec(&x).expect("shapes agree by construction");
        *slot = product.approx_eq(d, tol);
    }

    let mut out = Vec::new();
    for mask in 1usize..(1 << n) {
        if !generates[mask] {
            continue;
        }
        // walk all proper sub-masks; minimality is definition-level here
        let mut minimal = true;
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if generates[sub] {
                minimal = false;
                break;
            }
            sub = (sub - 1) & mask;
        }
        if minimal {
            out.push((0..n).filter(|j| mask & (1 << j) != 0).collect());
        }
    }
    Ok(out)
}

/// Deterministic pseudo-random max-plus rational instance.
///
/// Entries are `𝟘` with probability `1 − density` and otherwise uniform
/// on the quarter-integer lattice in `[lo, hi]`. Columns of `A` and the
/// vector `d` are redrawn when they come out all-`𝟘` (with a forced nonzero
/// entry as a deterministic last resort, which only triggers at extremely
/// low densities).
pub fn random_instance(
    seed: u64,
    m: usize,
    n: usize,
    density: f64,
    lo: i64,
    hi: i64,
) -> (Matrix<MaxPlusExact>, Vector<MaxPlusExact>) {
    assert!(m > 0 && n > 0, "dimensions must be positive");
    assert!((0.0..=1.0).contains(&density), "density must lie in [0,1]");
    assert!(lo < hi, "value range must be nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let column = |rng: &mut ChaCha8Rng| -> Vec<Scalar<MaxPlusExact>> {
        for _ in 0..1000 {
            let col: Vec<Scalar<MaxPlusExact>> =
                (0..m).map(|_| random_entry(rng, density, lo, hi)).collect();
            if col.iter().any(|c| !c.is_zero()) {
                return col;
            }
        }
        let mut col = vec![Scalar::Zero; m];
        let at = rng.gen_range(0..m);
        col[at] = random_lattice_value(rng, lo, hi);
        col
    };
    let cols: Vec<Vector<MaxPlusExact>> = (0..n)
        .map(|_| Vector::new(column(&mut rng)))
        .collect();
    let a = Matrix::from_columns(&cols).expect("equal column lengths");
    let d = Vector::new(column(&mut rng));
    (a, d)
}

fn random_entry(rng: &mut ChaCha8Rng, density: f64, lo: i64, hi: i64) -> Scalar<MaxPlusExact> {
    if rng.gen::<f64>() < density {
        random_lattice_value(rng, lo, hi)
    } else {
        Scalar::Zero
    }
}

/// Uniform quarter-integer in `[lo, hi]`.
fn random_lattice_value(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Scalar<MaxPlusExact> {
    let numer = rng.gen_range(4 * lo..=4 * hi);
    Scalar::val(num_rational::BigRational::new(numer.into(), 4.into()))
}
