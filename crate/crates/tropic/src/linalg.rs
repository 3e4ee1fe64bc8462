//! Vectors and matrices over a semifield.
//!
//! Column vectors, row vectors, and dense matrices with the componentwise
//! operations, the matrix-vector product, supports, regularity tests, and
//! the conjugate operator `x⁻` (the componentwise pseudo-inverse that sends
//! a nonzero column vector to a row vector).
//!
//! Row and column vectors are distinct types: `RowVector × Matrix` and
//! `RowVector × Vector` are defined, `Vector × Vector` is not. Indices are
//! 0-based here; external formats and reports use 1-based indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semifield::{Scalar, Semifield};

/// A dense column vector in `𝕏^m`, `m ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector<S: Semifield> {
    components: Vec<Scalar<S>>,
}

/// A dense row vector; the result of conjugation and the left operand of
/// row-by-matrix products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowVector<S: Semifield> {
    components: Vec<Scalar<S>>,
}

/// A dense `m × n` matrix in row-major storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S: Semifield> {
    rows: usize,
    cols: usize,
    data: Vec<Scalar<S>>,
}

fn dim_error(what: &str, expected: usize, got: usize) -> Error {
    Error::DimensionMismatch(format!("{what}: expected {expected}, got {got}"))
}

impl<S: Semifield> Vector<S> {
    /// Builds a vector from its components; panics on an empty list.
    pub fn new(components: Vec<Scalar<S>>) -> Self {
        assert!(!components.is_empty(), "vectors have dimension ≥ 1");
        Vector { components }
    }

    pub fn zeros(m: usize) -> Self {
        Vector::new(vec![Scalar::Zero; m])
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &Scalar<S> {
        &self.components[i]
    }

    pub fn components(&self) -> &[Scalar<S>] {
        &self.components
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar<S>> {
        self.components.iter()
    }

    /// True when every component is `𝟘`.
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }

    /// A vector is regular when it has no zero components.
    pub fn is_regular(&self) -> bool {
        !self.components.iter().any(Scalar::is_zero)
    }

    /// `supp(a) = { i : aᵢ ≠ 𝟘 }`, sorted ascending.
    pub fn support(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(dim_error("vector addition", self.len(), other.len()));
        }
        Ok(Vector::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    /// Componentwise scalar multiplication `x ⊗ a`; preserves the support
    /// when `x ≠ 𝟘`.
    pub fn scale(&self, x: &Scalar<S>) -> Self {
        Vector::new(self.iter().map(|a| x.mul(a)).collect())
    }

    /// The conjugate `x⁻`: a row vector with `xᵢ⁻ = xᵢ⁻¹` for `xᵢ ≠ 𝟘` and
    /// `𝟘` otherwise. Defined only for nonzero vectors.
    pub fn conjugate(&self) -> Result<RowVector<S>> {
        if self.is_zero() {
            return Err(Error::ConjugateOfZeroVector);
        }
        Ok(RowVector::new(self.iter().map(Scalar::conj).collect()))
    }

    /// Outer product `x ⊗ r`: the `m × k` matrix with entries `xᵢ ⊗ rⱼ`.
    pub fn outer(&self, r: &RowVector<S>) -> Matrix<S> {
        let mut data = Vec::with_capacity(self.len() * r.len());
        for a in self.iter() {
            for b in r.iter() {
                data.push(a.mul(b));
            }
        }
        Matrix {
            rows: self.len(),
            cols: r.len(),
            data,
        }
    }

    /// Componentwise induced order `self ≤ other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.len() != other.len() {
            return Err(dim_error("vector comparison", self.len(), other.len()));
        }
        Ok(self.iter().zip(other.iter()).all(|(a, b)| a.leq(b)))
    }

    /// Componentwise equality within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .iter()
                .zip(other.iter())
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}

impl<S: Semifield> RowVector<S> {
    pub fn new(components: Vec<Scalar<S>>) -> Self {
        assert!(!components.is_empty(), "vectors have dimension ≥ 1");
        RowVector { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &Scalar<S> {
        &self.components[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar<S>> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Scalar::is_zero)
    }

    pub fn is_regular(&self) -> bool {
        !self.components.iter().any(Scalar::is_zero)
    }

    /// The conjugate of a row vector is a column vector.
    pub fn conjugate(&self) -> Result<Vector<S>> {
        if self.is_zero() {
            return Err(Error::ConjugateOfZeroVector);
        }
        Ok(Vector::new(self.iter().map(Scalar::conj).collect()))
    }

    /// Row-by-matrix product: `{rA}ⱼ = ⊕ᵢ rᵢ ⊗ aᵢⱼ`.
    pub fn mul_mat(&self, a: &Matrix<S>) -> Result<RowVector<S>> {
        if self.len() != a.rows() {
            return Err(dim_error("row-matrix product", a.rows(), self.len()));
        }
        let mut out = vec![Scalar::Zero; a.cols()];
        for (i, r) in self.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = slot.add(&r.mul(a.get(i, j)));
            }
        }
        Ok(RowVector::new(out))
    }

    /// Row-by-column product: the scalar `⊕ᵢ rᵢ ⊗ vᵢ`.
    pub fn mul_vec(&self, v: &Vector<S>) -> Result<Scalar<S>> {
        if self.len() != v.len() {
            return Err(dim_error("row-vector product", self.len(), v.len()));
        }
        let mut acc = Scalar::Zero;
        for (r, x) in self.iter().zip(v.iter()) {
            acc = acc.add(&r.mul(x));
        }
        Ok(acc)
    }
}

impl<S: Semifield> Matrix<S> {
    /// Builds a matrix from rows; panics when the rows are absent or ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar<S>>>) -> Self {
        assert!(!rows.is_empty(), "matrices have at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrices have at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all matrix rows must have equal length"
        );
        let m = rows.len();
        let data = rows.into_iter().flatten().collect();
        Matrix {
            rows: m,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector<S>]) -> Result<Self> {
        assert!(!columns.is_empty(), "matrices have at least one column");
        let m = columns[0].len();
        for c in columns {
            if c.len() != m {
                return Err(dim_error("matrix columns", m, c.len()));
            }
        }
        let mut data = Vec::with_capacity(m * columns.len());
        for i in 0..m {
            for c in columns {
                data.push(c.get(i).clone());
            }
        }
        Ok(Matrix {
            rows: m,
            cols: columns.len(),
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrices have positive dimensions");
        Matrix {
            rows,
            cols,
            data: vec![Scalar::Zero; rows * cols],
        }
    }

    /// The identity: `𝟙` on the diagonal, `𝟘` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar<S> {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar<S> {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row(&self, i: usize) -> RowVector<S> {
        RowVector::new((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    /// True when every entry is `𝟘`.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// A matrix is regular when it has no zero rows.
    pub fn is_regular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).any(|j| !self.get(i, j).is_zero()))
    }

    /// Indices of all-`𝟘` columns, sorted ascending.
    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
            .collect()
    }

    /// Matrix-vector product: `{Ax}ᵢ = aᵢ₁x₁ ⊕ ⋯ ⊕ aᵢₙxₙ`.
    pub fn mul_vec(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if x.len() != self.cols {
            return Err(dim_error("matrix-vector product", self.cols, x.len()));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Scalar::Zero;
            for (j, xj) in x.iter().enumerate() {
                acc = acc.add(&self.get(i, j).mul(xj));
            }
            out.push(acc);
        }
        Ok(Vector::new(out))
    }

    /// A copy with column `j` removed; `None` when only one column remains.
    pub fn column_removed(&self, j: usize) -> Option<Matrix<S>> {
        assert!(j < self.cols, "matrix index out of range");
        if self.cols == 1 {
            return None;
        }
        let keep: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        Some(self.select_columns(&keep))
    }

    /// A copy keeping only the columns listed in `keep` (in the given order).
    ///
    /// Panics when `keep` is empty or out of range.
    pub fn select_columns(&self, keep: &[usize]) -> Matrix<S> {
        assert!(!keep.is_empty(), "matrices have at least one column");
        let mut data = Vec::with_capacity(self.rows * keep.len());
        for i in 0..self.rows {
            for &j in keep {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    /// Componentwise induced order `self ≥ other`.
    pub fn geq(&self, other: &Self) -> Result<bool> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix comparison: {}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .all(|(a, b)| b.leq(a)))
    }
}

fn strip_brackets(src: &str) -> &str {
    let src = src.trim();
    if let Some(inner) = src.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        inner
    } else {
        src
    }
}

impl<S: Semifield> FromStr for Vector<S> {
    type Err = Error;

    /// Parses whitespace-separated tokens, optionally wrapped in brackets.
    fn from_str(src: &str) -> Result<Self> {
        let inner = strip_brackets(src);
        let mut components = Vec::new();
        for token in inner.split_whitespace() {
            components.push(token.parse::<Scalar<S>>()?);
        }
        if components.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        Ok(Vector::new(components))
    }
}

impl<S: Semifield> FromStr for Matrix<S> {
    type Err = Error;

    /// Parses rows separated by `;` or newlines, tokens by whitespace,
    /// optionally wrapped in brackets. Rows must have equal length.
    fn from_str(src: &str) -> Result<Self> {
        let inner = strip_brackets(src);
        let mut rows: Vec<Vec<Scalar<S>>> = Vec::new();
        for row_src in inner.split([';', '\n']) {
            let row: Vec<Scalar<S>> = row_src
                .split_whitespace()
                .map(|t| t.parse::<Scalar<S>>())
                .collect::<Result<_>>()?;
            if row.is_empty() {
                continue;
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse(format!(
                        "ragged matrix rows: row {} has {} entries, expected {}",
                        rows.len() + 1,
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Ok(Matrix::from_rows(rows))
    }
}

impl<S: Semifield> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<S: Semifield> fmt::Display for RowVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<S: Semifield> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{MaxPlus, MaxPlusExact};
    use proptest::prelude::*;

    fn v(src: &str) -> Vector<MaxPlus> {
        src.parse().unwrap()
    }

    fn m(src: &str) -> Matrix<MaxPlus> {
        src.parse().unwrap()
    }

    fn vq(src: &str) -> Vector<MaxPlusExact> {
        src.parse().unwrap()
    }

    fn mq(src: &str) -> Matrix<MaxPlusExact> {
        src.parse().unwrap()
    }

    #[test]
    fn vector_addition() {
        assert_eq!(v("1 2").add(&v("3 0")).unwrap(), v("3 2"));
        assert_eq!(v("-inf -inf").add(&v("1 2")).unwrap(), v("1 2"));
        assert_eq!(v("2 2").add(&v("2 2")).unwrap(), v("2 2"));
        assert!(v("1 2").add(&v("1 2 3")).is_err());
    }

    #[test]
    fn scalar_multiplication() {
        assert_eq!(v("1 2").scale(&Scalar::val(3.0)), v("4 5"));
        assert_eq!(v("1 2").scale(&Scalar::one()), v("1 2"));
        assert_eq!(v("1 2").scale(&Scalar::Zero), v("-inf -inf"));
    }

    #[test]
    fn matrix_vector_product() {
        assert_eq!(m("0 2; 1 0").mul_vec(&v("1 1")).unwrap(), v("3 2"));
        assert_eq!(
            Matrix::<MaxPlus>::identity(2).mul_vec(&v("1 2")).unwrap(),
            v("1 2")
        );
        assert_eq!(
            m("0 2; 1 0").mul_vec(&v("-inf -inf")).unwrap(),
            v("-inf -inf")
        );
        assert!(m("0 2; 1 0").mul_vec(&v("1 1 1")).is_err());
    }

    #[test]
    fn conjugation() {
        let c = v("1 2").conjugate().unwrap();
        assert_eq!(c, RowVector::new(vec![Scalar::val(-1.0), Scalar::val(-2.0)]));
        let c = v("0 -inf").conjugate().unwrap();
        assert_eq!(c, RowVector::new(vec![Scalar::val(0.0), Scalar::Zero]));
        assert_eq!(
            v("-inf -inf").conjugate(),
            Err(Error::ConjugateOfZeroVector)
        );
        assert_eq!(v("5").conjugate().unwrap().get(0), &Scalar::val(-5.0));
    }

    #[test]
    fn row_by_matrix() {
        let r = RowVector::new(vec![Scalar::val(-1.0), Scalar::val(-2.0)]);
        let p = r.mul_mat(&m("0 2; 1 0")).unwrap();
        assert_eq!(p, RowVector::new(vec![Scalar::val(-1.0), Scalar::val(1.0)]));
        let z = RowVector::<MaxPlus>::new(vec![Scalar::Zero, Scalar::Zero]);
        assert!(z.mul_mat(&m("0 2; 1 0")).unwrap().is_zero());
        let r = RowVector::<MaxPlus>::new(vec![Scalar::val(0.0), Scalar::val(0.0)]);
        assert_eq!(
            r.mul_mat(&Matrix::identity(2)).unwrap(),
            RowVector::new(vec![Scalar::val(0.0), Scalar::val(0.0)])
        );
    }

    #[test]
    fn supports_and_regularity() {
        assert_eq!(v("1 -inf 3").support(), vec![0, 2]);
        assert!(!m("0 -inf; -inf -inf").is_regular());
        assert!(v("1 2").is_regular());
        assert!(!v("1 -inf").is_regular());
        assert_eq!(m("1 -inf; 2 -inf").zero_columns(), vec![1]);
    }

    #[test]
    fn parse_round_trip() {
        let a = mq("0 2; 1 0");
        assert_eq!(a.to_string(), "[0 2; 1 0]");
        assert_eq!(a.to_string().parse::<Matrix<MaxPlusExact>>().unwrap(), a);
        let d = vq("-inf 5/2");
        assert_eq!(d.to_string(), "[-inf 5/2]");
        assert!("0 2; 1".parse::<Matrix<MaxPlusExact>>().is_err());
        assert!("".parse::<Vector<MaxPlusExact>>().is_err());
    }

    #[test]
    fn column_selection() {
        let a = mq("0 2 4; 1 0 -inf");
        assert_eq!(a.column(2), vq("4 -inf"));
        assert_eq!(a.column_removed(1).unwrap(), mq("0 4; 1 -inf"));
        assert_eq!(a.select_columns(&[2, 0]), mq("4 0; -inf 1"));
        assert!(mq("1; 2").column_removed(0).is_none());
    }

    fn rational_scalar() -> impl Strategy<Value = Scalar<MaxPlusExact>> {
        prop_oneof![
            1 => Just(Scalar::Zero),
            4 => (-20i64..=20, 1i64..=4).prop_map(|(n, d)| {
                Scalar::val(num_rational::BigRational::new(n.into(), d.into()))
            }),
        ]
    }

    fn regular_vector(len: usize) -> impl Strategy<Value = Vector<MaxPlusExact>> {
        proptest::collection::vec(
            (-20i64..=20, 1i64..=4).prop_map(|(n, d)| {
                Scalar::val(num_rational::BigRational::new(n.into(), d.into()))
            }),
            len,
        )
        .prop_map(Vector::new)
    }

    fn any_vector(len: usize) -> impl Strategy<Value = Vector<MaxPlusExact>> {
        proptest::collection::vec(rational_scalar(), len).prop_map(Vector::new)
    }

    proptest! {
        #[test]
        fn conjugate_identities(x in regular_vector(4)) {
            let conj = x.conjugate().unwrap();
            prop_assert_eq!(conj.mul_vec(&x).unwrap(), Scalar::one());
            let outer = x.outer(&conj);
            prop_assert!(outer.geq(&Matrix::identity(4)).unwrap());
        }

        #[test]
        fn conjugate_antitone(x in regular_vector(4), y in regular_vector(4)) {
            let top = x.add(&y).unwrap();
            // x ≤ top, hence x⁻ ≥ top⁻ componentwise
            let cx = x.conjugate().unwrap();
            let ct = top.conjugate().unwrap();
            for (a, b) in ct.iter().zip(cx.iter()) {
                prop_assert!(a.leq(b));
            }
        }

        #[test]
        fn mat_vec_isotone(x in any_vector(3), y in any_vector(3)) {
            let a = mq("0 2 -1; 1 -inf 1/2");
            let top = x.add(&y).unwrap();
            let ax = a.mul_vec(&x).unwrap();
            let atop = a.mul_vec(&top).unwrap();
            prop_assert!(ax.leq(&atop).unwrap());
        }

        #[test]
        fn scale_preserves_support(x in any_vector(4)) {
            let scaled = x.scale(&Scalar::val(num_rational::BigRational::new(7.into(), 2.into())));
            prop_assert_eq!(scaled.support(), x.support());
        }
    }
}
