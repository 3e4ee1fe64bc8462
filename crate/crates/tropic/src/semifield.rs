//! Linearly ordered radicable idempotent semifields and their scalars.
//!
//! A scalar is either the bottom element `𝟘` or a member of the invertible
//! part of the carrier. Addition `⊕` is idempotent and selects the larger
//! operand under the total order induced by `x ≤ y ⟺ x ⊕ y = y`;
//! multiplication `⊗` is commutative and invertible away from `𝟘`.
//!
//! Four concrete carriers are provided:
//!
//! * [`MaxPlus`] — reals with `⊕ = max`, `⊗ = +`, `𝟘 = -∞`, `𝟙 = 0` (f64)
//! * [`MaxPlusExact`] — the same structure over arbitrary-precision rationals
//! * [`MinPlus`] — reals with `⊕ = min`, `⊗ = +`, `𝟘 = +∞`, `𝟙 = 0` (f64)
//! * [`MaxTimes`] — positive reals with `⊕ = max`, `⊗ = ×`, `𝟘 = 0`, `𝟙 = 1` (f64)
//!
//! `𝟘` is a dedicated enum variant, never a sentinel float, so arithmetic on
//! the bottom element is pattern-matched and `(-∞) - (-∞)` can not occur.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive, Zero as _};

use crate::error::{Error, Result};

/// Default comparison slack for the floating-point carriers.
///
/// Two values are considered equal when they differ by at most
/// `DEFAULT_TOLERANCE * max(1, |a|, |b|)` (relative-or-absolute, whichever
/// is larger). The exact rational carrier always compares exactly.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Runtime tag identifying a concrete semifield carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemifieldKind {
    MaxPlusFloat,
    MaxPlusRational,
    MinPlusFloat,
    MaxTimesFloat,
}

impl SemifieldKind {
    /// Canonical tag used in problem files and reports.
    pub fn tag(self) -> &'static str {
        match self {
            SemifieldKind::MaxPlusFloat => "maxplus-float",
            SemifieldKind::MaxPlusRational => "maxplus-rational",
            SemifieldKind::MinPlusFloat => "minplus-float",
            SemifieldKind::MaxTimesFloat => "maxtimes-float",
        }
    }

    /// Parses a kind tag; hyphen-separated aliases are accepted.
    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag.trim().to_ascii_lowercase().as_str() {
            "maxplus-float" | "max-plus-float" => Some(SemifieldKind::MaxPlusFloat),
            "maxplus-rational" | "max-plus-rational" => Some(SemifieldKind::MaxPlusRational),
            "minplus-float" | "min-plus-float" => Some(SemifieldKind::MinPlusFloat),
            "maxtimes-float" | "max-times-float" => Some(SemifieldKind::MaxTimesFloat),
            _ => None,
        }
    }

    /// True for carriers whose arithmetic is exact.
    pub fn is_exact(self) -> bool {
        matches!(self, SemifieldKind::MaxPlusRational)
    }
}

impl fmt::Display for SemifieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A semifield kind together with its comparison tolerance.
///
/// The tolerance is `0` exactly for the rational kind; the float kinds
/// default to [`DEFAULT_TOLERANCE`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemifieldSpec {
    pub kind: SemifieldKind,
    pub tolerance: f64,
}

impl SemifieldSpec {
    /// Builds a spec, enforcing that the rational kind carries tolerance 0.
    pub fn new(kind: SemifieldKind, tolerance: f64) -> Result<Self> {
        if !tolerance.is_finite() || tolerance < 0.0 {
            return Err(Error::InvalidScalar(format!(
                "tolerance must be a finite nonnegative real, got {tolerance}"
            )));
        }
        if kind.is_exact() && tolerance != 0.0 {
            return Err(Error::InvalidScalar(format!(
                "the {} kind is exact; tolerance must be 0, got {tolerance}",
                kind.tag()
            )));
        }
        Ok(SemifieldSpec { kind, tolerance })
    }

    /// Spec with the kind's default tolerance (0 for rational, 1e-9 otherwise).
    pub fn with_default_tolerance(kind: SemifieldKind) -> Self {
        let tolerance = if kind.is_exact() { 0.0 } else { DEFAULT_TOLERANCE };
        SemifieldSpec { kind, tolerance }
    }
}

/// A concrete semifield carrier.
///
/// Implementors are zero-sized marker types; all state lives in
/// [`Scalar<S>`]. `Elem` is the invertible part `𝕏₊` of the carrier, and
/// `cmp` is the semifield's total order restricted to it ([`MinPlus`]
/// reverses the numeric order so that `⊕ = min` is still "take the larger
/// under the induced order").
pub trait Semifield: Clone + Copy + fmt::Debug + PartialEq + Eq + 'static {
    type Elem: Clone + fmt::Debug + PartialEq;

    const KIND: SemifieldKind;
    /// Token that denotes `𝟘` in the text formats.
    const ZERO_TOKEN: &'static str;

    fn one() -> Self::Elem;
    fn mul(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(a: &Self::Elem) -> Self::Elem;
    /// Total order on the invertible part, consistent with `⊕`.
    fn cmp(a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// `a^q` for rational `q`; well defined on all of `𝕏₊` (radicability).
    fn pow(a: &Self::Elem, exp: Ratio<i64>) -> Self::Elem;
    /// Equality within `tol` (relative-or-absolute); exact carriers ignore `tol`.
    fn approx_eq(a: &Self::Elem, b: &Self::Elem, tol: f64) -> bool;
    /// Checks that `e` lies in the invertible part of the carrier.
    fn validate(e: Self::Elem) -> Result<Self::Elem>;
    fn parse_elem(token: &str) -> Result<Self::Elem>;
    fn format_elem(e: &Self::Elem) -> String;

    /// Exact scaled-integer view used by the sweep oracle; `None` when the
    /// carrier has no such view. Only the max-plus rational kind provides one.
    #[doc(hidden)]
    fn scaled_int(_e: &Self::Elem, _scale: i64) -> Option<i64> {
        None
    }

    /// Least common denominator of the given elements, when small enough for
    /// the scaled-integer sweep.
    #[doc(hidden)]
    fn common_denominator<'a, I>(_elems: I) -> Option<i64>
    where
        I: Iterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        None
    }
}

/// Max-plus kinds expose their additive real value; this is what links the
/// metric `ρ` with the Chebyshev distance.
pub trait MaxPlusSemifield: Semifield {
    fn elem_to_f64(e: &Self::Elem) -> f64;
}

/// An element of a semifield: the bottom element or an invertible value.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar<S: Semifield> {
    /// The bottom element `𝟘` (neutral for `⊕`, absorbing for `⊗`).
    Zero,
    /// A member of the invertible part `𝕏₊`.
    Val(S::Elem),
}

impl<S: Semifield> Eq for Scalar<S> {}

impl<S: Semifield> Scalar<S> {
    pub fn zero() -> Self {
        Scalar::Zero
    }

    pub fn one() -> Self {
        Scalar::Val(S::one())
    }

    /// Wraps a carrier value, validating that it lies in `𝕏₊`.
    pub fn try_val(e: S::Elem) -> Result<Self> {
        S::validate(e).map(Scalar::Val)
    }

    /// Wraps a carrier value; panics on values outside `𝕏₊` (NaN, non-finite
    /// floats, non-positive max-times values).
    pub fn val(e: S::Elem) -> Self {
        Self::try_val(e).expect("scalar value outside the semifield carrier")
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Zero)
    }

    /// `x ⊕ y`: idempotent addition; returns the larger operand under the
    /// induced total order.
    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Zero, _) => other.clone(),
            (_, Scalar::Zero) => self.clone(),
            (Scalar::Val(a), Scalar::Val(b)) => {
                if S::cmp(a, b) == Ordering::Less {
                    other.clone()
                } else {
                    self.clone()
                }
            }
        }
    }

    /// `x ⊗ y`: `𝟘` is absorbing.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Zero, _) | (_, Scalar::Zero) => Scalar::Zero,
            (Scalar::Val(a), Scalar::Val(b)) => Scalar::Val(S::mul(a, b)),
        }
    }

    /// `x⁻¹`; errors on `𝟘`.
    pub fn inv(&self) -> Result<Self> {
        match self {
            Scalar::Zero => Err(Error::InversionOfZero),
            Scalar::Val(a) => Ok(Scalar::Val(S::inv(a))),
        }
    }

    /// Componentwise pseudo-inverse: `x⁻ = x⁻¹` for `x ≠ 𝟘`, `𝟘⁻ = 𝟘`.
    pub fn conj(&self) -> Self {
        match self {
            Scalar::Zero => Scalar::Zero,
            Scalar::Val(a) => Scalar::Val(S::inv(a)),
        }
    }

    /// `x^(num/den)`. `𝟘^q = 𝟘` for `q > 0` and is undefined otherwise.
    ///
    /// Panics if `den == 0`.
    pub fn pow(&self, num: i64, den: i64) -> Result<Self> {
        assert!(den != 0, "exponent denominator must be nonzero");
        let exp = Ratio::new(num, den);
        match self {
            Scalar::Zero => {
                if exp > Ratio::from_integer(0) {
                    Ok(Scalar::Zero)
                } else {
                    Err(Error::ZeroToNonpositivePower)
                }
            }
            Scalar::Val(a) => Ok(Scalar::Val(S::pow(a, exp))),
        }
    }

    /// `√x = x^(1/2)`; `√𝟘 = 𝟘`.
    pub fn sqrt(&self) -> Self {
        match self {
            Scalar::Zero => Scalar::Zero,
            Scalar::Val(a) => Scalar::Val(S::pow(a, Ratio::new(1, 2))),
        }
    }

    /// The induced order, exact: `x ≤ y ⟺ x ⊕ y = y`.
    pub fn leq(&self, other: &Self) -> bool {
        self.cmp(other) != Ordering::Greater
    }

    /// The induced order with equality widened to the kind's tolerance.
    pub fn leq_tol(&self, other: &Self, tol: f64) -> bool {
        self.leq(other) || self.approx_eq(other, tol)
    }

    /// Equality within `tol`; exact for the rational kind, and `𝟘` is never
    /// approximately equal to an invertible value.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Zero, Scalar::Zero) => true,
            (Scalar::Zero, _) | (_, Scalar::Zero) => false,
            (Scalar::Val(a), Scalar::Val(b)) => S::approx_eq(a, b, tol),
        }
    }

    /// `x ≈ 𝟙` under the kind's equality policy.
    pub fn is_one(&self, tol: f64) -> bool {
        self.approx_eq(&Scalar::one(), tol)
    }
}

impl<S: Semifield> PartialOrd for Scalar<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Semifield> Ord for Scalar<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Zero, Scalar::Zero) => Ordering::Equal,
            (Scalar::Zero, Scalar::Val(_)) => Ordering::Less,
            (Scalar::Val(_), Scalar::Zero) => Ordering::Greater,
            (Scalar::Val(a), Scalar::Val(b)) => S::cmp(a, b),
        }
    }
}

impl<S: Semifield> fmt::Display for Scalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => f.write_str(S::ZERO_TOKEN),
            Scalar::Val(e) => f.write_str(&S::format_elem(e)),
        }
    }
}

impl<S: Semifield> FromStr for Scalar<S> {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        if token == S::ZERO_TOKEN {
            return Ok(Scalar::Zero);
        }
        S::parse_elem(token).and_then(Scalar::try_val)
    }
}

fn float_approx_eq(a: f64, b: f64, tol: f64) -> bool {
    if a == b {
        return true;
    }
    let scale = 1f64.max(a.abs()).max(b.abs());
    (a - b).abs() <= tol * scale
}

fn parse_f64(token: &str) -> Result<f64> {
    token
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("invalid number: {token:?}")))
}

fn format_f64(v: f64) -> String {
    format!("{v}")
}

/// Parses `p/q`, an integer, or a decimal into an exact rational.
fn parse_rational(token: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational: {token:?}"));
    if let Some((num, den)) = token.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator: {token:?}")));
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = token.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::from(0)
        } else {
            BigInt::from_str(int_part).map_err(|_| bad())?
        };
        let frac = BigInt::from_str(frac_part).map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac_part.len() as u32);
        let num = int.magnitude().clone() * den.magnitude().clone() + frac.magnitude().clone();
        let mut value = BigRational::new(BigInt::from(num), den);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let int = BigInt::from_str(token).map_err(|_| bad())?;
    Ok(BigRational::from_integer(int))
}

/// Max-plus over double-precision reals: `⊕ = max`, `⊗ = +`, `𝟘 = -∞`, `𝟙 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxPlus;

impl Semifield for MaxPlus {
    type Elem = f64;

    const KIND: SemifieldKind = SemifieldKind::MaxPlusFloat;
    const ZERO_TOKEN: &'static str = "-inf";

    fn one() -> f64 {
        0.0
    }

    fn mul(a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn inv(a: &f64) -> f64 {
        -a
    }

    fn cmp(a: &f64, b: &f64) -> Ordering {
        a.partial_cmp(b).expect("carrier values are finite")
    }

    fn pow(a: &f64, exp: Ratio<i64>) -> f64 {
        a * (*exp.numer() as f64) / (*exp.denom() as f64)
    }

    fn approx_eq(a: &f64, b: &f64, tol: f64) -> bool {
        float_approx_eq(*a, *b, tol)
    }

    fn validate(e: f64) -> Result<f64> {
        if e.is_finite() {
            Ok(e)
        } else {
            Err(Error::InvalidScalar(format!(
                "max-plus values must be finite reals, got {e}"
            )))
        }
    }

    fn parse_elem(token: &str) -> Result<f64> {
        if let Some((num, den)) = token.split_once('/') {
            let num = parse_f64(num.trim())?;
            let den = parse_f64(den.trim())?;
            return Ok(num / den);
        }
        parse_f64(token)
    }

    fn format_elem(e: &f64) -> String {
        format_f64(*e)
    }
}

impl MaxPlusSemifield for MaxPlus {
    fn elem_to_f64(e: &f64) -> f64 {
        *e
    }
}

/// Max-plus over exact arbitrary-precision rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxPlusExact;

impl Semifield for MaxPlusExact {
    type Elem = BigRational;

    const KIND: SemifieldKind = SemifieldKind::MaxPlusRational;
    const ZERO_TOKEN: &'static str = "-inf";

    fn one() -> BigRational {
        BigRational::from_integer(BigInt::from(0))
    }

    fn mul(a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn inv(a: &BigRational) -> BigRational {
        -a
    }

    fn cmp(a: &BigRational, b: &BigRational) -> Ordering {
        a.cmp(b)
    }

    fn pow(a: &BigRational, exp: Ratio<i64>) -> BigRational {
        a * BigRational::new(BigInt::from(*exp.numer()), BigInt::from(*exp.denom()))
    }

    fn approx_eq(a: &BigRational, b: &BigRational, _tol: f64) -> bool {
        a == b
    }

    fn validate(e: BigRational) -> Result<BigRational> {
        Ok(e)
    }

    fn parse_elem(token: &str) -> Result<BigRational> {
        parse_rational(token)
    }

    fn format_elem(e: &BigRational) -> String {
        e.to_string()
    }

    fn scaled_int(e: &BigRational, scale: i64) -> Option<i64> {
        let scaled = e * BigRational::from_integer(BigInt::from(scale));
        if !scaled.is_integer() {
            return None;
        }
        let int = scaled.to_integer();
        int.to_i64().filter(|v| v.abs() <= (1 << 40))
    }

    fn common_denominator<'a, I>(elems: I) -> Option<i64>
    where
        I: Iterator<Item = &'a BigRational>,
    {
        let mut lcm = BigInt::from(1);
        for e in elems {
            lcm = lcm.lcm(e.denom());
            if lcm > BigInt::from(1i64 << 20) {
                return None;
            }
        }
        lcm.to_i64()
    }
}

impl MaxPlusSemifield for MaxPlusExact {
    fn elem_to_f64(e: &BigRational) -> f64 {
        e.to_f64().expect("rational convertible to f64")
    }
}

/// Min-plus over double-precision reals: `⊕ = min`, `⊗ = +`, `𝟘 = +∞`, `𝟙 = 0`.
///
/// The induced order is the reverse of the numeric order: `x ≤ y ⟺ min(x,y) = y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinPlus;

impl Semifield for MinPlus {
    type Elem = f64;

    const KIND: SemifieldKind = SemifieldKind::MinPlusFloat;
    const ZERO_TOKEN: &'static str = "+inf";

    fn one() -> f64 {
        0.0
    }

    fn mul(a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn inv(a: &f64) -> f64 {
        -a
    }

    fn cmp(a: &f64, b: &f64) -> Ordering {
        b.partial_cmp(a).expect("carrier values are finite")
    }

    fn pow(a: &f64, exp: Ratio<i64>) -> f64 {
        a * (*exp.numer() as f64) / (*exp.denom() as f64)
    }

    fn approx_eq(a: &f64, b: &f64, tol: f64) -> bool {
        float_approx_eq(*a, *b, tol)
    }

    fn validate(e: f64) -> Result<f64> {
        if e.is_finite() {
            Ok(e)
        } else {
            Err(Error::InvalidScalar(format!(
                "min-plus values must be finite reals, got {e}"
            )))
        }
    }

    fn parse_elem(token: &str) -> Result<f64> {
        MaxPlus::parse_elem(token)
    }

    fn format_elem(e: &f64) -> String {
        format_f64(*e)
    }
}

/// Max-times over positive double-precision reals: `⊕ = max`, `⊗ = ×`,
/// `𝟘 = 0`, `𝟙 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxTimes;

impl Semifield for MaxTimes {
    type Elem = f64;

    const KIND: SemifieldKind = SemifieldKind::MaxTimesFloat;
    const ZERO_TOKEN: &'static str = "0";

    fn one() -> f64 {
        1.0
    }

    fn mul(a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn inv(a: &f64) -> f64 {
        1.0 / a
    }

    fn cmp(a: &f64, b: &f64) -> Ordering {
        a.partial_cmp(b).expect("carrier values are finite")
    }

    fn pow(a: &f64, exp: Ratio<i64>) -> f64 {
        a.powf((*exp.numer() as f64) / (*exp.denom() as f64))
    }

    fn approx_eq(a: &f64, b: &f64, tol: f64) -> bool {
        float_approx_eq(*a, *b, tol)
    }

    fn validate(e: f64) -> Result<f64> {
        if e.is_finite() && e > 0.0 {
            Ok(e)
        } else {
            Err(Error::InvalidScalar(format!(
                "max-times values must be positive finite reals, got {e}"
            )))
        }
    }

    fn parse_elem(token: &str) -> Result<f64> {
        MaxPlus::parse_elem(token)
    }

    fn format_elem(e: &f64) -> String {
        format_f64(*e)
    }
}
