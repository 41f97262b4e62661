//! Exact-integer arithmetic on truncated formal power series.
//!
//! A [`TruncatedSeries`] holds the coefficients of a formal power series
//! known modulo `x^(N+1)`: `coeffs[i]` is the coefficient of `x^i`, and `N`
//! is the truncation degree. Nothing above degree `N` is represented or
//! assumed.
//!
//! Conventions, relied on by every caller in this crate:
//!
//! - Binary operations truncate to the smaller of the two truncation
//!   degrees, so a result never claims coefficients its inputs cannot
//!   justify.
//! - Coefficients are exact `i128` values. Every arithmetic step is
//!   checked; on overflow an operation returns [`SeriesError::Overflow`]
//!   rather than wrapping or saturating.
//! - Equality (`==`) is structural: same truncation degree, identical
//!   coefficients. Use [`TruncatedSeries::prefix_eq`] to compare two series
//!   only on the prefix both of them know.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Coefficient type shared by every series and table in this crate.
///
/// Intermediate values in the staged product expansions exceed 64 bits
/// well inside the degree ranges this crate is used at, so coefficients
/// are 128-bit from the start; arithmetic is checked regardless.
pub type Coeff = i128;

/// Failure modes of series arithmetic. All operations are total functions
/// of their inputs except for these conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesError {
    /// A coefficient computation left the `i128` range.
    Overflow,
    /// Division needs a denominator whose constant term is `1` or `-1`;
    /// nothing else is invertible over the integers.
    NonUnitDenominator {
        /// Constant term that was found instead.
        found: Coeff,
    },
    /// The operation needs a constant term of exactly `1`.
    ConstantTermNotOne {
        /// Constant term that was found instead.
        found: Coeff,
    },
    /// The operation needs truncation degree at least `1`.
    DegreeZero,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::Overflow => write!(f, "coefficient arithmetic overflowed i128"),
            SeriesError::NonUnitDenominator { found } => write!(
                f,
                "denominator constant term must be 1 or -1, found {found}"
            ),
            SeriesError::ConstantTermNotOne { found } => {
                write!(f, "constant term must be exactly 1, found {found}")
            }
            SeriesError::DegreeZero => write!(f, "truncation degree must be at least 1"),
        }
    }
}

impl core::error::Error for SeriesError {}

#[inline]
fn cadd(a: Coeff, b: Coeff) -> Result<Coeff, SeriesError> {
    a.checked_add(b).ok_or(SeriesError::Overflow)
}

#[inline]
fn csub(a: Coeff, b: Coeff) -> Result<Coeff, SeriesError> {
    a.checked_sub(b).ok_or(SeriesError::Overflow)
}

#[inline]
fn cmul(a: Coeff, b: Coeff) -> Result<Coeff, SeriesError> {
    a.checked_mul(b).ok_or(SeriesError::Overflow)
}

/// Dense power series truncated at a fixed degree, with exact checked
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    trunc_degree: usize,
    coeffs: Vec<Coeff>,
}

impl TruncatedSeries {
    /// The zero series at truncation degree `n`.
    pub fn zero(n: usize) -> Self {
        TruncatedSeries {
            trunc_degree: n,
            coeffs: vec![0; n + 1],
        }
    }

    /// The constant series `1` at truncation degree `n`.
    pub fn one(n: usize) -> Self {
        let mut s = TruncatedSeries::zero(n);
        s.coeffs[0] = 1;
        s
    }

    /// `c * x^k` at truncation degree `n`. If `k > n` the monomial lies
    /// beyond the truncation window and the result is the zero series.
    pub fn monomial(c: Coeff, k: usize, n: usize) -> Self {
        let mut s = TruncatedSeries::zero(n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with the given low-order coefficients at truncation degree
    /// `n`: `coeff(i) = values[i]` for `i <= min(n, values.len() - 1)`,
    /// zero elsewhere. Excess entries in `values` are dropped.
    pub fn from_coeffs(values: &[Coeff], n: usize) -> Self {
        let mut s = TruncatedSeries::zero(n);
        let upto = values.len().min(n + 1);
        s.coeffs[..upto].copy_from_slice(&values[..upto]);
        s
    }

    /// Wraps an owned coefficient vector; the truncation degree is
    /// `coeffs.len() - 1`.
    pub(crate) fn from_vec(coeffs: Vec<Coeff>) -> Self {
        debug_assert!(!coeffs.is_empty());
        TruncatedSeries {
            trunc_degree: coeffs.len() - 1,
            coeffs,
        }
    }

    /// Truncation degree `N`; coefficients are known for `x^0 ..= x^N`.
    pub fn trunc_degree(&self) -> usize {
        self.trunc_degree
    }

    /// All known coefficients, index `i` holding the coefficient of `x^i`.
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    ///
    /// Panics if `i` exceeds the truncation degree: that coefficient is
    /// not merely zero, it is unknown, and reading it is a logic error.
    pub fn coeff(&self, i: usize) -> Coeff {
        assert!(
            i <= self.trunc_degree,
            "coefficient {i} is beyond truncation degree {}",
            self.trunc_degree
        );
        self.coeffs[i]
    }

    /// Sum, truncated to the smaller of the two degrees.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let n = self.trunc_degree.min(other.trunc_degree);
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            out.push(cadd(self.coeffs[i], other.coeffs[i])?);
        }
        Ok(TruncatedSeries::from_vec(out))
    }

    /// Difference, truncated to the smaller of the two degrees.
    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let n = self.trunc_degree.min(other.trunc_degree);
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            out.push(csub(self.coeffs[i], other.coeffs[i])?);
        }
        Ok(TruncatedSeries::from_vec(out))
    }

    /// Negation, keeping the truncation degree.
    pub fn neg(&self) -> Result<TruncatedSeries, SeriesError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(c.checked_neg().ok_or(SeriesError::Overflow)?);
        }
        Ok(TruncatedSeries::from_vec(out))
    }

    /// Cauchy product, truncated to the smaller of the two degrees.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let n = self.trunc_degree.min(other.trunc_degree);
        let mut out = vec![0; n + 1];
        for i in 0..=n {
            let a = self.coeffs[i];
            if a == 0 {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeffs[j];
                if b == 0 {
                    continue;
                }
                out[i + j] = cadd(out[i + j], cmul(a, b)?)?;
            }
        }
        Ok(TruncatedSeries::from_vec(out))
    }

    /// Formal derivative. The result is known one degree lower than the
    /// input, so the input must have truncation degree at least `1`.
    pub fn derivative(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.trunc_degree == 0 {
            return Err(SeriesError::DegreeZero);
        }
        let mut out = Vec::with_capacity(self.trunc_degree);
        for i in 1..=self.trunc_degree {
            out.push(cmul(self.coeffs[i], i as Coeff)?);
        }
        Ok(TruncatedSeries::from_vec(out))
    }

    /// Quotient `self / den` by long division, truncated to the smaller of
    /// the two degrees. The denominator's constant term must be `1` or
    /// `-1`; the classical recurrence
    /// `q[n] = (num[n] - sum(den[j] * q[n-j], j = 1..=n)) / den[0]`
    /// then stays in exact integers.
    pub fn divide(&self, den: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let d0 = den.coeffs[0];
        if d0 != 1 && d0 != -1 {
            return Err(SeriesError::NonUnitDenominator { found: d0 });
        }
        let n = self.trunc_degree.min(den.trunc_degree);
        let mut q: Vec<Coeff> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i];
            for j in 1..=i {
                let d = den.coeffs[j];
                if d == 0 {
                    continue;
                }
                acc = csub(acc, cmul(d, q[i - j])?)?;
            }
            // d0 is a unit, so dividing is multiplying by d0 itself.
            q.push(cmul(acc, d0)?);
        }
        Ok(TruncatedSeries::from_vec(q))
    }

    /// Prefix of this series at the lower truncation degree `n`.
    ///
    /// Panics if `n` exceeds the current truncation degree; truncation can
    /// only ever discard information.
    pub fn truncated(&self, n: usize) -> TruncatedSeries {
        assert!(
            n <= self.trunc_degree,
            "cannot extend truncation degree {} to {n}",
            self.trunc_degree
        );
        TruncatedSeries::from_coeffs(&self.coeffs[..=n], n)
    }

    /// `x^m * self`. Every known coefficient is kept, so the truncation
    /// degree grows to `N + m`.
    pub fn shifted_up(&self, m: usize) -> TruncatedSeries {
        let mut out = vec![0; self.coeffs.len() + m];
        out[m..].copy_from_slice(&self.coeffs);
        TruncatedSeries::from_vec(out)
    }

    /// Whether the two series agree on every coefficient both of them
    /// know, i.e. up to the smaller truncation degree.
    pub fn prefix_eq(&self, other: &TruncatedSeries) -> bool {
        self.first_prefix_mismatch(other).is_none()
    }

    /// Lowest exponent at which the two series disagree, restricted to the
    /// prefix both know. `None` means they agree on that whole prefix.
    pub fn first_prefix_mismatch(&self, other: &TruncatedSeries) -> Option<usize> {
        let n = self.trunc_degree.min(other.trunc_degree);
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

/// Renders as `c0 + c1*x + c2*x^2 + ...` with zero terms elided, except
/// that the constant term is always printed.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 && c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// In-place multiplication of a coefficient slice by `(1 - x^k)`, a single
/// O(len) pass. Descending order keeps the subtrahend `c[i - k]` unread
/// until it is used, so no scratch buffer is needed.
pub(crate) fn mul_one_minus_xk(c: &mut [Coeff], k: usize) -> Result<(), SeriesError> {
    if k == 0 || k >= c.len() {
        // x^k contributes nothing inside the truncation window (k = 0 is
        // excluded by every caller; the bound check keeps this total).
        if k == 0 {
            for v in c.iter_mut() {
                *v = 0;
            }
        }
        return Ok(());
    }
    for i in (k..c.len()).rev() {
        c[i] = csub(c[i], c[i - k])?;
    }
    Ok(())
}

/// Adds `sign * x^shift * term` into `acc`, ignoring anything beyond the
/// length of `acc`.
pub(crate) fn add_shifted_signed(
    acc: &mut [Coeff],
    term: &[Coeff],
    shift: usize,
    sign: Coeff,
) -> Result<(), SeriesError> {
    for (i, &t) in term.iter().enumerate() {
        if t == 0 {
            continue;
        }
        let Some(slot) = acc.get_mut(shift + i) else {
            break;
        };
        *slot = cadd(*slot, cmul(sign, t)?)?;
    }
    Ok(())
}

/// Expansion of the finite product `(1 - x)(1 - x^2)...(1 - x^n)` truncated
/// at degree `n`. Factors `(1 - x^k)` with `k > n` cannot change anything
/// below `x^(n+1)`, so this prefix equals the infinite product's.
pub fn euler_product(n: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut coeffs = vec![0; n + 1];
    coeffs[0] = 1;
    for k in 1..=n {
        mul_one_minus_xk(&mut coeffs, k)?;
    }
    Ok(TruncatedSeries::from_vec(coeffs))
}

/// The sum `x/(1-x) + 2x^2/(1-x^2) + 3x^3/(1-x^3) + ...` truncated at
/// degree `n`. Expanding each geometric factor, term `k` contributes `k`
/// to every coefficient with exponent a multiple of `k`, so the
/// coefficient of `x^m` is the sum of the divisors of `m`.
pub fn lambert_sum(n: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut coeffs = vec![0; n + 1];
    for k in 1..=n {
        let kc = k as Coeff;
        let mut m = k;
        while m <= n {
            coeffs[m] = cadd(coeffs[m], kc)?;
            m += k;
        }
    }
    Ok(TruncatedSeries::from_vec(coeffs))
}

/// The series `-x * s' / s` for a series `s` with constant term `1`,
/// computed purely algebraically (one derivative, one long division).
///
/// Termwise, `-x * d/dx log(1 - x^k) = k*x^k/(1 - x^k)`: applied to the
/// full product expansion this turns the signed pentagonal series into the
/// divisor-sum series without any formal integration step.
pub fn log_derivative_negx(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let c0 = s.coeff(0);
    if c0 != 1 {
        return Err(SeriesError::ConstantTermNotOne { found: c0 });
    }
    let num = s.derivative()?.shifted_up(1).neg()?;
    num.divide(s)
}
