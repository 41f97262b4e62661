//! Generalized pentagonal numbers and the signed sparse series they index.
//!
//! For `k >= 1` the exponent pair `(3k^2 - k)/2` and `(3k^2 + k)/2` carries
//! the sign `(-1)^k`; merged over all `k` the exponents ascend strictly:
//! 1, 2, 5, 7, 12, 15, 22, 26, 35, 40, ... The constant term `1` plus the
//! signed monomials at these exponents is exactly the expansion of
//! `(1-x)(1-x^2)(1-x^3)...`, which the `telescope` module derives stage by
//! stage.

use alloc::vec::Vec;
use core::fmt;

use crate::series::{Coeff, TruncatedSeries};

/// One index `k` worth of the expansion: both exponents and their common
/// sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonalTerm {
    /// Index, starting at 1.
    pub k: usize,
    /// `(3k^2 - k)/2`, the smaller exponent of the pair.
    pub exp_minus: usize,
    /// `(3k^2 + k)/2`, the larger exponent of the pair.
    pub exp_plus: usize,
    /// `(-1)^k`.
    pub sign: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentagonalError {
    /// The index `k` must be at least 1.
    ZeroIndex,
}

impl fmt::Display for PentagonalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PentagonalError::ZeroIndex => write!(f, "pentagonal index must be at least 1"),
        }
    }
}

impl core::error::Error for PentagonalError {}

fn term_at(k: usize) -> PentagonalTerm {
    let kk = k as u128;
    let exp_minus = ((3 * kk * kk - kk) / 2)
        .try_into()
        .expect("pentagonal exponent exceeds usize");
    PentagonalTerm {
        k,
        exp_minus,
        exp_plus: exp_minus + k,
        sign: if k.is_multiple_of(2) { 1 } else { -1 },
    }
}

/// Exponent pair and sign for index `k >= 1`.
pub fn pentagonal_pair(k: usize) -> Result<PentagonalTerm, PentagonalError> {
    if k == 0 {
        return Err(PentagonalError::ZeroIndex);
    }
    Ok(term_at(k))
}

/// Unbounded stream of terms for `k = 1, 2, 3, ...`.
pub fn pentagonal_terms() -> impl Iterator<Item = PentagonalTerm> {
    (1..).map(term_at)
}

/// All `(exponent, sign)` entries with exponent `<= n`, in strictly
/// ascending exponent order. A pair may contribute only its smaller
/// exponent when the larger one falls outside the bound.
pub fn pentagonal_terms_upto(n: usize) -> Vec<(usize, i32)> {
    let mut out = Vec::new();
    for t in pentagonal_terms() {
        if t.exp_minus > n {
            break;
        }
        out.push((t.exp_minus, t.sign));
        if t.exp_plus <= n {
            out.push((t.exp_plus, t.sign));
        }
    }
    out
}

/// The signed sparse expansion `1 - x - x^2 + x^5 + x^7 - x^12 - ...`
/// truncated at degree `n`.
pub fn pentagonal_series(n: usize) -> TruncatedSeries {
    let mut coeffs = alloc::vec![0 as Coeff; n + 1];
    coeffs[0] = 1;
    for (e, s) in pentagonal_terms_upto(n) {
        coeffs[e] = s as Coeff;
    }
    TruncatedSeries::from_vec(coeffs)
}

/// First differences of the exponent sequence 0, 1, 2, 5, 7, 12, 15, ...
/// (the constant term's exponent included), `count` entries long:
/// 1, 1, 3, 2, 5, 3, 7, 4, ... The two interleaved arithmetic threads,
/// odd numbers and counting numbers, make the exponent list extendable by
/// hand indefinitely.
pub fn difference_sequence(count: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(count);
    let mut prev = 0;
    for t in pentagonal_terms() {
        for e in [t.exp_minus, t.exp_plus] {
            if out.len() == count {
                return out;
            }
            out.push(e - prev);
            prev = e;
        }
    }
    out
}
