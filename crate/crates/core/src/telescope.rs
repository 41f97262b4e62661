//! Telescoping expansions of products and the staged remainder series that
//! turn `(1-x)(1-x^2)(1-x^3)...` into its signed pentagonal form.
//!
//! Two mechanisms live here.
//!
//! First, the finite telescoping identity: for any factors `1 + a_i`,
//!
//! ```text
//! (1+a_1)(1+a_2)...(1+a_m) = 1 + a_1 + a_2(1+a_1) + ... + a_m(1+a_1)...(1+a_(m-1))
//! ```
//!
//! so the partial sums of the right side are exactly the prefix products of
//! the left. [`telescoping_partial_sums`] computes both sides independently
//! per step; [`telescoped_product_series`] applies the identity to the
//! factors `1 - x^j` themselves.
//!
//! Second, the staged remainders: for `k >= 1`,
//!
//! ```text
//! S_k = 1 - x^k + sum over j >= 1 of x^(k*j) * (1-x^k)(1-x^(k+1))...(1-x^(k+j))
//! ```
//!
//! Each stage obeys `S_k = 1 - x^(2k+1) - x^(3k+2) * S_(k+1)`, with the full
//! product playing the role of `S_0`. Substituting the law into itself `m`
//! times peels off two signed monomials per stage; [`unroll`] collects the
//! peeled part, whose leading exponents `p_k = k(3k+1)/2` step by exactly
//! `3k + 2`, which is why the substitution closes up exactly. The exponents
//! that fall out are the generalized pentagonal numbers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::pentagonal::pentagonal_terms;
use crate::series::{
    add_shifted_signed, euler_product, mul_one_minus_xk, Coeff, SeriesError, TruncatedSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TelescopeError {
    /// Every factor in a list must share one truncation degree.
    MixedDegrees { expected: usize, found: usize },
    /// Remainder stages are indexed from 1.
    ZeroStageIndex,
    /// Verifying a stage law at index `k` needs truncation degree at least
    /// `3k + 2`; below that the substituted stage has no room to exist.
    DegreeTooSmall { needed: usize, got: usize },
    /// An underlying series operation failed.
    Series(SeriesError),
}

impl fmt::Display for TelescopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TelescopeError::MixedDegrees { expected, found } => write!(
                f,
                "factor truncation degree {found} does not match expected {expected}"
            ),
            TelescopeError::ZeroStageIndex => write!(f, "stage index must be at least 1"),
            TelescopeError::DegreeTooSmall { needed, got } => {
                write!(f, "stage check needs truncation degree {needed}, got {got}")
            }
            TelescopeError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for TelescopeError {}

impl From<SeriesError> for TelescopeError {
    fn from(e: SeriesError) -> Self {
        TelescopeError::Series(e)
    }
}

/// A list of perturbations `a_i`, all truncated at one shared degree, for
/// feeding factors `1 + a_i` into the telescoping identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    trunc_degree: usize,
    alphas: Vec<TruncatedSeries>,
}

impl FactorList {
    /// Validates that every perturbation is truncated at `trunc_degree`.
    pub fn new(
        trunc_degree: usize,
        alphas: Vec<TruncatedSeries>,
    ) -> Result<FactorList, TelescopeError> {
        for a in &alphas {
            if a.trunc_degree() != trunc_degree {
                return Err(TelescopeError::MixedDegrees {
                    expected: trunc_degree,
                    found: a.trunc_degree(),
                });
            }
        }
        Ok(FactorList {
            trunc_degree,
            alphas,
        })
    }

    pub fn trunc_degree(&self) -> usize {
        self.trunc_degree
    }

    pub fn factors(&self) -> &[TruncatedSeries] {
        &self.alphas
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }
}

/// Partial sums of `1 + a_1 + a_2(1+a_1) + a_3(1+a_1)(1+a_2) + ...`, one
/// entry per factor: entry `j` (1-based) is the sum after `j` terms and
/// equals the product `(1+a_1)...(1+a_j)`. An empty list yields the single
/// constant series `1`, the empty product. The running product feeding the
/// terms is carried separately from the sums, so the returned sequence is
/// evidence for the identity, not an application of it.
pub fn telescoping_partial_sums(
    factors: &FactorList,
) -> Result<Vec<TruncatedSeries>, TelescopeError> {
    let n = factors.trunc_degree();
    let unit = TruncatedSeries::one(n);
    if factors.is_empty() {
        return Ok(vec![unit]);
    }
    let mut sum = unit.clone();
    let mut product = unit.clone();
    let mut partials = Vec::with_capacity(factors.len());
    for alpha in factors.factors() {
        sum = sum.add(&alpha.mul(&product)?)?;
        product = product.mul(&unit.add(alpha)?)?;
        partials.push(sum.clone());
    }
    Ok(partials)
}

/// The telescoped form of the product of `(1 - x^j)`:
///
/// ```text
/// 1 - x - x^2(1-x) - x^3(1-x)(1-x^2) - x^4(1-x)(1-x^2)(1-x^3) - ...
/// ```
///
/// truncated at degree `n`, keeping the terms whose leading exponent fits.
/// Term by term this telescopes back to the plain expanded product.
pub fn telescoped_product_series(n: usize) -> Result<TruncatedSeries, TelescopeError> {
    let mut acc = vec![0 as Coeff; n + 1];
    acc[0] = 1;
    // prod tracks (1-x)(1-x^2)...(1-x^(j-1)) across iterations.
    let mut prod = vec![0 as Coeff; n + 1];
    prod[0] = 1;
    for j in 1..=n {
        if j >= 2 {
            mul_one_minus_xk(&mut prod, j - 1)?;
        }
        add_shifted_signed(&mut acc, &prod, j, -1)?;
    }
    Ok(TruncatedSeries::from_vec(acc))
}

/// Remainder left after peeling `k` stages off the product expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderStage {
    /// Stage index, at least 1.
    pub k: usize,
    /// The stage series truncated at the requested degree.
    pub series: TruncatedSeries,
}

impl RemainderStage {
    /// Every stage opens as `1 - x^(2k+1)` with nothing else below degree
    /// `3k + 2`; this checks that shape as far as the truncation allows.
    pub fn shape_holds(&self) -> bool {
        let c = self.series.coeffs();
        if c[0] != 1 {
            return false;
        }
        let n = self.series.trunc_degree();
        let cap = n.min(3 * self.k + 1);
        (1..=cap).all(|e| c[e] == if e == 2 * self.k + 1 { -1 } else { 0 })
    }
}

/// The stage-`k` remainder series
/// `1 - x^k + sum(x^(k*j) * (1-x^k)...(1-x^(k+j)), j >= 1)` truncated at
/// degree `n`. Stage indices start at 1; the stage-0 role is played by the
/// expanded product itself.
pub fn remainder_series(k: usize, n: usize) -> Result<RemainderStage, TelescopeError> {
    if k == 0 {
        return Err(TelescopeError::ZeroStageIndex);
    }
    let mut acc = vec![0 as Coeff; n + 1];
    acc[0] = 1;
    if k <= n {
        acc[k] = -1;
    }
    // prod tracks (1-x^k)(1-x^(k+1))...(1-x^(k+j)) across iterations.
    let mut prod = vec![0 as Coeff; n + 1];
    prod[0] = 1;
    mul_one_minus_xk(&mut prod, k)?;
    for j in 1.. {
        let shift = match k.checked_mul(j) {
            Some(s) if s <= n => s,
            _ => break,
        };
        mul_one_minus_xk(&mut prod, k + j)?;
        add_shifted_signed(&mut acc, &prod, shift, 1)?;
    }
    Ok(RemainderStage {
        k,
        series: TruncatedSeries::from_vec(acc),
    })
}

/// Outcome of checking one instance of the stage law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StageCheck {
    pub k: usize,
    /// Truncation degree both sides were compared at.
    pub degree: usize,
    pub pass: bool,
    /// Lowest disagreeing exponent when the check fails.
    pub first_mismatch: Option<usize>,
}

/// Checks `S_k = 1 - x^(2k+1) - x^(3k+2) * S_(k+1)` at truncation degree
/// `n`, with `S_0` read as the expanded product. The substituted stage is
/// computed at the reduced degree `n - (3k+2)` and shifted back up, so both
/// sides carry exactly degree `n`.
pub fn stage_recurrence_check(k: usize, n: usize) -> Result<StageCheck, TelescopeError> {
    let offset = 3 * k + 2;
    if n < offset {
        return Err(TelescopeError::DegreeTooSmall {
            needed: offset,
            got: n,
        });
    }
    let lhs = if k == 0 {
        euler_product(n)?
    } else {
        remainder_series(k, n)?.series
    };
    let inner = remainder_series(k + 1, n - offset)?.series;
    let mut rhs = vec![0 as Coeff; n + 1];
    rhs[0] = 1;
    rhs[2 * k + 1] = -1;
    add_shifted_signed(&mut rhs, inner.coeffs(), offset, -1)?;
    let rhs = TruncatedSeries::from_vec(rhs);
    let first_mismatch = lhs.first_prefix_mismatch(&rhs);
    Ok(StageCheck {
        k,
        degree: n,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// What `m` substitutions of the stage law leave in closed form:
///
/// ```text
/// 1 - x + sum((-1)^k * x^(p_k) * (1 - x^(2k+1)), k = 1..=m)
/// ```
///
/// with `p_k = k(3k+1)/2`, truncated at degree `n`. The monomial exponents
/// are `p_k` and `p_k + 2k + 1`, which is the next smaller-family exponent;
/// together with the leading `1 - x` they reproduce the signed pentagonal
/// pattern below `p_(m+1)`, where the not-yet-substituted remainder starts.
pub fn unroll(m: usize, n: usize) -> Result<TruncatedSeries, TelescopeError> {
    let mut acc = vec![0 as Coeff; n + 1];
    acc[0] = 1;
    if n >= 1 {
        acc[1] = -1;
    }
    for t in pentagonal_terms().take(m) {
        // p_k is the larger exponent of pair k; p_k + 2k + 1 is the smaller
        // exponent of pair k+1. Exponents never collide, so plain stores
        // suffice.
        let sign = t.sign as Coeff;
        if t.exp_plus <= n {
            acc[t.exp_plus] = sign;
        }
        let peeled = t.exp_plus + 2 * t.k + 1;
        if peeled <= n {
            acc[peeled] = -sign;
        }
    }
    Ok(TruncatedSeries::from_vec(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::euler_product;

    #[test]
    fn factor_list_rejects_mixed_degrees() {
        let a = TruncatedSeries::monomial(1, 1, 4);
        let b = TruncatedSeries::monomial(1, 2, 3);
        assert_eq!(
            FactorList::new(4, vec![a, b]).unwrap_err(),
            TelescopeError::MixedDegrees {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn partial_sums_equal_prefix_products_small_case() {
        let a1 = TruncatedSeries::monomial(1, 1, 4);
        let a2 = TruncatedSeries::from_coeffs(&[0, 0, -2, 1], 4);
        let factors = FactorList::new(4, vec![a1, a2]).unwrap();
        let partials = telescoping_partial_sums(&factors).unwrap();
        assert_eq!(partials.len(), 2);
        assert_eq!(partials[0].coeffs(), &[1, 1, 0, 0, 0]);
        assert_eq!(partials[1].coeffs(), &[1, 1, -2, -1, 1]);
    }

    #[test]
    fn partial_sums_for_negative_monomials() {
        let a1 = TruncatedSeries::from_coeffs(&[0, -1], 3);
        let a2 = TruncatedSeries::from_coeffs(&[0, 0, -1], 3);
        let factors = FactorList::new(3, vec![a1, a2]).unwrap();
        let partials = telescoping_partial_sums(&factors).unwrap();
        assert_eq!(partials.len(), 2);
        assert_eq!(partials[0].coeffs(), &[1, -1, 0, 0]);
        assert_eq!(partials[1].coeffs(), &[1, -1, -1, 1]);
    }

    #[test]
    fn empty_factor_list_gives_the_unit() {
        let factors = FactorList::new(3, vec![]).unwrap();
        let partials = telescoping_partial_sums(&factors).unwrap();
        assert_eq!(partials, vec![TruncatedSeries::one(3)]);
    }

    #[test]
    fn telescoped_product_matches_expanded_product() {
        assert_eq!(telescoped_product_series(0).unwrap().coeffs(), &[1]);
        assert_eq!(telescoped_product_series(1).unwrap().coeffs(), &[1, -1]);
        assert_eq!(
            telescoped_product_series(12).unwrap(),
            euler_product(12).unwrap()
        );
    }

    #[test]
    fn first_stage_remainder() {
        let s = remainder_series(1, 5).unwrap();
        assert_eq!(s.series.coeffs(), &[1, 0, 0, -1, 0, -1]);
        assert!(s.shape_holds());
        let s = remainder_series(1, 4).unwrap();
        assert_eq!(s.series.coeffs(), &[1, 0, 0, -1, 0]);
    }

    #[test]
    fn second_stage_remainder_opens_flat() {
        let s = remainder_series(2, 4).unwrap();
        assert_eq!(s.series.coeffs(), &[1, 0, 0, 0, 0]);
        assert!(s.shape_holds());
    }

    #[test]
    fn third_stage_remainder_shape() {
        // Below degree 11 stage 3 is exactly 1 - x^7.
        let s = remainder_series(3, 10).unwrap();
        let mut expected = [0 as Coeff; 11];
        expected[0] = 1;
        expected[7] = -1;
        assert_eq!(s.series.coeffs(), &expected);
        assert!(s.shape_holds());
        // Deeper truncations keep the same opening: constant 1, then the
        // first nonzero coefficient is -1 at exponent 2k+1 = 7.
        let s = remainder_series(3, 20).unwrap();
        assert_eq!(s.series.coeff(0), 1);
        let first = (1..=20).find(|&e| s.series.coeff(e) != 0);
        assert_eq!(first, Some(7));
        assert_eq!(s.series.coeff(7), -1);
    }

    #[test]
    fn stage_index_zero_rejected() {
        assert_eq!(
            remainder_series(0, 5).unwrap_err(),
            TelescopeError::ZeroStageIndex
        );
    }

    #[test]
    fn stage_law_holds_for_product_and_first_stages() {
        for (k, n) in [(0, 12), (0, 50), (1, 30), (1, 50), (2, 20), (4, 50), (5, 100)] {
            let check = stage_recurrence_check(k, n).unwrap();
            assert!(check.pass, "stage law failed at k={k} n={n}");
            assert_eq!(check.first_mismatch, None);
            assert_eq!(check.degree, n);
        }
    }

    #[test]
    fn stage_check_needs_room_for_the_substituted_stage() {
        assert_eq!(
            stage_recurrence_check(3, 10).unwrap_err(),
            TelescopeError::DegreeTooSmall { needed: 11, got: 10 }
        );
    }

    #[test]
    fn unroll_base_and_small_cases() {
        assert_eq!(unroll(0, 3).unwrap().coeffs(), &[1, -1, 0, 0]);
        assert_eq!(unroll(0, 7).unwrap().coeffs(), &[1, -1, 0, 0, 0, 0, 0, 0]);
        // One substitution peels the k=1 pair: 1 - x - x^2 + x^5.
        assert_eq!(unroll(1, 7).unwrap().coeffs(), &[1, -1, -1, 0, 0, 1, 0, 0]);
        // Two substitutions already reproduce the whole expansion at
        // degree 12, because p_3 = 15 lies beyond it.
        assert_eq!(unroll(2, 12).unwrap(), euler_product(12).unwrap());
    }

    #[test]
    fn unrolled_identity_is_exact_with_the_remainder_attached() {
        // product = unroll(m) + (-1)^(m+1) * x^(p_(m+1)) * S_(m+1),
        // compared here at full truncation degree for one odd and one even
        // number of substitutions.
        for (m, n) in [(3, 100), (4, 120)] {
            let p_next = (m + 1) * (3 * (m + 1) + 1) / 2;
            let sign = if (m + 1) % 2 == 0 { 1 } else { -1 };
            let tail = remainder_series(m + 1, n - p_next)
                .unwrap()
                .series
                .shifted_up(p_next);
            let tail = if sign < 0 { tail.neg().unwrap() } else { tail };
            let rhs = unroll(m, n).unwrap().add(&tail).unwrap();
            assert_eq!(rhs, euler_product(n).unwrap(), "m={m} n={n}");
        }
    }
}
