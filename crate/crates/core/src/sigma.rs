//! Sum-of-divisors tables computed three independent ways, and the signed
//! pentagonal recurrence that makes the third way possible.
//!
//! The recurrence reads earlier table entries at the pentagonal offsets:
//!
//! ```text
//! sigma(n) = sigma(n-1) + sigma(n-2) - sigma(n-5) - sigma(n-7)
//!          + sigma(n-12) + sigma(n-15) - ...
//! ```
//!
//! with two sign conventions baked in: offsets come in pairs sharing one
//! sign, `+ + - - + + ...`, and the term for offset `g = n` (which would
//! read the undefined `sigma(0)`) contributes the number `n` itself. The
//! sum stops at the first offset exceeding `n`, so each entry costs
//! O(sqrt(n)) reads. [`recurrence_trace`] exposes one entry's computation
//! term by term; [`verify_sigma_series`] ties the whole table back to the
//! product expansion it came from.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::pentagonal::pentagonal_terms;
use crate::series::{
    euler_product, lambert_sum, log_derivative_negx, Coeff, SeriesError, TruncatedSeries,
};

/// How a table was produced. All methods must agree; keeping the label
/// around lets reports and files say which path made the numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaMethod {
    /// Trial division per entry, O(sqrt(n)) each. The reference oracle.
    Naive,
    /// One sieve pass adding every d to all its multiples.
    Sieve,
    /// The signed pentagonal recurrence.
    Recurrence,
}

impl SigmaMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SigmaMethod::Naive => "naive",
            SigmaMethod::Sieve => "sieve",
            SigmaMethod::Recurrence => "recurrence",
        }
    }

    pub fn from_name(s: &str) -> Option<SigmaMethod> {
        match s {
            "naive" => Some(SigmaMethod::Naive),
            "sieve" => Some(SigmaMethod::Sieve),
            "recurrence" => Some(SigmaMethod::Recurrence),
            _ => None,
        }
    }
}

impl fmt::Display for SigmaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaError {
    /// Arguments and table sizes start at 1.
    ZeroInput,
    /// A trace at `n` reads entries up to `n - 1`.
    TableTooSmall { needed: usize, max_n: usize },
    /// A table value violates `sigma(1) = 1` or `sigma(n) >= n + 1`.
    InvalidValue { n: usize, value: Coeff },
    /// A table must hold at least one entry.
    EmptyTable,
    /// A sum left the `i128` range.
    Overflow,
    /// An underlying series operation failed.
    Series(SeriesError),
}

impl fmt::Display for SigmaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaError::ZeroInput => write!(f, "argument must be at least 1"),
            SigmaError::TableTooSmall { needed, max_n } => {
                write!(f, "table holds entries up to {max_n}, need {needed}")
            }
            SigmaError::InvalidValue { n, value } => {
                write!(f, "implausible divisor sum {value} at n = {n}")
            }
            SigmaError::EmptyTable => write!(f, "table must hold at least one entry"),
            SigmaError::Overflow => write!(f, "divisor sum overflowed i128"),
            SigmaError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SigmaError {}

impl From<SeriesError> for SigmaError {
    fn from(e: SeriesError) -> Self {
        SigmaError::Series(e)
    }
}

/// Divisor sums for `1 ..= max_n`, tagged with the method that filled them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaTable {
    // values[n] = sigma(n); values[0] is an unused placeholder so indices
    // line up with arguments.
    values: Vec<Coeff>,
    method: SigmaMethod,
}

impl SigmaTable {
    /// Builds a table from externally supplied values, `values[i]` holding
    /// the divisor sum of `i + 1`. Rejects values that no divisor sum can
    /// take: the first entry must be exactly 1, and every later entry is at
    /// least `n + 1` because both 1 and `n` divide `n`.
    pub fn from_values(values: Vec<Coeff>, method: SigmaMethod) -> Result<SigmaTable, SigmaError> {
        if values.is_empty() {
            return Err(SigmaError::EmptyTable);
        }
        for (i, &v) in values.iter().enumerate() {
            let n = i + 1;
            let plausible = if n == 1 { v == 1 } else { v > n as Coeff };
            if !plausible {
                return Err(SigmaError::InvalidValue { n, value: v });
            }
        }
        let mut padded = Vec::with_capacity(values.len() + 1);
        padded.push(0);
        padded.extend_from_slice(&values);
        Ok(SigmaTable {
            values: padded,
            method,
        })
    }

    /// Largest argument the table covers.
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn method(&self) -> SigmaMethod {
        self.method
    }

    /// Divisor sum of `n`. Panics outside `1 ..= max_n`.
    pub fn value(&self, n: usize) -> Coeff {
        assert!(
            n >= 1 && n <= self.max_n(),
            "argument {n} outside table range 1..={}",
            self.max_n()
        );
        self.values[n]
    }

    /// All values in argument order, starting at `n = 1`.
    pub fn values(&self) -> &[Coeff] {
        &self.values[1..]
    }
}

/// Divisor sum of a single `n` by trial division up to `sqrt(n)`.
pub fn sigma_naive(n: usize) -> Result<Coeff, SigmaError> {
    if n == 0 {
        return Err(SigmaError::ZeroInput);
    }
    let mut total: Coeff = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total = total.checked_add(d as Coeff).ok_or(SigmaError::Overflow)?;
            let q = n / d;
            if q != d {
                total = total.checked_add(q as Coeff).ok_or(SigmaError::Overflow)?;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Table for `1 ..= max_n` by per-entry trial division.
pub fn sigma_naive_table(max_n: usize) -> Result<SigmaTable, SigmaError> {
    if max_n == 0 {
        return Err(SigmaError::ZeroInput);
    }
    let mut values = vec![0 as Coeff; max_n + 1];
    for (n, slot) in values.iter_mut().enumerate().skip(1) {
        *slot = sigma_naive(n)?;
    }
    Ok(SigmaTable {
        values,
        method: SigmaMethod::Naive,
    })
}

/// Table for `1 ..= max_n` by a single divisor sieve: every `d` adds itself
/// to each of its multiples.
pub fn sigma_sieve(max_n: usize) -> Result<SigmaTable, SigmaError> {
    if max_n == 0 {
        return Err(SigmaError::ZeroInput);
    }
    let mut values = vec![0 as Coeff; max_n + 1];
    for d in 1..=max_n {
        let dc = d as Coeff;
        let mut m = d;
        while m <= max_n {
            values[m] = values[m].checked_add(dc).ok_or(SigmaError::Overflow)?;
            m += d;
        }
    }
    Ok(SigmaTable {
        values,
        method: SigmaMethod::Sieve,
    })
}

/// Table for `1 ..= max_n` by the signed pentagonal recurrence, each entry
/// built from earlier ones only.
pub fn sigma_recurrence_table(max_n: usize) -> Result<SigmaTable, SigmaError> {
    if max_n == 0 {
        return Err(SigmaError::ZeroInput);
    }
    let mut values = vec![0 as Coeff; max_n + 1];
    for n in 1..=max_n {
        let mut total: Coeff = 0;
        'pairs: for t in pentagonal_terms() {
            // The pair at index k enters the recurrence with sign
            // (-1)^(k+1), opposite to its sign in the series expansion.
            let positive = t.sign < 0;
            for g in [t.exp_minus, t.exp_plus] {
                if g > n {
                    break 'pairs;
                }
                let read = if g == n { n as Coeff } else { values[n - g] };
                total = if positive {
                    total.checked_add(read)
                } else {
                    total.checked_sub(read)
                }
                .ok_or(SigmaError::Overflow)?;
            }
        }
        values[n] = total;
    }
    Ok(SigmaTable {
        values,
        method: SigmaMethod::Recurrence,
    })
}

/// One signed term of a traced recurrence evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceTerm {
    /// Pentagonal offset `g` subtracted from `n`.
    pub offset: usize,
    /// `+1` or `-1`, the recurrence sign of this offset's pair.
    pub sign: i32,
    /// `n - g`, the argument whose divisor sum is read; `0` marks the
    /// boundary case.
    pub argument: usize,
    /// Signed value added to the total: `sign * sigma(argument)`, or
    /// `sign * n` at the boundary.
    pub contribution: Coeff,
    /// Whether this term hit the `g = n` boundary rule.
    pub boundary: bool,
}

/// A recurrence evaluation broken into its terms, for display or audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTrace {
    pub n: usize,
    /// Terms in ascending offset order, exactly the offsets `<= n`.
    pub terms: Vec<TraceTerm>,
    pub total: Coeff,
}

/// Evaluates one recurrence step at `n`, reading earlier values from
/// `table`, and records every term. The table must cover `1 ..= n-1`.
pub fn recurrence_trace(n: usize, table: &SigmaTable) -> Result<RecurrenceTrace, SigmaError> {
    if n == 0 {
        return Err(SigmaError::ZeroInput);
    }
    if table.max_n() < n - 1 {
        return Err(SigmaError::TableTooSmall {
            needed: n - 1,
            max_n: table.max_n(),
        });
    }
    let mut terms = Vec::new();
    let mut total: Coeff = 0;
    'pairs: for t in pentagonal_terms() {
        let sign = if t.sign < 0 { 1 } else { -1 };
        for g in [t.exp_minus, t.exp_plus] {
            if g > n {
                break 'pairs;
            }
            let argument = n - g;
            let boundary = argument == 0;
            let read = if boundary { n as Coeff } else { table.value(argument) };
            let contribution = (sign as Coeff)
                .checked_mul(read)
                .ok_or(SigmaError::Overflow)?;
            total = total.checked_add(contribution).ok_or(SigmaError::Overflow)?;
            terms.push(TraceTerm {
                offset: g,
                sign,
                argument,
                contribution,
                boundary,
            });
        }
    }
    Ok(RecurrenceTrace { n, terms, total })
}

/// Outcome of comparing the three divisor-sum generating series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaSeriesReport {
    pub degree: usize,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

/// Compares, coefficient by coefficient up to degree `n`: the sieve table
/// read as a series, the termwise-expanded sum `x/(1-x) + 2x^2/(1-x^2) +
/// ...`, and `-x * s'/s` for the expanded product `s`. At `n = 0` there is
/// nothing to compare and the check passes vacuously.
pub fn verify_sigma_series(n: usize) -> Result<SigmaSeriesReport, SigmaError> {
    if n == 0 {
        return Ok(SigmaSeriesReport {
            degree: 0,
            pass: true,
            first_mismatch: None,
        });
    }
    let table = sigma_sieve(n)?;
    let mut coeffs = vec![0 as Coeff; n + 1];
    coeffs[1..].copy_from_slice(table.values());
    let from_table = TruncatedSeries::from_vec(coeffs);
    let from_lambert = lambert_sum(n)?;
    let from_product = log_derivative_negx(&euler_product(n)?)?;
    let first_mismatch = (0..=n).find(|&i| {
        let a = from_table.coeff(i);
        a != from_lambert.coeff(i) || a != from_product.coeff(i)
    });
    Ok(SigmaSeriesReport {
        degree: n,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}
