//! Exact-arithmetic kernels for expanding the infinite product
//! `(1-x)(1-x^2)(1-x^3)...` and for computing sum-of-divisors tables from
//! the signed pentagonal-number recurrence that expansion yields.
//!
//! Everything here works on formal power series truncated at a fixed
//! degree, with `i128` coefficients and checked arithmetic throughout:
//! results are exact or the operation reports an overflow error. The crate
//! is `no_std` (it allocates, nothing more), so the algorithmic layer stays
//! independent of the IO/CLI companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod pentagonal;
pub mod series;
pub mod sigma;
pub mod telescope;

pub use pentagonal::{
    difference_sequence, pentagonal_pair, pentagonal_series, pentagonal_terms,
    pentagonal_terms_upto, PentagonalError, PentagonalTerm,
};
pub use series::{
    euler_product, lambert_sum, log_derivative_negx, Coeff, SeriesError, TruncatedSeries,
};
pub use sigma::{
    recurrence_trace, sigma_naive, sigma_naive_table, sigma_recurrence_table, sigma_sieve,
    verify_sigma_series, RecurrenceTrace, SigmaError, SigmaMethod, SigmaSeriesReport, SigmaTable,
    TraceTerm,
};
pub use telescope::{
    remainder_series, stage_recurrence_check, telescoped_product_series, telescoping_partial_sums,
    unroll, FactorList, RemainderStage, StageCheck, TelescopeError,
};
