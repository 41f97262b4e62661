//! Wall-clock comparison of the table builders, with a fingerprint that
//! forces the timed outputs to agree.

use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use pentag_core::{
    sigma_naive_table, sigma_recurrence_table, sigma_sieve, SigmaError, SigmaMethod, SigmaTable,
};

/// Fastest-of-reps measurement for one method at one size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub method: SigmaMethod,
    pub max_n: usize,
    pub reps: u32,
    /// Minimum single-build wall time across the reps, in monotonic-clock
    /// nanoseconds: the usual low-noise statistic for a deterministic
    /// CPU-bound kernel.
    pub ns_per_rep: u128,
    /// Sum of all table values modulo 2^64.
    pub checksum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// All methods build the same table, so all checksums must match.
    pub fn checksums_agree(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].checksum == w[1].checksum)
    }

    /// CSV with header `method,max_n,reps,ns_per_rep,checksum`.
    pub fn write_csv<W: Write + ?Sized>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "method,max_n,reps,ns_per_rep,checksum")?;
        for r in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{}",
                r.method, r.max_n, r.reps, r.ns_per_rep, r.checksum
            )?;
        }
        Ok(())
    }
}

pub fn build_table(method: SigmaMethod, max_n: usize) -> Result<SigmaTable, SigmaError> {
    match method {
        SigmaMethod::Naive => sigma_naive_table(max_n),
        SigmaMethod::Sieve => sigma_sieve(max_n),
        SigmaMethod::Recurrence => sigma_recurrence_table(max_n),
    }
}

/// Sum of all table values modulo 2^64. Values are positive, so the
/// truncating cast is exactly reduction mod 2^64.
pub fn table_checksum(table: &SigmaTable) -> u64 {
    table
        .values()
        .iter()
        .fold(0u64, |acc, &v| acc.wrapping_add(v as u64))
}

/// Builds the table `reps` times per method, keeping the fastest build
/// time and the checksum (identical across reps by determinism).
pub fn run_bench(
    max_n: usize,
    methods: &[SigmaMethod],
    reps: u32,
) -> Result<BenchReport, SigmaError> {
    if reps == 0 || methods.is_empty() {
        return Err(SigmaError::ZeroInput);
    }
    let mut rows = Vec::with_capacity(methods.len());
    for &method in methods {
        let mut best = u128::MAX;
        let mut checksum = 0u64;
        for _ in 0..reps {
            let start = Instant::now();
            let table = build_table(method, max_n)?;
            let elapsed = start.elapsed().as_nanos();
            best = best.min(elapsed);
            checksum = table_checksum(&table);
        }
        rows.push(BenchRow {
            method,
            max_n,
            reps,
            ns_per_rep: best,
            checksum,
        });
    }
    Ok(BenchReport { rows })
}
