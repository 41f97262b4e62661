//! The identity-check suite behind `verify`: every expansion in the
//! workspace computed two ways and compared coefficient by coefficient.

use anyhow::Result;
use pentag_core::{
    euler_product, pentagonal_series, remainder_series, stage_recurrence_check,
    telescoped_product_series, unroll, verify_sigma_series,
};

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    /// Lowest disagreeing exponent when the check fails.
    pub first_mismatch: Option<usize>,
}

impl CheckOutcome {
    fn from_mismatch(name: String, first_mismatch: Option<usize>) -> Self {
        CheckOutcome {
            name,
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    /// Stable one-line report form: `PASS <name>` or
    /// `FAIL <name> (first mismatch at x^<e>)`.
    pub fn line(&self) -> String {
        if self.pass {
            format!("PASS {}", self.name)
        } else if let Some(e) = self.first_mismatch {
            format!("FAIL {} (first mismatch at x^{e})", self.name)
        } else {
            format!("FAIL {}", self.name)
        }
    }
}

/// Runs the whole identity suite at one truncation degree:
///
/// - the sparse signed expansion against the multiplied-out product;
/// - the telescoped form of the product against the same;
/// - the stage law at `k = 0..=stages`;
/// - the unrolled closed form plus its attached remainder, for each
///   `m = 0..=stages` whose attachment exponent fits inside `degree`
///   (the identity does not exist at the truncation otherwise);
/// - the divisor-sum series chain.
///
/// The caller is responsible for `degree >= 3*stages + 2`, which makes
/// every stage check expressible.
pub fn identity_suite(degree: usize, stages: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let product = euler_product(degree)?;

    let sparse = pentagonal_series(degree);
    out.push(CheckOutcome::from_mismatch(
        "pentagonal-product".into(),
        sparse.first_prefix_mismatch(&product),
    ));

    let telescoped = telescoped_product_series(degree)?;
    out.push(CheckOutcome::from_mismatch(
        "telescoped-product".into(),
        telescoped.first_prefix_mismatch(&product),
    ));

    for k in 0..=stages {
        let check = stage_recurrence_check(k, degree)?;
        out.push(CheckOutcome {
            name: format!("stage-{k}"),
            pass: check.pass,
            first_mismatch: check.first_mismatch,
        });
    }

    for m in 0..=stages {
        let attach = (m + 1) * (3 * (m + 1) + 1) / 2;
        if attach > degree {
            continue;
        }
        let tail = remainder_series(m + 1, degree - attach)?
            .series
            .shifted_up(attach);
        let tail = if (m + 1) % 2 == 0 { tail } else { tail.neg()? };
        let rhs = unroll(m, degree)?.add(&tail)?;
        out.push(CheckOutcome::from_mismatch(
            format!("unroll-{m}"),
            product.first_prefix_mismatch(&rhs),
        ));
    }

    let sigma = verify_sigma_series(degree)?;
    out.push(CheckOutcome {
        name: "sigma-series".into(),
        pass: sigma.pass,
        first_mismatch: sigma.first_mismatch,
    });

    Ok(out)
}
