//! Text rendering of traced recurrence evaluations, in the classical
//! notation: the divisor-sum operator applied to each shifted argument,
//! then the numeric values, then the total, all joined by `=`.

use std::fmt::Write as _;

use pentag_core::RecurrenceTrace;

/// Renders a trace as one line, e.g.
/// `∫10 = ∫9 + ∫8 − ∫5 − ∫3 = 13 + 15 − 6 − 4 = 18`.
///
/// Boundary terms appear as the bare number in both sections. With `ascii`
/// the operator becomes `S` and the minus sign the ASCII hyphen, for
/// environments that cannot render the default glyphs. Sections that come
/// out identical collapse, so `trace 1` reads `∫1 = 1` rather than
/// repeating itself.
pub fn render_trace(trace: &RecurrenceTrace, ascii: bool) -> String {
    let (op, minus) = if ascii { ("S", "-") } else { ("∫", "−") };
    let mut symbolic = String::new();
    let mut numeric = String::new();
    for (i, t) in trace.terms.iter().enumerate() {
        if i > 0 {
            let joiner = if t.sign < 0 { minus } else { "+" };
            let _ = write!(symbolic, " {joiner} ");
            let _ = write!(numeric, " {joiner} ");
        } else if t.sign < 0 {
            symbolic.push_str(minus);
            numeric.push_str(minus);
        }
        if t.boundary {
            let _ = write!(symbolic, "{}", trace.n);
        } else {
            let _ = write!(symbolic, "{op}{}", t.argument);
        }
        let _ = write!(numeric, "{}", t.contribution.unsigned_abs());
    }
    let mut sections = vec![symbolic, numeric, trace.total.to_string()];
    sections.dedup();
    let mut out = format!("{op}{}", trace.n);
    for s in sections {
        out.push_str(" = ");
        out.push_str(&s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pentag_core::{recurrence_trace, sigma_sieve};

    fn rendered(n: usize, ascii: bool) -> String {
        let table = sigma_sieve(n.max(2) - 1).unwrap();
        render_trace(&recurrence_trace(n, &table).unwrap(), ascii)
    }

    #[test]
    fn plain_instance() {
        assert_eq!(rendered(10, false), "∫10 = ∫9 + ∫8 − ∫5 − ∫3 = 13 + 15 − 6 − 4 = 18");
    }

    #[test]
    fn negative_boundary_instance() {
        assert_eq!(rendered(7, false), "∫7 = ∫6 + ∫5 − ∫2 − 7 = 12 + 6 − 3 − 7 = 8");
    }

    #[test]
    fn positive_boundary_instance() {
        assert_eq!(
            rendered(12, false),
            "∫12 = ∫11 + ∫10 − ∫7 − ∫5 + 12 = 12 + 18 − 8 − 6 + 12 = 28"
        );
    }

    #[test]
    fn ascii_variant() {
        assert_eq!(rendered(10, true), "S10 = S9 + S8 - S5 - S3 = 13 + 15 - 6 - 4 = 18");
    }

    #[test]
    fn duplicate_sections_collapse() {
        assert_eq!(rendered(1, false), "∫1 = 1");
        assert_eq!(rendered(2, false), "∫2 = ∫1 + 2 = 1 + 2 = 3");
    }
}
