//! Divisor-sum tables as delimited text: header `n,sigma`, one row per
//! argument ascending from 1, line-feed terminators, no trailing
//! separator. The same shape serves CSV and TSV; only the separator
//! changes.

use std::io::{BufRead, Write};

use anyhow::{bail, ensure, Context, Result};
use pentag_core::{Coeff, SigmaMethod, SigmaTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Tsv,
}

impl TableFormat {
    pub fn separator(&self) -> char {
        match self {
            TableFormat::Csv => ',',
            TableFormat::Tsv => '\t',
        }
    }
}

pub fn write_table<W: Write + ?Sized>(
    w: &mut W,
    table: &SigmaTable,
    format: TableFormat,
) -> Result<()> {
    let sep = format.separator();
    writeln!(w, "n{sep}sigma")?;
    for (i, v) in table.values().iter().enumerate() {
        writeln!(w, "{}{sep}{v}", i + 1)?;
    }
    Ok(())
}

/// Parses a table written by [`write_table`], inferring the separator from
/// the header. Rows must ascend from 1 without gaps; values pass the same
/// plausibility validation as any externally supplied table. The `method`
/// label records where the caller says the file came from.
pub fn read_table<R: BufRead>(r: R, method: SigmaMethod) -> Result<SigmaTable> {
    let mut lines = r.lines();
    let header = lines.next().context("empty table file")??;
    let sep = match header.as_str() {
        "n,sigma" => ',',
        "n\tsigma" => '\t',
        other => bail!("unrecognized table header {other:?}"),
    };
    let mut values: Vec<Coeff> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let row = idx + 1;
        let (left, right) = line
            .split_once(sep)
            .with_context(|| format!("row {row}: missing separator"))?;
        let n: usize = left.parse().with_context(|| format!("row {row}: bad n"))?;
        ensure!(n == row, "row {row}: expected n={row}, found n={n}");
        let v: Coeff = right
            .parse()
            .with_context(|| format!("row {row}: bad value"))?;
        values.push(v);
    }
    Ok(SigmaTable::from_values(values, method)?)
}
