use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use pentag::bench::{build_table, run_bench};
use pentag::checks::identity_suite;
use pentag::table_io::{write_table, TableFormat};
use pentag::tracefmt::render_trace;
use pentag_core::{euler_product, recurrence_trace, sigma_naive, SigmaMethod};

#[derive(Parser)]
#[command(
    name = "pentag",
    version,
    about = "Divisor-sum tables and product-expansion identities over exact truncated power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Naive,
    Sieve,
    Recurrence,
}

impl From<MethodArg> for SigmaMethod {
    fn from(m: MethodArg) -> SigmaMethod {
        match m {
            MethodArg::Naive => SigmaMethod::Naive,
            MethodArg::Sieve => SigmaMethod::Sieve,
            MethodArg::Recurrence => SigmaMethod::Recurrence,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Tsv,
}

impl From<FormatArg> for TableFormat {
    fn from(f: FormatArg) -> TableFormat {
        match f {
            FormatArg::Csv => TableFormat::Csv,
            FormatArg::Tsv => TableFormat::Tsv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the divisor sum of one number
    Sigma {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: MethodArg,
    },
    /// Write the divisor-sum table for 1..=N
    Table {
        #[arg(value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: MethodArg,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Print the expanded product's coefficients through degree N
    Expand {
        #[arg(value_name = "N")]
        degree: u64,
    },
    /// Run the identity-check suite at a truncation degree
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        /// Highest stage index to check (needs degree >= 3*stages + 2)
        #[arg(long, default_value_t = 0)]
        stages: u64,
    },
    /// Show one recurrence evaluation term by term
    Trace {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Use ASCII glyphs (S, -) instead of the default symbols
        #[arg(long)]
        ascii: bool,
    },
    /// Time the table builders and fingerprint their outputs
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        /// Comma-separated subset of naive,sieve,recurrence
        #[arg(long, value_enum, value_delimiter = ',', required = true)]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        /// Write the CSV report to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Largest size the per-entry trial-division method is allowed in the
/// bench harness; beyond this it only wastes the run's time budget.
const NAIVE_BENCH_LIMIT: u64 = 10_000;

const USAGE_EXIT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        // A closed pipe on output (e.g. `pentag verify | head`) is not a
        // failure of ours; stop quietly.
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|cause| cause.downcast_ref::<io::Error>())
        .any(|io_err| io_err.kind() == io::ErrorKind::BrokenPipe)
}

fn usage_error(message: &str) -> Result<ExitCode> {
    eprintln!("error: {message}");
    Ok(ExitCode::from(USAGE_EXIT))
}

fn write_out<F>(out: Option<PathBuf>, emit: F) -> Result<()>
where
    F: Fn(&mut dyn Write) -> Result<()>,
{
    match out {
        Some(path) => {
            let file = File::create(&path)
                .with_context(|| format!("cannot write {}", path.display()))?;
            let mut w = BufWriter::new(file);
            emit(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            emit(&mut lock)?;
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Sigma { n, method } => {
            let n = n as usize;
            let value = match SigmaMethod::from(method) {
                // A single value does not need the whole table.
                SigmaMethod::Naive => sigma_naive(n)?,
                table_method => build_table(table_method, n)?.value(n),
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            max,
            method,
            out,
            format,
        } => {
            let table = build_table(method.into(), max as usize)?;
            let format = TableFormat::from(format);
            write_out(out, |w| write_table(w, &table, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { degree } => {
            let s = euler_product(degree as usize)?;
            let rendered: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}", rendered.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { degree, stages } => {
            let (degree, stages) = (degree as usize, stages as usize);
            let needed = 3 * stages + 2;
            if degree < needed {
                return usage_error(&format!(
                    "--degree {degree} is too small for --stages {stages}; need at least {needed}"
                ));
            }
            let outcomes = identity_suite(degree, stages)?;
            let stdout = io::stdout();
            let mut w = stdout.lock();
            for o in &outcomes {
                writeln!(w, "{}", o.line())?;
            }
            if outcomes.iter().all(|o| o.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Trace { n, ascii } => {
            let n = n as usize;
            // The trace reads entries below n; the recurrence builds them.
            let table = build_table(SigmaMethod::Recurrence, n.max(2) - 1)?;
            let trace = recurrence_trace(n, &table)?;
            println!("{}", render_trace(&trace, ascii));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            max,
            methods,
            reps,
            out,
        } => {
            if methods.contains(&MethodArg::Naive) && max > NAIVE_BENCH_LIMIT {
                return usage_error(&format!(
                    "method naive is limited to --max {NAIVE_BENCH_LIMIT} (got {max})"
                ));
            }
            let methods: Vec<SigmaMethod> = methods.into_iter().map(Into::into).collect();
            let report = run_bench(max as usize, &methods, reps)?;
            write_out(out, |w| report.write_csv(w))?;
            if report.checksums_agree() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: checksums disagree across methods");
                Ok(ExitCode::FAILURE)
            }
        }
    }
}
