//! End-to-end checks of the binary: byte-exact output and the exit-code
//! contract (0 success, 1 verification/benchmark mismatch, 2 usage error).

use std::process::{Command, Output};

use pentag::table_io::read_table;
use pentag_core::SigmaMethod;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn sigma_prints_the_value() {
    let out = run(&["sigma", "10"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "18\n");
    let out = run(&["sigma", "1"]);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn sigma_methods_agree() {
    for method in ["naive", "sieve", "recurrence"] {
        let out = run(&["sigma", "100", "--method", method]);
        assert_eq!(exit_code(&out), 0, "method {method}");
        assert_eq!(stdout_of(&out), "217\n", "method {method}");
    }
}

#[test]
fn sigma_rejects_non_positive_and_garbage() {
    assert_eq!(exit_code(&run(&["sigma", "0"])), 2);
    assert_eq!(exit_code(&run(&["sigma", "-3"])), 2);
    assert_eq!(exit_code(&run(&["sigma", "ten"])), 2);
}

#[test]
fn table_csv_to_stdout() {
    let out = run(&["table", "5", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "n,sigma\n1,1\n2,3\n3,4\n4,7\n5,6\n");
}

#[test]
fn table_tsv_and_single_row() {
    let out = run(&["table", "1", "--format", "tsv"]);
    assert_eq!(stdout_of(&out), "n\tsigma\n1\t1\n");
    let out = run(&["table", "1"]);
    assert_eq!(stdout_of(&out), "n,sigma\n1,1\n");
}

#[test]
fn table_round_trips_through_the_reader() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&["table", "300", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "");
    let file = std::fs::File::open(&path).unwrap();
    let parsed = read_table(std::io::BufReader::new(file), SigmaMethod::Recurrence).unwrap();
    assert_eq!(parsed.max_n(), 300);
    assert_eq!(parsed.value(300), 868);
}

#[test]
fn table_methods_write_identical_files_at_desk_scale() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("recurrence.csv");
    let b = dir.path().join("sieve.csv");
    let out = run(&["table", "100000", "--method", "recurrence", "--out", a.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let out = run(&["table", "100000", "--method", "sieve", "--out", b.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn table_unwritable_path_exits_one() {
    let out = run(&["table", "5", "--out", "/nonexistent-dir/t.csv"]);
    assert_eq!(exit_code(&out), 1);
    assert!(!out.stderr.is_empty());
}

#[test]
fn expand_prints_coefficients() {
    let out = run(&["expand", "12"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "1 -1 -1 0 0 1 0 1 0 0 0 0 -1\n");
    assert_eq!(stdout_of(&run(&["expand", "0"])), "1\n");
}

#[test]
fn expand_positive_entries_sit_at_the_pair_exponents() {
    let out = run(&["expand", "26"]);
    let coeffs: Vec<i64> = stdout_of(&out)
        .trim()
        .split(' ')
        .map(|c| c.parse().unwrap())
        .collect();
    assert_eq!(coeffs.len(), 27);
    assert_eq!(coeffs[22], 1);
    assert_eq!(coeffs[26], 1);
}

#[test]
fn verify_small_suite_output() {
    let out = run(&["verify", "--degree", "12", "--stages", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "PASS pentagonal-product\nPASS telescoped-product\nPASS stage-0\nPASS unroll-0\nPASS sigma-series\n"
    );
}

#[test]
fn verify_deeper_suite_passes() {
    let out = run(&["verify", "--degree", "100", "--stages", "5"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn verify_degree_must_fit_the_stages() {
    let out = run(&["verify", "--degree", "10", "--stages", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn trace_golden_lines() {
    let out = run(&["trace", "10"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "∫10 = ∫9 + ∫8 − ∫5 − ∫3 = 13 + 15 − 6 − 4 = 18\n"
    );
    assert_eq!(
        stdout_of(&run(&["trace", "7"])),
        "∫7 = ∫6 + ∫5 − ∫2 − 7 = 12 + 6 − 3 − 7 = 8\n"
    );
    assert_eq!(
        stdout_of(&run(&["trace", "12"])),
        "∫12 = ∫11 + ∫10 − ∫7 − ∫5 + 12 = 12 + 18 − 8 − 6 + 12 = 28\n"
    );
}

#[test]
fn trace_ascii_and_degenerate_cases() {
    assert_eq!(
        stdout_of(&run(&["trace", "10", "--ascii"])),
        "S10 = S9 + S8 - S5 - S3 = 13 + 15 - 6 - 4 = 18\n"
    );
    assert_eq!(stdout_of(&run(&["trace", "1"])), "∫1 = 1\n");
    assert_eq!(exit_code(&run(&["trace", "0"])), 2);
}

#[test]
fn bench_trivial_row() {
    let out = run(&["bench", "--max", "1", "--methods", "sieve", "--reps", "1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "method,max_n,reps,ns_per_rep,checksum");
    assert_eq!(lines.len(), 2);
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[0], "sieve");
    assert_eq!(fields[1], "1");
    assert_eq!(fields[2], "1");
    assert!(fields[3].parse::<u64>().is_ok());
    assert_eq!(fields[4], "1");
}

#[test]
fn bench_writes_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = run(&[
        "bench", "--max", "100", "--methods", "naive,sieve,recurrence", "--reps", "2", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    let sums: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert!(sums.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn bench_usage_guards() {
    // Trial division at 10^5 would dominate the harness; refused.
    assert_eq!(
        exit_code(&run(&["bench", "--max", "100000", "--methods", "naive", "--reps", "1"])),
        2
    );
    // Methods are mandatory, non-empty, and from the known set.
    assert_eq!(exit_code(&run(&["bench", "--max", "10"])), 2);
    assert_eq!(exit_code(&run(&["bench", "--max", "10", "--methods", ""])), 2);
    assert_eq!(exit_code(&run(&["bench", "--max", "10", "--methods", "fast"])), 2);
    assert_eq!(
        exit_code(&run(&["bench", "--max", "10", "--methods", "sieve", "--reps", "0"])),
        2
    );
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(exit_code(&run(&["frobnicate"])), 2);
    assert_eq!(exit_code(&run(&[])), 2);
}
