//! End-to-end tests of the binary: array serialization round-trips, exit
//! status discipline, generator determinism, and the documented file
//! formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lyndon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lyndon-cli-test-{}-{}", name, std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Parses the documented CSV layout back into columns.
fn parse_csv_block(block: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = block.lines();
    let header: Vec<String> = lines
        .next()
        .expect("header row")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}

#[test]
fn build_standard_csv_round_trips_the_example_arrays() {
    let out = run(&[
        "build", "--inline", "banana", "--mode", "standard", "--format", "csv",
    ]);
    assert!(out.status.success());
    let (header, rows) = parse_csv_block(&stdout(&out));
    assert_eq!(
        header,
        ["framed_i", "symbol", "next", "prev", "nlce", "plce", "lambda"]
    );
    assert_eq!(rows.len(), 8);
    let col = |idx: usize| -> Vec<usize> { rows.iter().map(|r| r[idx].parse().unwrap()).collect() };
    assert_eq!(col(0), (1..=8).collect::<Vec<_>>());
    assert_eq!(col(2), [9, 3, 5, 5, 7, 7, 8, 9]);
    assert_eq!(col(3), [0, 1, 1, 3, 1, 5, 1, 1]);
    assert_eq!(col(6), [8, 1, 2, 1, 2, 1, 1, 1]);
    assert_eq!(rows[0][1], "#");
    assert_eq!(rows[7][1], "$");
}

#[test]
fn build_inverse_csv_matches_the_example_arrays() {
    let out = run(&[
        "build", "--inline", "aababbaa", "--mode", "inverse", "--format", "csv",
    ]);
    assert!(out.status.success());
    let (header, rows) = parse_csv_block(&stdout(&out));
    assert_eq!(
        header,
        [
            "framed_i",
            "symbol",
            "next_inv",
            "prev_inv",
            "nlce",
            "plce",
            "lambda_inv"
        ]
    );
    let col = |idx: usize| -> Vec<usize> { rows.iter().map(|r| r[idx].parse().unwrap()).collect() };
    assert_eq!(col(2), [11, 3, 4, 6, 6, 10, 10, 9, 10, 11]);
    assert_eq!(col(3), [0, 1, 1, 1, 4, 1, 6, 7, 7, 1]);
    assert_eq!(col(4), [0, 1, 0, 1, 0, 0, 0, 1, 0, 0]);
    assert_eq!(col(6), [10, 2, 1, 3, 1, 4, 3, 2, 1, 1]);
}

#[test]
fn build_both_emits_two_blocks() {
    let out = run(&[
        "build", "--inline", "ab", "--mode", "both", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    assert!(blocks[0].contains(",lambda"));
    assert!(blocks[1].contains(",lambda_inv"));
}

#[test]
fn empty_inline_input_is_a_usage_error() {
    let out = run(&["build", "--inline", "", "--mode", "standard"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn u32le_build_matches_the_byte_equivalent() {
    let dir = tmp_dir("u32le");
    let path = dir.join("ints.bin");
    // records 300, 5, 300 behave like the pattern "bab" under natural order
    let mut bytes = Vec::new();
    for v in [300u32, 5, 300] {
        bytes.extend_from_slice(&v.to_le_bytes());
    }
    std::fs::write(&path, bytes).unwrap();
    let out = run(&[
        "build",
        "--input",
        path.to_str().unwrap(),
        "--u32le",
        "--mode",
        "standard",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let byte_out = run(&[
        "build", "--inline", "bab", "--mode", "standard", "--format", "csv",
    ]);
    let (_, int_rows) = parse_csv_block(&stdout(&out));
    let (_, byte_rows) = parse_csv_block(&stdout(&byte_out));
    let nums = |rows: &[Vec<String>]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r[2..].to_vec()).collect()
    };
    assert_eq!(nums(&int_rows), nums(&byte_rows));
    assert_eq!(int_rows[1][1], "300");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn truncated_u32le_file_is_rejected() {
    let dir = tmp_dir("u32le-bad");
    let path = dir.join("bad.bin");
    std::fs::write(&path, [1u8, 2, 3]).unwrap();
    let out = run(&[
        "build",
        "--input",
        path.to_str().unwrap(),
        "--u32le",
        "--mode",
        "standard",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_accepts_small_words() {
    let out = run(&["verify", "--inline", "a"]);
    assert!(out.status.success());
    let out = run(&["verify", "--inline", "babacbabaa"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("positions 1 and 6"));
}

#[test]
fn verify_exhaustive_small_sweep_passes() {
    let out = run(&["verify", "--exhaustive", "2", "7"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("verified 254 words exhaustively"));
}

#[test]
fn verify_refuses_oversized_words_with_guidance() {
    let long = "a".repeat(5000);
    let out = run(&["verify", "--inline", &long]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--threshold"));
}

#[test]
fn verify_refuses_oversized_exhaustive_budget() {
    let out = run(&["verify", "--exhaustive", "4", "20"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_writes_descriptor() {
    let dir = tmp_dir("gen");
    let a = dir.join("a.bin");
    let b = dir.join("b.bin");
    for path in [&a, &b] {
        let out = run(&[
            "gen",
            "--family",
            "border-heavy",
            "--n",
            "1000",
            "--sigma",
            "2",
            "--seed",
            "7",
            "--beta",
            "1/4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
    assert_eq!(bytes_a.len(), 1000);
    assert_eq!(bytes_a[..250], bytes_a[750..]);
    let meta = std::fs::read_to_string(dir.join("a.bin.meta")).unwrap();
    assert!(meta.contains("family=border_heavy"));
    assert!(meta.contains("n=1000"));
    assert!(meta.contains("seed=7"));
    assert!(meta.contains("border_fraction=1/4"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn gen_honors_the_output_directory_env() {
    let dir = tmp_dir("envdir");
    let out = bin()
        .env("LYNDON_OUT_DIR", &dir)
        .args([
            "gen",
            "--family",
            "fibonacci",
            "--n",
            "13",
            "--out",
            "fib.bin",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        std::fs::read(dir.join("fib.bin")).unwrap(),
        b"abaababaabaab"
    );
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn compare_reports_verdicts_and_rules() {
    let out = run(&[
        "compare", "--inline", "aababbaa", "--pairs", "4:6,6:8", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,outcome,rule"));
    assert_eq!(lines.next(), Some("4,6,Less,2"));
    assert_eq!(lines.next(), Some("6,8,Greater,3"));
}

#[test]
fn compare_rejects_bad_pairs() {
    let out = run(&["compare", "--inline", "abc", "--pairs", "3-4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_csv_has_the_documented_columns() {
    let out = run(&[
        "bench", "--suite", "random", "--sizes", "1e3", "--sigmas", "2", "--reps", "1", "--format",
        "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("input_id,algorithm,n,reps,core_us,recovery_us,explicit_comparisons,reuse_hits,extension_calls")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("random-s2-n1000-seed42,NSS,1000,1,"));
    assert!(rows[1].starts_with("random-s2-n1000-seed42,NGS,1000,1,"));
}

#[test]
fn bench_border_suite_reports_growth_factors() {
    let out = run(&[
        "bench", "--suite", "border", "--sizes", "2e3,2e4", "--reps", "1",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("# ratio NGS/NSS"));
    assert!(text.contains("# border 1of4 NSS: comparisons x"));
    assert!(text.contains("# border 2of5 NGS: comparisons x"));
}

#[test]
fn bench_size_ranges_expand_to_decades() {
    let out = run(&[
        "bench", "--suite", "random", "--sizes", "1e2..1e4", "--sigmas", "2", "--reps", "1",
        "--format", "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    for n in ["n100-", "n1000-", "n10000-"] {
        assert!(text.contains(n), "missing size {} in {}", n, text);
    }
    assert_eq!(text.lines().count(), 1 + 6);
}

#[test]
fn bench_missing_file_is_an_io_error() {
    let out = run(&["bench", "--input", "/nonexistent/nope.bin", "--reps", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_rejects_reversed_pairs() {
    let out = run(&["compare", "--inline", "abc", "--pairs", "4:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_file_input_works() {
    let dir = tmp_dir("bench-file");
    let path = dir.join("w.bin");
    std::fs::write(&path, b"abracadabra".repeat(100)).unwrap();
    let out = run(&[
        "bench",
        "--input",
        path.to_str().unwrap(),
        "--reps",
        "1",
        "--format",
        "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("w.bin,NSS,1100,1,"));
    std::fs::remove_dir_all(dir).ok();
}
