//! Byte-for-byte transcripts of `--format json` output.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the expected files after an
//! intentional format change.

use std::path::PathBuf;

use rometric_cli::invoke;

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn path(name: &str) -> String {
    golden_dir().join(name).to_string_lossy().into_owned()
}

/// Runs `args` (file names resolved in the golden directory) and compares
/// stdout with `expected`.
fn check(args: &[&str], expected: &str, code: u8) {
    let mut argv = vec!["rometric".to_string()];
    for a in args {
        let resolved = if a.ends_with(".json") { path(a) } else { a.to_string() };
        argv.push(resolved);
    }
    argv.extend(["--format".to_string(), "json".to_string()]);
    let out = invoke(&argv);
    assert_eq!(out.code, code, "{args:?}: stderr {}", out.stderr);
    let file = golden_dir().join(expected);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&file, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&file).unwrap();
    assert_eq!(out.stdout, want, "{args:?} differs from {expected}");
}

#[test]
fn classify_three_point() {
    check(&["classify", "--metric", "three_point.json"], "classify_three_point.out.json", 0);
}

#[test]
fn topology_of_zero_metric() {
    check(&["topology", "--metric", "zero2.json"], "topology_zero2.out.json", 0);
}

#[test]
fn metrize_then_verify_sierpinski() {
    check(
        &["metrize", "--topology", "sierpinski.json"],
        "metrize_sierpinski.out.json",
        0,
    );
    // The metrize output is itself a metric document.
    check(
        &[
            "verify",
            "--topology",
            "sierpinski.json",
            "--metric",
            "metrize_sierpinski.out.json",
        ],
        "verify_sierpinski.out.json",
        0,
    );
}

#[test]
fn generalized_basis_counterexample() {
    check(
        &["gcheck", "--space", "basis_counterexample.json"],
        "gcheck_counterexample.out.json",
        1,
    );
}

#[test]
fn invalid_topology_report() {
    check(
        &["validate-topology", "--topology", "not_topology.json"],
        "validate_not_topology.out.json",
        1,
    );
}

#[test]
fn quotient_and_universal() {
    check(
        &["quotient", "--topology", "non_t0.json"],
        "quotient_non_t0.out.json",
        0,
    );
    check(
        &["universal", "--topology", "non_t0.json"],
        "universal_non_t0.out.json",
        0,
    );
}

#[test]
fn census_and_crosscheck() {
    check(&["census", "2"], "census_2.out.json", 0);
    check(&["crosscheck", "2"], "crosscheck_2.out.json", 0);
}

#[test]
fn search_sierpinski() {
    check(
        &["search", "sierpinski.json", "--values", "0,1"],
        "search_sierpinski.out.json",
        0,
    );
}

#[test]
fn line_balls() {
    check(&["line", "ball", "k_topology", "0", "3/2"], "line_ball_k.out.json", 0);
    check(&["line", "ball", "lower_limit", "0", "1/2"], "line_ball_ll.out.json", 0);
}

#[test]
fn example_and_embedding() {
    check(&["example", "particular_set"], "example_particular_set.out.json", 0);
    check(
        &["embed", "--topology", "sierpinski.json", "--reversed"],
        "embed_sierpinski.out.json",
        0,
    );
}
