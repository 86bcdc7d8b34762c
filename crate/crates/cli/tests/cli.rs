//! End-to-end tests of the `germlct` binary: worked examples, the exit-code
//! contract, JSON stability, and report re-verification.
//!
//! # Conventions
//!
//! Each test runs the compiled binary through `std::process::Command` on a
//! config file written to a per-test path under the system temp directory,
//! so tests stay independent under parallel execution.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn write_input(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("germlct-cli-tests");
    fs::create_dir_all(&dir).expect("temp dir is writable");
    let path = dir.join(name);
    fs::write(&path, body).expect("test input is writable");
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germlct"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

const CUSP: &str = r#"
[curves]
c = "y^2 - x^3"

[[divisor]]
curve = "c"
coefficient = "1"
"#;

const AXIS_FAMILY: &str = r#"
[curves]
h = "x"
v = "y"
f = "y - x^4"

[family]
curve = "f"

[[divisor]]
curve = "h"
coefficient = "1/2"

[[divisor]]
curve = "v"
coefficient = "1/2"
"#;

/// A heavy line through two transverse branches: not log canonical, every
/// bound predicate applicable except the transverse-pair one.
const HEAVY_LINE: &str = r#"
a1 = "0"
a2 = "0"

[curves]
d1 = "x"
d2 = "y"
line = "y - x"

[deltas]
delta1 = "d1"
delta2 = "d2"

[bounds]
alpha = "1"
beta = "1"
a = "1"
b = "2"
m = "1"
n = "0"

[integer_bounds]
n = 3

[[divisor]]
curve = "line"
coefficient = "2"
"#;

#[test]
fn lct_of_the_cusp_is_five_sixths() {
    let config = write_input("cusp.toml", CUSP);
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("lct = 5/6"), "unexpected output: {text}");
    assert!(text.contains("resolution depth: 3"), "unexpected output: {text}");
}

#[test]
fn family_threshold_of_the_tangent_quartic_is_five_eighths() {
    let config = write_input("family.toml", AXIS_FAMILY);
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    assert!(
        stdout_of(&out).contains("threshold = 5/8"),
        "unexpected output: {}",
        stdout_of(&out)
    );
}

#[test]
fn empty_divisor_is_a_semantic_error() {
    let config = write_input("empty.toml", "[curves]\nc = \"y^2 - x^3\"\n");
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("empty divisor"));
}

#[test]
fn polynomial_syntax_errors_exit_two_with_a_position() {
    let config = write_input(
        "bad-poly.toml",
        "[curves]\nc = \"y^2 - + x\"\n\n[[divisor]]\ncurve = \"c\"\ncoefficient = \"1\"\n",
    );
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("position"), "stderr: {}", stderr_of(&out));
}

#[test]
fn document_syntax_errors_exit_two_with_a_position() {
    let config = write_input("broken.toml", "not toml [[[\n");
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 1"), "stderr: {}", stderr_of(&out));
}

#[test]
fn unknown_curve_names_exit_three() {
    let config = write_input(
        "unknown-curve.toml",
        "[curves]\nc = \"y^2 - x^3\"\n\n[[divisor]]\ncurve = \"missing\"\ncoefficient = \"1\"\n",
    );
    let out = run(&["lct", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("missing"));
}

#[test]
fn loglc_reports_the_verdict_with_a_witness() {
    let config = write_input("loglc-cusp.toml", CUSP);
    let out = run(&["loglc", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("log canonical: no"), "unexpected output: {text}");
    assert!(text.contains("excess"), "unexpected output: {text}");

    let lc = write_input(
        "loglc-light-cusp.toml",
        "[curves]\nc = \"y^2 - x^3\"\n\n[[divisor]]\ncurve = \"c\"\ncoefficient = \"5/6\"\n",
    );
    let out = run(&["loglc", lc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("log canonical: yes"));
}

#[test]
fn imult_needs_exactly_two_divisor_entries() {
    let config = write_input(
        "imult-pair.toml",
        "[curves]\nc = \"y^2 - x^3\"\nl = \"x\"\n\n[[divisor]]\ncurve = \"c\"\ncoefficient = \"1\"\n\n[[divisor]]\ncurve = \"l\"\ncoefficient = \"1\"\n",
    );
    let out = run(&["imult", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("intersection multiplicity = 2"));

    let single = write_input("imult-single.toml", CUSP);
    let out = run(&["imult", single.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("exactly two"));
}

#[test]
fn theorem_asserts_every_applicable_predicate_on_the_heavy_line() {
    let config = write_input("theorem.toml", HEAVY_LINE);
    let out = run(&["theorem", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("boundary log canonical: no"), "unexpected output: {text}");
    assert!(text.contains("adjunction, first branch: pair multiplicity 2 > 1"));
    assert!(text.contains("transverse pair: not applicable"));
    assert!(text.contains("integer parameter n = 3 (admissible)"));
    assert!(text.contains("six-parameter tuple: all clauses hold"));
    assert!(!text.contains("FAILS"), "no asserted conclusion may fail: {text}");
}

#[test]
fn theorem_requires_the_two_branch_blocks() {
    let config = write_input("theorem-missing.toml", CUSP);
    let out = run(&["theorem", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("deltas"), "stderr: {}", stderr_of(&out));
}

#[test]
fn audit_certifies_the_whole_catalog() {
    let out = run(&["audit"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("54 of 54 systems passed"), "unexpected output: {text}");
    assert!(text.contains("all passed: true"));
}

#[test]
fn scenario_runs_by_name_and_rejects_unknown_names() {
    let out = run(&["scenario", "--scenario", "germ-lct-table"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("scenario: germ-lct-table"));
    assert!(text.contains("all passed: true"));

    let out = run(&["scenario", "--scenario", "nope"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("unknown scenario"));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let config = write_input("stable.toml", CUSP);
    let first = run(&["lct", config.to_str().unwrap(), "--json"]);
    let second = run(&["lct", config.to_str().unwrap(), "--json"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let first = run(&["fuzz", "--seed", "3", "--count", "25", "--json"]);
    let second = run(&["fuzz", "--seed", "3", "--count", "25", "--json"]);
    assert_eq!(first.status.code(), Some(0), "stderr: {}", stderr_of(&first));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn rationals_in_json_are_fraction_strings() {
    let config = write_input("fractions.toml", CUSP);
    let out = run(&["lct", config.to_str().unwrap(), "--json"]);
    let text = stdout_of(&out);
    assert!(text.contains("\"lct\": \"5/6\""), "unexpected JSON: {text}");
}

#[test]
fn check_verifies_every_report_kind() {
    let dir = std::env::temp_dir().join("germlct-cli-tests");
    let cusp = write_input("check-cusp.toml", CUSP);
    let pair = write_input(
        "check-pair.toml",
        "[curves]\nc = \"y^2 - x^3\"\nl = \"x\"\n\n[[divisor]]\ncurve = \"c\"\ncoefficient = \"1\"\n\n[[divisor]]\ncurve = \"l\"\ncoefficient = \"1\"\n",
    );
    let theorem = write_input("check-theorem.toml", HEAVY_LINE);
    let runs: Vec<Vec<&str>> = vec![
        vec!["lct", cusp.to_str().unwrap()],
        vec!["loglc", cusp.to_str().unwrap()],
        vec!["imult", pair.to_str().unwrap()],
        vec!["theorem", theorem.to_str().unwrap()],
        vec!["scenario", "--scenario", "line-conic-params"],
        vec!["fuzz", "--seed", "3", "--count", "25"],
    ];
    for (i, mut args) in runs.into_iter().enumerate() {
        let kind = args[0].to_string();
        args.push("--json");
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{kind} stderr: {}", stderr_of(&out));
        let path = dir.join(format!("check-{i}.json"));
        fs::write(&path, &out.stdout).expect("report file is writable");
        let verify = run(&["check", path.to_str().unwrap()]);
        assert_eq!(
            verify.status.code(),
            Some(0),
            "{kind} re-verification failed: {}",
            stderr_of(&verify)
        );
        assert!(stdout_of(&verify).contains(&format!("(kind: {kind})")));
    }
}

#[test]
fn check_rejects_tampered_reports() {
    let config = write_input("tamper.toml", CUSP);
    let out = run(&["lct", config.to_str().unwrap(), "--json"]);
    let tampered = stdout_of(&out).replace("\"5/6\"", "\"1/2\"");
    let path = write_input("tampered.json", &tampered);
    let verify = run(&["check", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stderr_of(&verify).contains("differs from a fresh recomputation"));
}

#[test]
fn check_rejects_malformed_documents() {
    let path = write_input("not-json.json", "{ this is not json");
    let verify = run(&["check", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(2));

    let path = write_input("no-kind.json", "{\"result\": 1}");
    let verify = run(&["check", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(3));
    assert!(stderr_of(&verify).contains("kind"));
}

#[test]
fn depth_cap_flag_reaches_the_oracle() {
    let config = write_input("depth.toml", CUSP);
    let out = run(&["lct", config.to_str().unwrap(), "--depth-cap", "2"]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr_of(&out));
    let out = run(&["lct", config.to_str().unwrap(), "--depth-cap", "3"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
}
