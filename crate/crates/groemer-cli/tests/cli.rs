//! End-to-end tests of the `groemer` binary: output contracts and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn groemer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groemer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = groemer(args);
    assert!(
        out.status.success(),
        "`groemer {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    groemer(args).status.code().expect("no signal")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("groemer-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn decompose_text_and_json() {
    assert_eq!(stdout(&["decompose", "1541551"]), "a=717 b=2 c=0 p0=4299\n");
    assert_eq!(stdout(&["decompose", "1"]), "a=1 b=0 c=0 p0=0\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["decompose", "121", "--json"])).unwrap();
    assert_eq!(v["n"], 121);
    assert_eq!(v["a"], 6);
    assert_eq!(v["b"], 5);
    assert_eq!(v["c"], 0);
    assert_eq!(v["p0"], 36);
}

#[test]
fn invalid_n_is_a_usage_error() {
    assert_eq!(exit_code(&["decompose", "0"]), 2);
    assert_eq!(exit_code(&["check", "0"]), 2);
    assert_eq!(exit_code(&["decompose", "-3"]), 2);
    assert_eq!(exit_code(&["enumerate", "--max", "10", "--criterion", "x"]), 2);
}

#[test]
fn check_counterexample_json_shape() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["check", "1541551", "--oracle", "--json"])).unwrap();
    assert_eq!(v["wegner_conjecture"]["exceptional"], true);
    assert_eq!(v["wegner_conjecture"]["m"], 2);
    assert_eq!(v["wegner_conjecture"]["branch"], "b2");
    assert_eq!(v["boeroeczky_ruzsa"]["exceptional"], false);
    assert_eq!(v["boeroeczky_ruzsa"]["k"], serde_json::Value::Null);
    assert_eq!(v["boeroeczky_ruzsa"]["discriminant"], 8595);
    assert_eq!(v["corrected"]["exceptional"], false);
    assert_eq!(v["oracle"]["exceptional"], false);
    let solutions = v["oracle"]["solutions"].as_array().unwrap();
    assert!(solutions.contains(&serde_json::json!([678, 753, 702, 717, 714, 741])));
}

#[test]
fn check_smallest_exceptional() {
    let text = stdout(&["check", "121", "--oracle"]);
    assert!(text.contains("boeroeczky_ruzsa: exceptional k=3 l=1 discriminant=72"));
    assert!(text.contains("corrected: exceptional k=3 l=1"));
    assert!(text.contains("oracle: exceptional solutions=0"));
}

#[test]
fn check_regular_number_has_no_positive_criterion() {
    let text = stdout(&["check", "7"]);
    assert_eq!(text.matches("not exceptional").count(), 3);
}

#[test]
fn enumerate_text_contract() {
    assert_eq!(stdout(&["enumerate", "--max", "200", "--criterion", "br"]), "121\n163\n");
    assert_eq!(stdout(&["enumerate", "--max", "100", "--criterion", "oracle"]), "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "enumerate", "--max", "200", "--criterion", "br", "--json",
    ]))
    .unwrap();
    assert_eq!(v["exceptional"], serde_json::json!([121, 163]));
    assert_eq!(v["count"], 2);
}

#[test]
fn enumerate_is_deterministic_across_jobs() {
    let reference = stdout(&["enumerate", "--max", "3000", "--criterion", "br", "--jobs", "1"]);
    for jobs in ["2", "3", "8"] {
        let other = stdout(&[
            "enumerate", "--max", "3000", "--criterion", "br", "--jobs", jobs,
        ]);
        assert_eq!(other, reference, "jobs = {jobs}");
    }
}

#[test]
fn cross_validate_clean_low_range() {
    let text = stdout(&["cross-validate", "--max", "121"]);
    assert!(text.contains("conjecture_only: 0"));
    assert!(text.contains("conjecture_missed: 0"));
    assert!(text.contains("corrected_vs_br_mismatches: 0"));
    assert!(text.contains("discrepancies: 0"));
}

#[test]
fn counterexample_passes_and_prints_the_pins() {
    let out = groemer(&["counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n=1541551"));
    assert!(text.contains("a=717 b=2 c=0 p0=4299"));
    assert!(text.contains("side window: [358, 1434]"));
    assert!(text.contains("discriminant=8595"));
    assert!(text.contains("702,717,714,741"));
    assert!(!text.contains("FAIL"));

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["counterexample", "--json"])).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["window"], serde_json::json!([358, 1434]));
    assert_eq!(v["witness"], serde_json::json!([702, 717, 714, 741, 678, 753]));
}

#[test]
fn render_csv_to_stdout_and_file() {
    let text = stdout(&["render", "7", "--format", "csv"]);
    assert!(text.starts_with("u,v\n"));
    assert_eq!(text.lines().count(), 8);

    let path = temp_path("seven.csv");
    let msg = stdout(&[
        "render", "7", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(msg, "points=7 boundary=6\n");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, text);
    std::fs::remove_file(&path).ok();
}

#[test]
fn render_rejects_exceptional_without_seq() {
    let out = groemer(&["render", "121", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceptional"));
}

#[test]
fn render_explicit_sequence_svg() {
    let svg = stdout(&["render", "--seq", "2,2,2,2", "--format", "svg"]);
    assert_eq!(svg.matches("<circle").count(), 7);
    assert_eq!(svg.matches("class=\"boundary\"").count(), 6);
    assert_eq!(svg.matches("class=\"interior\"").count(), 1);
    // Wrong arity is a usage error.
    assert_eq!(exit_code(&["render", "--seq", "2,2,2", "--format", "svg"]), 2);
    // Non-closing sequences are a domain error.
    assert_eq!(exit_code(&["render", "--seq", "1,1,5,5", "--format", "svg"]), 1);
}
