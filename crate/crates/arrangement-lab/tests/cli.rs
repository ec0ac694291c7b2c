//! End-to-end tests of the `arrlab` binary: exit codes, determinism, the
//! JSON format flag, and the section pipeline.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn arrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

const GP4: &str = r#"{
  "dim": 3,
  "hyperplanes": [
    {"normal": ["1", "0", "0"], "offset": "0"},
    {"normal": ["0", "1", "0"], "offset": "0"},
    {"normal": ["0", "0", "1"], "offset": "0"},
    {"normal": ["1", "1", "1"], "offset": "1"}
  ]
}"#;

const THIRDS4: &str = r#"{"rank": 1, "weights": [["1/3"], ["1/3"], ["1/3"], ["1/3"]]}"#;
const QUARTERS4: &str = r#"{"rank": 1, "weights": [["1/4"], ["1/4"], ["1/4"], ["1/4"]]}"#;

#[test]
fn info_charpoly_betti_succeed() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);
    let a = a.to_str().unwrap();

    let out = arrlab(&["info", a]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("essential"), "info output: {text}");

    let out = arrlab(&["charpoly", a]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t^3"), "charpoly output: {text}");

    let out = arrlab(&["betti", a, "--method", "both"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("match"), "betti output: {text}");
}

#[test]
fn json_format_is_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);

    let out = arrlab(&["--format", "json", "charpoly", a.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["coefficients"].as_array().map(|c| c.len()), Some(4));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);
    let a = a.to_str().unwrap();

    for args in [
        vec!["poset", a],
        vec!["dense-edges", a],
        vec!["--format", "json", "oracle-check", a],
        vec!["--seed", "5", "section", a],
    ] {
        let first = arrlab(&args);
        let second = arrlab(&args);
        assert!(first.status.success(), "{args:?} failed");
        assert_eq!(first.stdout, second.stdout, "nondeterministic: {args:?}");
        assert_eq!(first.stderr, second.stderr, "nondeterministic: {args:?}");
    }
}

#[test]
fn section_pipeline_feeds_back_into_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);
    let section = dir.path().join("section.json");

    let out = arrlab(&[
        "section",
        a.to_str().unwrap(),
        "--output",
        section.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = arrlab(&["charpoly", section.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // Section of t^3 - 4t^2 + 6t - 4 drops the constant term.
    assert!(text.contains("t^2"), "section charpoly: {text}");
    assert!(!text.contains("t^3"), "section charpoly: {text}");
}

#[test]
fn homology_commands_respect_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);
    let good = write(dir.path(), "thirds.json", THIRDS4);
    let bad = write(dir.path(), "quarters.json", QUARTERS4);
    let (a, good, bad) = (a.to_str().unwrap(), good.to_str().unwrap(), bad.to_str().unwrap());

    let out = arrlab(&["homology", a, "--local-system", good]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("H_3"));

    let out = arrlab(&["certify-hurewicz", a, "--local-system", good]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("4 = 1 + 3"));

    // Resonant weights: domain error, exit 2.
    let out = arrlab(&["homology", a, "--local-system", bad]);
    assert_eq!(out.status.code(), Some(2));

    let out = arrlab(&["check-nonresonant", a, "--local-system", bad]);
    assert_eq!(out.status.code(), Some(2));
    // The verdict is still printed before the nonzero exit.
    assert!(String::from_utf8(out.stdout).unwrap().contains("resonant"));

    let out = arrlab(&["check-nonresonant", a, "--local-system", good]);
    assert!(out.status.success());
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"dim\": 2");

    let out = arrlab(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let missing = dir.path().join("nope.json");
    let out = arrlab(&["info", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn domain_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let nonessential = write(
        dir.path(),
        "flat.json",
        r#"{"dim": 2, "hyperplanes": [{"normal": ["1", "0"], "offset": "0"}]}"#,
    );
    let out = arrlab(&["euler-positivity", nonessential.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let a = write(dir.path(), "gp4.json", GP4);
    let out = arrlab(&["homotopy", a.to_str().unwrap(), "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_check_passes_on_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "gp4.json", GP4);
    let out = arrlab(&["oracle-check", a.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pass"), "oracle output: {text}");
    assert!(!text.contains("FAIL"), "oracle output: {text}");
}
