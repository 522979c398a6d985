//! End-to-end tests of the `ehrhart` binary: command output, exit codes,
//! document round trips, and output determinism.

use std::path::Path;
use std::process::{Command, Output};

use ehrhart_cli::document::PolytopeDocument;
use ehrhart_core::families;
use ehrhart_core::polytope::Polytope;

fn ehrhart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_examples() {
    let out = ehrhart(&["count", "--family", "cube", "3", "-t", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "27");

    let out = ehrhart(&["count", "--family", "reeve", "13", "-t", "1"]);
    assert_eq!(stdout_of(&out).trim(), "4");

    let out = ehrhart(&["count", "--family", "permutohedron", "3", "-t", "1"]);
    assert_eq!(stdout_of(&out).trim(), "38");
}

#[test]
fn ehrhart_command_output() {
    let out = ehrhart(&["ehrhart", "--family", "reeve", "13"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "1, -1/6, 1, 13/6");

    let out = ehrhart(&["ehrhart", "--family", "cross", "3", "--hstar"]);
    let text = stdout_of(&out);
    assert!(text.contains("h*: 1,3,3,1"), "got: {}", text);

    let out = ehrhart(&["ehrhart", "--family", "cube", "2", "--analyze"]);
    let text = stdout_of(&out);
    assert!(text.lines().count() >= 3);
    assert!(text.contains("source,dimension"), "got: {}", text);
}

#[test]
fn lr_examples() {
    let out = ehrhart(&[
        "lr", "--lambda", "3,2", "--mu", "2,1", "--nu", "4,3,1",
    ]);
    assert_eq!(stdout_of(&out).trim(), "2");

    let out = ehrhart(&[
        "lr", "--lambda", "3,2", "--mu", "2,1", "--nu", "4,3,1", "--stretch", "3",
    ]);
    assert_eq!(stdout_of(&out).trim(), "2\n3\n4");

    let out = ehrhart(&[
        "lr", "--lambda", "3,2", "--mu", "2,1", "--nu", "4,3,1", "--fit",
    ]);
    assert_eq!(stdout_of(&out).trim(), "fit: 1, 1");

    // weight mismatch prints zero, a legal answer
    let out = ehrhart(&["lr", "--lambda", "2", "--mu", "1", "--nu", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "0");

    // malformed partitions exit nonzero
    let out = ehrhart(&["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn document_round_trip_matches_family() {
    // a document written from the constructor yields bit-identical output
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reeve13.json");
    let (v, _) = families::reeve(13);
    PolytopeDocument::from_polytope(&Polytope::V(v))
        .save(&path)
        .unwrap();

    let from_file = ehrhart(&["ehrhart", "--file", path.to_str().unwrap()]);
    let from_family = ehrhart(&["ehrhart", "--family", "reeve", "13"]);
    assert!(from_file.status.success());
    assert_eq!(stdout_of(&from_file), stdout_of(&from_family));

    // counts agree too
    let from_file = ehrhart(&["count", "--file", path.to_str().unwrap(), "-t", "2"]);
    let from_family = ehrhart(&["count", "--family", "reeve", "13", "-t", "2"]);
    assert_eq!(stdout_of(&from_file), stdout_of(&from_family));
}

#[test]
fn mink1_document_quadratic_coefficient() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex_mink1.json");
    let (p, q, _) = families::mink1();
    let sum = p.minkowski_sum(&q).unwrap();
    PolytopeDocument::from_polytope(&Polytope::V(sum))
        .save(&path)
        .unwrap();
    let out = ehrhart(&["ehrhart", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "1, 17/6, -1/3, 7/6, 10/3");
}

#[test]
fn verify_exit_codes_and_determinism() {
    let args = ["verify", "--family", "zonotope", "--trials", "5", "--seed", "7"];
    let first = ehrhart(&args);
    let second = ehrhart(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "seeded runs must be byte-identical");

    // unknown family is a usage error
    let out = ehrhart(&["verify", "--family", "unknown-family"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_suites() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ce.csv");
    let out = ehrhart(&[
        "report", "--suite", "counterexamples", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# ehrhart report v1");
    assert!(lines[1].starts_with("source,dimension,degree,coefficients"));
    // five rows, each a non-Ehrhart-positive example
    let rows: Vec<&str> = lines[2..].to_vec();
    assert_eq!(rows.len(), 5);
    for name in ["reeve-13", "stanley-order-20", "smooth-reflexive-9", "mink-1", "mink-2"] {
        let row = rows
            .iter()
            .find(|r| r.starts_with(&format!("{},", name)))
            .unwrap_or_else(|| panic!("missing row {}", name));
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[5], "false", "{} must not be Ehrhart positive", name);
    }

    // byte-stable across runs
    let path2 = dir.path().join("ce2.csv");
    ehrhart(&["report", "--suite", "counterexamples", "--out", path2.to_str().unwrap()]);
    assert_eq!(text, std::fs::read_to_string(&path2).unwrap());

    // empty suite name is a usage error
    let out = ehrhart(&["report", "--suite", "", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"kind\":\"V\"}").unwrap();
    let out = ehrhart(&["count", "--file", path.to_str().unwrap(), "-t", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = ehrhart(&["count", "--family", "no-such-family", "-t", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let missing = Path::new("/nonexistent/poly.json");
    let out = ehrhart(&["count", "--file", missing.to_str().unwrap(), "-t", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // non-integral vertices are rejected by the ehrhart command
    let path = dir.path().join("half.json");
    std::fs::write(
        &path,
        r#"{"kind":"V","ambient_dim":1,"points":[["0"],["1/2"]]}"#,
    )
    .unwrap();
    let out = ehrhart(&["ehrhart", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn full_report_contains_positive_families() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("full.csv");
    let out = ehrhart(&["report", "--suite", "full", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    for name in ["cube-3", "cross-3", "permutohedron-3", "cry-3"] {
        let row = text
            .lines()
            .find(|r| r.starts_with(&format!("{},", name)))
            .unwrap_or_else(|| panic!("missing row {}", name));
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells[5], "true", "{} should be Ehrhart positive", name);
    }
}
