//! Binary-level checks: exit codes, report determinism, error paths.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bardel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bardel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("bardel-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn cohomology_of_rp2() {
    let out = bardel(&["cohomology", "--space", "rp2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let co = v["results"]["cohomology"].as_array().unwrap();
    assert_eq!(co[0], serde_json::json!({"rank": 1, "torsion": []}));
    assert_eq!(co[1], serde_json::json!({"rank": 0, "torsion": []}));
    assert_eq!(co[2], serde_json::json!({"rank": 0, "torsion": [2]}));
    // convention block present in every report
    assert!(v["conventions"]["coefficients"].is_string());
}

#[test]
fn em_homology_table() {
    let out = bardel(&[
        "em-homology",
        "--group",
        "Z/2",
        "--s",
        "1",
        "--max-degree",
        "5",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let h = v["results"]["homology"].as_array().unwrap();
    let expect = [
        (1, vec![]),
        (0, vec![2]),
        (0, vec![]),
        (0, vec![2]),
        (0, vec![]),
        (0, vec![2]),
    ];
    for (i, (rank, torsion)) in expect.iter().enumerate() {
        assert_eq!(h[i]["rank"], *rank);
        assert_eq!(h[i]["torsion"], serde_json::json!(torsion));
    }
}

#[test]
fn unknown_inputs_exit_one() {
    // exit 2 is reserved for verification failures, so even argument
    // errors exit 1
    let out = bardel(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));

    let out = bardel(&["cohomology", "--space", "moebius"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("moebius"), "error names the offender: {err}");

    let missing = bardel(&["cohomology", "--complex", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("file.json"));

    let corrupted = tmp_file("bad.json", "{ not json");
    let out = bardel(&["cohomology", "--complex", corrupted.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let out = bardel(&[
        "em-homology",
        "--group",
        "Z/1",
        "--s",
        "1",
        "--max-degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_exceeded_exits_one() {
    let out = bardel(&[
        "em-homology",
        "--group",
        "Z/2",
        "--s",
        "3",
        "--max-degree",
        "6",
        "--budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn weil_kostant_lift_round_trip() {
    let form = tmp_file(
        "fund.json",
        r#"{"degree": 2, "ring": "Q", "values": {"0,1,3": "1"}}"#,
    );
    let out = bardel(&[
        "weil-kostant",
        "--space",
        "torus",
        "--p",
        "2",
        "--form",
        form.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["results"]["round_trip_curvature_equal"],
        serde_json::json!(true)
    );

    // half the form is rejected with the period named
    let half = tmp_file(
        "half.json",
        r#"{"degree": 2, "ring": "Q", "values": {"0,1,3": "1/2"}}"#,
    );
    let out = bardel(&[
        "weil-kostant",
        "--space",
        "torus",
        "--p",
        "2",
        "--form",
        half.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("period"));
}

#[test]
fn tower_pipeline_from_lift() {
    let form = tmp_file(
        "fund2.json",
        r#"{"degree": 2, "ring": "Q", "values": {"0,1,3": "1"}}"#,
    );
    let lift_path = tmp_file("lift-report.json", "");
    let out = bardel(&[
        "weil-kostant",
        "--space",
        "torus",
        "--p",
        "2",
        "--form",
        form.to_str().unwrap(),
        "--out",
        lift_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&lift_path).unwrap()).unwrap();
    let cocycle = tmp_file("lift.json", &report["results"]["lift"].to_string());

    let out = bardel(&[
        "tower",
        "--space",
        "torus",
        "--mode",
        "check",
        "--from-cocycle",
        cocycle.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["valid"], serde_json::json!(true));

    let out = bardel(&[
        "tower",
        "--space",
        "torus",
        "--mode",
        "collapse",
        "--from-cocycle",
        cocycle.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["valid"], serde_json::json!(true));
}

#[test]
fn invalid_cocycle_exits_two() {
    // well-formed JSON, but the triple violates the cocycle conditions
    let bad = tmp_file(
        "invalid-cocycle.json",
        r#"{"p": 2, "q": 2,
            "c": {"degree": 2, "ring": "Z", "values": {"0,1,3": "1"}},
            "omega": {"degree": 2, "ring": "Q", "values": {}},
            "theta": {"degree": 1, "ring": "Q", "values": {}}}"#,
    );
    let out = bardel(&[
        "deligne",
        "--space",
        "torus",
        "--p",
        "2",
        "--q",
        "2",
        "--cocycle",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["cocycle"]["valid"], serde_json::json!(false));
}

#[test]
fn corpus_deterministic_and_green() {
    let first = bardel(&["corpus", "--seed", "7"]);
    assert!(first.status.success(), "corpus must pass");
    let second = bardel(&["corpus", "--seed", "7"]);
    assert_eq!(
        first.stdout, second.stdout,
        "byte-identical reports for a fixed seed"
    );
    let other = bardel(&["corpus", "--seed", "8"]);
    assert!(other.status.success());
}

#[test]
fn no_floating_point_in_reports() {
    let out = bardel(&["corpus", "--seed", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    fn scan(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => {
                assert!(
                    n.is_u64() || n.is_i64(),
                    "non-integer numeric {n} in report"
                );
            }
            serde_json::Value::Array(a) => a.iter().for_each(scan),
            serde_json::Value::Object(o) => o.values().for_each(scan),
            _ => {}
        }
    }
    scan(&v);
}
