//! End-to-end CLI tests: golden outputs and error paths.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_goeritz"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../goeritz/fixtures")
        .join(name)
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("goeritz-cli-test-{}", name));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mu_of_trefoil_goeritz_matrix() {
    let path = write_temp("trefoil-goeritz.json", r#"{"matrix": [[2,-1],[-1,2]]}"#);
    let out = bin().arg("mu").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"mu\":\"-A^-5 - A^3 + A^7\"}\n");
}

#[test]
fn mu_of_empty_matrix() {
    let path = write_temp("empty-matrix.json", r#"{"matrix": []}"#);
    let out = bin().arg("mu").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"mu\":\"1\"}\n");
}

#[test]
fn jones_of_trefoil_fixture() {
    let out = bin().arg("jones").arg(fixture("trefoil.json")).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"jones\":\"-t^-4 + t^-3 + t^-1\"}\n");
}

#[test]
fn analyze_trefoil_reports_all_ok() {
    let out = bin().arg("analyze").arg(fixture("trefoil.json")).output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["genus"], 0);
    assert_eq!(report["writhe"], -3);
    assert_eq!(report["determinant_set"], serde_json::json!(["3", "3"]));
    for (_, verdict) in report["checks"].as_object().unwrap() {
        assert_eq!(verdict, "ok");
    }
    assert_eq!(report["ok"], true);
}

#[test]
fn analyze_output_is_byte_stable() {
    let a = bin().arg("analyze").arg(fixture("figure-eight.json")).output().unwrap();
    let b = bin().arg("analyze").arg(fixture("figure-eight.json")).output().unwrap();
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn bracket_rejects_positive_genus() {
    let out = bin().arg("bracket").arg(fixture("torus-medial.json")).output().unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(err["error"], "PositiveGenus");
}

#[test]
fn nu_rejects_noncolorable() {
    let out = bin().arg("nu").arg(fixture("torus-noncolorable.json")).output().unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(err["error"], "NotCheckerboardColorable");
}

#[test]
fn bracket_guard_rejects_large_diagrams() {
    let out = bin()
        .arg("bracket")
        .arg(fixture("trefoil.json"))
        .arg("--max-crossings")
        .arg("2")
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(err["error"], "MaxCrossingsExceeded");
}

#[test]
fn realize_then_medial_then_goeritz_round_trips() {
    let matrix = write_temp("realize-input.json", r#"{"matrix": [[2,-1],[-1,2]]}"#);
    let out = bin().arg("realize").arg(&matrix).output().unwrap();
    assert!(out.status.success());
    let graph_path = write_temp("realized.json", &stdout_of(&out));

    let out = bin().arg("goeritz").arg(&graph_path).output().unwrap();
    assert!(out.status.success());
    let matrix_back: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(matrix_back["matrix"], serde_json::json!([[2, -1], [-1, 2]]));

    let out = bin().arg("medial").arg(&graph_path).output().unwrap();
    assert!(out.status.success());
    let pd_path = write_temp("medial.json", &stdout_of(&out));
    let out = bin().arg("jones").arg(&pd_path).output().unwrap();
    assert!(out.status.success());
    // the realized diagram is a trefoil, one chirality or the other
    let jones: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let j = jones["jones"].as_str().unwrap();
    assert!(
        j == "-t^-4 + t^-3 + t^-1" || j == "t + t^3 - t^4",
        "unexpected jones {}",
        j
    );
}

#[test]
fn nu_on_genus_one_fixture() {
    let out = bin().arg("nu").arg(fixture("torus-medial.json")).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"nu\":[\"t^(-3/2)\",\"t^(3/2)\"]}\n");
}

#[test]
fn det_reports_the_crossed_pairing() {
    let out = bin().arg("det").arg(fixture("hopf.json")).output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["pairing_ok"], true);
    assert_eq!(report["determinant_set"], serde_json::json!(["2", "2"]));
}

#[test]
fn missing_file_is_a_structured_error() {
    let out = bin().arg("mu").arg("/nonexistent.json").output().unwrap();
    assert!(!out.status.success());
    let err: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(err["error"], "BadInput");
}
