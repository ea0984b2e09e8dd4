use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn swdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/swdual-output.schema.json");
    let text = std::fs::read_to_string(path).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

/// Runs with `--format json`, checks the exit status and validates the body.
fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = swdual(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let validator = schema();
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    assert_eq!(value["schema_version"], 1);
    value
}

#[test]
fn enumerate_istar_three() {
    let v = json_of(&["enumerate", "--semigroup", "istar", "--k", "3"]);
    assert_eq!(v["count"], 25);
    assert_eq!(v["elements"].as_array().unwrap().len(), 25);
    let text = stdout(&swdual(&["enumerate", "--semigroup", "is", "--n", "3"]));
    assert_eq!(text.lines().count(), 34);
}

#[test]
fn enumerate_hat_includes_zero() {
    let v = json_of(&["enumerate", "--semigroup", "hat", "--k", "2"]);
    assert_eq!(v["count"], 13);
    assert_eq!(v["elements"][0], "0");
}

#[test]
fn multiply_outputs() {
    let v = json_of(&[
        "multiply",
        "--semigroup",
        "is",
        "--n",
        "5",
        "[2,-,3,5,-]",
        "[5,4,1,-,-]",
    ]);
    assert_eq!(v["product"], "[-,5,2,-,-]");

    let out = swdual(&[
        "multiply",
        "--semigroup",
        "composition",
        "--k",
        "2",
        "{1}|{2}|{1',2'}",
        "{1,2}|{1'}|{2'}",
    ]);
    assert_eq!(stdout(&out), "{1}|{2}|{1'}|{2'} garbage=1\n");
    let v = json_of(&[
        "multiply",
        "--semigroup",
        "composition",
        "--k",
        "2",
        "{1}|{2}|{1',2'}",
        "{1,2}|{1'}|{2'}",
    ]);
    assert_eq!(v["garbage_count"], 1);

    let v = json_of(&[
        "multiply",
        "--semigroup",
        "hat",
        "--k",
        "2",
        "{1,1'}",
        "{2,2'}",
    ]);
    assert_eq!(v["product"], "0");
}

#[test]
fn act_matrices() {
    let v = json_of(&[
        "act",
        "--space",
        "U",
        "--variant",
        "hat",
        "--n",
        "1",
        "--k",
        "1",
        "{1,1'}",
    ]);
    assert_eq!(v["matrix"]["entries"], serde_json::json!([[1, 1, "1"]]));
    let v = json_of(&["act", "--space", "V", "--n", "2", "--k", "2", "{1,2,1',2'}"]);
    assert_eq!(v["semigroup"], "composition");
    assert_eq!(v["matrix"]["entries"].as_array().unwrap().len(), 2);
    let v = json_of(&["act", "--space", "V", "--n", "2", "--k", "1", "[2,-]"]);
    assert_eq!(v["matrix"]["entries"], serde_json::json!([[1, 0, "1"]]));
    let text = stdout(&swdual(&[
        "act", "--space", "V", "--n", "2", "--k", "1", "[2,-]",
    ]));
    assert_eq!(text, "2 2 1\n1 0 1\n");
}

#[test]
fn act_rejects_bad_combinations() {
    let out = swdual(&[
        "act",
        "--space",
        "V",
        "--semigroup",
        "pistar",
        "--n",
        "2",
        "--k",
        "2",
        "{1,1'}",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("forbids"));
    let out = swdual(&[
        "act",
        "--space",
        "V",
        "--variant",
        "hat",
        "--n",
        "2",
        "--k",
        "2",
        "{1,1'}",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn commutant_dimensions() {
    let v = json_of(&[
        "commutant",
        "--n",
        "3",
        "--k",
        "2",
        "--space",
        "V",
        "--side",
        "left-is",
    ]);
    assert_eq!(v["dimension"], 3);
    let v = json_of(&[
        "commutant",
        "--n",
        "2",
        "--k",
        "2",
        "--space",
        "U",
        "--side",
        "right-pistar",
        "--basis",
    ]);
    assert_eq!(v["dimension"], 7);
    assert_eq!(v["basis"].as_array().unwrap().len(), 7);
    let out = swdual(&[
        "commutant",
        "--n",
        "2",
        "--k",
        "2",
        "--space",
        "U",
        "--side",
        "right-istar",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_grid_and_props() {
    let v = json_of(&["verify", "--all", "--max-n", "2", "--max-k", "2"]);
    assert_eq!(v["all_match"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
    assert_eq!(v["morphisms"].as_array().unwrap().len(), 8);
    let v = json_of(&["verify", "--props", "--n", "2", "--k", "2"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 0);
    assert_eq!(v["morphisms"][0]["map"], "phi");
}

#[test]
fn verify_is_deterministic() {
    let a = swdual(&["verify", "--thm1", "--thm2", "--format", "json"]);
    let b = swdual(&["verify", "--thm1", "--thm2", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_needs_a_selection() {
    let out = swdual(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guards_and_override() {
    let out = swdual(&["enumerate", "--semigroup", "is", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--unsafe-no-guards"), "{err}");
    let out = swdual(&[
        "enumerate",
        "--semigroup",
        "is",
        "--n",
        "7",
        "--unsafe-no-guards",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 130_922);
}

#[test]
fn parse_errors_report_position() {
    let out = swdual(&[
        "multiply",
        "--semigroup",
        "istar",
        "--k",
        "2",
        "{1,3'}",
        "{1,1'}|{2,2'}",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 3"));
    let out = swdual(&[
        "multiply",
        "--semigroup",
        "istar",
        "--k",
        "2",
        "{1,2}",
        "{1,1'}|{2,2'}",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("swdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = swdual(&[
        "enumerate",
        "--semigroup",
        "pistar",
        "--k",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 12);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn schema_rejects_malformed_output() {
    let validator = schema();
    let bad = serde_json::json!({ "schema_version": 2, "command": "verify" });
    assert!(!validator.is_valid(&bad));
    let bad = serde_json::json!({
        "schema_version": 1, "command": "enumerate", "semigroup": "istar",
        "size": 1, "count": 1, "elements": ["{1,1'}"], "extra": true
    });
    assert!(!validator.is_valid(&bad));
}
