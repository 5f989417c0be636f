//! End-to-end command checks: exit codes and JSON round-trips.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfq"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hopfq-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn verify_examples_exit_codes() {
    let out = bin()
        .args(["verify-examples", "--m", "4", "--t", "1/2"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("pass")).count(), 10);

    // m below 3 is a usage error
    let out = bin()
        .args(["verify-examples", "--m", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // bad t
    let out = bin()
        .args(["verify-examples", "--m", "4", "--t", "3/2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_examples_writes_json() {
    let path = tmp("verify.json");
    let out = bin()
        .args(["verify-examples", "--m", "3", "--t", "1/3"])
        .arg("--json")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["m"], 3);
    assert_eq!(doc["all_pass"], true);
    assert_eq!(doc["examples"].as_array().unwrap().len(), 10);
    std::fs::remove_file(&path).ok();
}

#[test]
fn classify_outputs_and_traces() {
    let out = bin().args(["classify", "--g", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Theorem 1.1a"));
    assert!(text.contains("example 3.1"));

    let path = tmp("trace.json");
    let out = bin()
        .args(["classify", "--g", "4"])
        .arg("--trace")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["g"], 4);
    assert_eq!(doc["outcomes"].as_array().unwrap().len(), 4);
    assert_eq!(doc["branches"].as_array().unwrap().len(), 46);
    std::fs::remove_file(&path).ok();

    let out = bin().args(["classify", "--g", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parallel_and_focal_roundtrip() {
    let cfg = tmp("ex35.json");
    std::fs::write(
        &cfg,
        r#"{"m": 4, "alpha": "5/2",
            "spectrum": [{"value": "1/2", "mult": {"a": 0, "b": 2}},
                         {"value": "2", "mult": {"a": 0, "b": 2}}]}"#,
    )
    .unwrap();

    let out = bin()
        .args(["parallel", "--t", "-1/3"])
        .arg("--config")
        .arg(&cfg)
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("74/35"));
    // the emitted JSON re-parses into the documented schema
    let json_start = text.find('{').unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(doc["alpha"], "74/35");
    assert_eq!(doc["spectrum"][0]["value"], "5/7");

    // flowing into the focal collapse is a mathematical failure: exit 1
    let out = bin()
        .args(["parallel", "--t", "1/2"])
        .arg("--config")
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().arg("focal").arg("--config").arg(&cfg).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("focal side +"));
    assert!(text.contains("austere: yes"));
    assert!(text.contains("focal side -: none"));
    std::fs::remove_file(&cfg).ok();
}

#[test]
fn cartan_eval_matches_paper_values() {
    // contradiction: exit 1 with rhs = 3
    let out = bin()
        .args([
            "cartan-eval",
            "--lambda",
            "2",
            "--mu",
            "1",
            "--scenario",
            "y-eq-jx-orthA",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rhs = 3"));
    assert!(text.contains("contradiction"));

    // consistent: exit 0
    let out = bin()
        .args([
            "cartan-eval",
            "--lambda",
            "-1",
            "--mu",
            "1",
            "--scenario",
            "ax-eq-x",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rhs = 0"));
}

#[test]
fn catalog_dump() {
    let out = bin().arg("catalog").output().unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["examples"].as_array().unwrap().len(), 10);
    assert_eq!(doc["examples"][0]["id"], "3.1");
    assert_eq!(doc["examples"][7]["excluded_alpha"], "1");
}
