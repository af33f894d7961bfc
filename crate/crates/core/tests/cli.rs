use std::process::Command;

use serde_json::Value;

fn audit(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_audit")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let text = if out.stdout.is_empty() { out.stderr } else { out.stdout };
    (code, serde_json::from_slice(&text).unwrap_or(Value::Null))
}

#[test]
fn count_subcommand() {
    let (code, v) = audit(&["count", "--q", "3", "--poly", "X0*X1 - X2*X3"]);
    assert_eq!(code, 0);
    assert_eq!(v["N"], 16);
    assert_eq!(v["bound"]["attains"], true);
}

#[test]
fn sections_subcommand() {
    let (code, v) = audit(&["sections", "--q", "4", "--surface", "hermitian"]);
    assert_eq!(code, 0);
    assert_eq!(v["census"]["nu1"], 45);
    assert_eq!(v["census"]["nu2"], 40);
    assert_eq!(v["vertex_bijection_ok"], true);
    let (code, v) = audit(&["sections", "--q", "2", "--surface", "X0^3 + X1^3 + X2^3 + X3^3"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn census_subcommand() {
    let (code, v) = audit(&["census", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["max_count"], 9);
    assert_eq!(v["orbit_equals_achievers"], true);
    let (code, _) = audit(&["census", "--q", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn normalform_subcommand() {
    let (code, v) = audit(&["normalform", "--q", "4", "--alt", "[t,0,1,0,1,(t+1)]"]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
    assert_eq!(v["rank"], 4);
    let (code, v) = audit(&["normalform", "--q", "3", "--alt", "[0,0,0,0,0,0]"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("zero"));
}

#[test]
fn run_subcommand_with_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let out = dir.path().join("report.json");
    std::fs::write(
        &cfg,
        r#"{"q_list":[4,5],"surfaces":["hermitian","hyperbolic"],"checks":["bounds","sections","lines"]}"#,
    )
    .unwrap();
    let (code, _) = audit(&["run", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let first = std::fs::read_to_string(&out).unwrap();
    let report: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(report["passed"], true);
    let statuses: Vec<&str> =
        report["surfaces"].as_array().unwrap().iter().map(|s| s["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["ok", "ok", "skipped", "ok"]);
    audit(&["run", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), first);
}

#[test]
fn failing_run_sets_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"q_list":[3],"surfaces":["X0*X1 + X2^2"]}"#).unwrap();
    let (code, v) = audit(&["run", "--config", cfg.to_str().unwrap()]);
    // a cone: not extremal but within the bound, so the run passes
    assert_eq!(code, 0, "{v}");
    std::fs::write(&cfg, r#"{"q_list":[3],"surfaces":["X0*X1"]}"#).unwrap();
    let (code, v) = audit(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["surfaces"][0]["status"], "error");
    std::fs::write(&cfg, r#"{"q_list":[6]}"#).unwrap();
    let (code, _) = audit(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 2);
}
