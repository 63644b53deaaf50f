use std::process::{Command, Output};

use serde_json::Value;

fn dflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dflab"))
        .args(args)
        .env("RUST_LOG", "error")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = dflab(args);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

#[test]
fn gk_writes_a_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gk.json");
    let out = dflab(&["gk", "--prime", "97", "--tmax", "12", "--nmax", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["ring"]["field"], "F_97");
    let s = &doc["scenarios"][0];
    assert_eq!(s["name"], "gk");
    assert_eq!(s["computed"], serde_json::json!([1, 0, 1, 0, 1, 0, 0]));
    assert_eq!(s["millis"], 0);
}

#[test]
fn reports_are_byte_identical_and_sorted() {
    let a = dflab(&["check", "ez"]);
    let b = dflab(&["check", "ez"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let top: Vec<&str> = text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn predict_for_rank_three() {
    let (code, doc) = report(&["predict", "--d", "3"]);
    assert_eq!(code, 0);
    let s = &doc["scenarios"][0];
    assert_eq!(s["per_degree"]["d"], 3);
    // cr_3(F_2): printed list 3 + 9 + 3 + 6 = 21, composition factors 3·3 + 6 = 15
    assert_eq!(s["per_degree"]["printed tables"]["cr3"][2], 21);
    assert_eq!(s["per_degree"]["F tables"]["cr3"][2], 15);
}

#[test]
fn configuration_errors_exit_with_two() {
    assert_eq!(dflab(&["gk", "--seq", "x,1"]).status.code(), Some(2));
    assert_eq!(dflab(&["gk", "--seq", "x+y^2"]).status.code(), Some(2));
    assert_eq!(dflab(&["gk", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(dflab(&["gk", "--seq", "x"]).status.code(), Some(2));
    assert_eq!(dflab(&["gk", "--config", "/nonexistent/dflab.toml"]).status.code(), Some(2));
    assert_eq!(dflab(&["gk", "--prime", "5", "--rationals"]).status.code(), Some(2));
}

#[test]
fn budget_overrun_exits_with_three() {
    let (code, doc) = report(&["gk", "--max-rank", "100"]);
    assert_eq!(code, 3);
    assert_eq!(doc["scenarios"][0]["budget_exceeded"], true);
    assert_eq!(doc["pass"], false);
}

#[test]
fn mismatch_exits_with_one() {
    // in characteristic 3 the Schur comparison is not invertible
    let (code, doc) = report(&["check", "schur", "--prime", "3"]);
    assert_eq!(code, 1);
    assert_eq!(doc["pass"], false);
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dflab.toml");
    std::fs::write(&path, "prime = 101\nseq = [\"x^2\", \"y\"]\nformat = \"json\"\n").unwrap();
    let cfg = path.to_str().unwrap();
    let (code, doc) = report(&["tor-powers", "--config", cfg]);
    assert_eq!(code, 0);
    assert_eq!(doc["ring"]["field"], "F_101");
    assert_eq!(doc["ring"]["seq"], serde_json::json!(["x^2", "y"]));
    let (_, doc) = report(&["tor-powers", "--config", cfg, "--prime", "7"]);
    assert_eq!(doc["ring"]["field"], "F_7");
    std::fs::write(&path, "colour = 3\n").unwrap();
    assert_eq!(dflab(&["gk", "--config", cfg]).status.code(), Some(2));
}

#[test]
fn markdown_and_rationals() {
    let out = dflab(&["check", "cauchy", "--rationals", "--format", "markdown"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ring: Q[x,y]"));
    assert!(text.contains("| cauchy | yes |"));
}

#[test]
fn timing_flag_records_milliseconds_field() {
    let (code, doc) = report(&["check", "gamma", "--timing"]);
    assert_eq!(code, 0);
    assert!(doc["scenarios"][0]["millis"].is_u64());
}
