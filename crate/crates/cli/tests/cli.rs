use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn rta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rta"))
        .args(args)
        .env_remove("RTA_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const SWAP: &str = r#"{"k":2,"n":2,"perm":[0,2,1,3]}"#;
const CNOT: &str = r#"{"k":2,"n":2,"perm":[0,1,3,2]}"#;

#[test]
fn sign_of_wire_swap_is_odd() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "swap.json", SWAP);
    let o = rta(&["sign", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "odd");
}

#[test]
fn compose_output_round_trips_as_gate_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "swap.json", SWAP);
    let g = write(&dir, "cnot.json", CNOT);
    let o = rta(&["compose", "--op", "ser", f.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let composed = stdout(&o);
    assert_eq!(composed.trim(), r#"{"k":2,"n":2,"perm":[0,3,1,2]}"#);

    let h = write(&dir, "h.json", composed.trim());
    let again = rta(&["compose", "--op", "par", h.to_str().unwrap(), f.to_str().unwrap()]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(parsed["n"], 4);
}

#[test]
fn order_of_two_bit_gates_at_arity_three() {
    let dir = TempDir::new().unwrap();
    let gates = write(
        &dir,
        "b2.json",
        r#"[{"k":2,"n":2,"perm":[1,0,2,3]},{"k":2,"n":2,"perm":[1,2,3,0]}]"#,
    );
    let o = rta(&["order", "--arity", "3", gates.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "1344");
    let o = rta(&["--format", "json", "order", "--arity", "3", gates.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], "1344");
}

#[test]
fn closure_and_classify_report_json() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "cnot.json", CNOT);
    let o = rta(&["--format", "json", "closure", "--mode", "plain", "--max-arity", "3", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let orders: Vec<&str> = v["slices"].as_array().unwrap().iter().map(|s| s["order"].as_str().unwrap()).collect();
    assert_eq!(orders, ["1", "6", "168"]);

    let o = rta(&["--format", "json", "classify", "--arity", "2", g.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], "6");
    assert_eq!(v["affine_member"], 2);
}

#[test]
fn maxclass_for_three_symbols() {
    let o = rta(&["--format", "json", "maxclass", "--alphabet", "3", "--arity", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"][0]["group"], "AGL_2(3)");
    assert_eq!(v["entries"][0]["status"], "certain");
}

#[test]
fn witness_word_is_json() {
    let o = rta(&["--format", "json", "witness3", "--alphabet", "3", "--triples", "1,2,1", "2,1,2", "3,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v["steps"].as_array().unwrap().is_empty());

    let o = rta(&["witness3", "--alphabet", "3", "--triples", "1,1,1", "1,1,1", "1,1,2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rta(&["witness3", "--alphabet", "3", "--triples", "0,1,1", "1,1,1", "1,1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_and_exits_zero() {
    let o = rta(&["verify", "g1344"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS g1344"));
    let o = rta(&["--format", "json", "verify", "even3", "even4", "affine-even"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"k":2,"n":2,"perm":[0,0,1,2]}"#);
    assert_eq!(rta(&["sign", bad.to_str().unwrap()]).status.code(), Some(2));
    let short = write(&dir, "short.json", r#"{"k":2,"n":2,"perm":[0,1]}"#);
    assert_eq!(rta(&["sign", short.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(rta(&["sign", "/nonexistent/gate.json"]).status.code(), Some(2));
    assert_eq!(rta(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(rta(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_three() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "cnot.json", CNOT);
    let o = rta(&["--degree-cap", "256", "order", "--arity", "9", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_rta"))
        .args(["order", "--arity", "9", g.to_str().unwrap()])
        .env("RTA_DEGREE_CAP", "300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(rta(&["--degree-cap", "10", "verify", "g1344"]).status.code(), Some(2));
}

#[test]
fn identical_invocations_give_identical_output() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "cnot.json", CNOT);
    let args = ["--format", "json", "--seed", "7", "closure", "--mode", "ancilla", "--max-arity", "3", g.to_str().unwrap()];
    assert_eq!(rta(&args).stdout, rta(&args).stdout);
}
