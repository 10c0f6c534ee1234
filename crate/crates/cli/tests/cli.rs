use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alperin"))
        .args(args)
        .env_remove("ALPERIN_CAPS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn awc_check_reports_pass() {
    let out = run(&["--json", "awc", "check", "--group", &data("groups/s4.json"), "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "alperin-report/1");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["counts"]["ibr"], 2);
    assert_eq!(v["result"]["counts"]["alp"], 2);
}

#[test]
fn text_output_by_default() {
    let out = run(&["awc", "check", "--group", "S3", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: pass"), "{text}");
}

#[test]
fn h2_of_quaternion_group() {
    let out = run(&["--json", "h2", "--group", &data("groups/q8.json"), "--modulus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let factors: Vec<u64> = serde_json::from_value(v["result"]["invariants"].clone()).unwrap();
    assert_eq!(factors, vec![2, 2]);
    assert_eq!(v["result"]["order"], 4);
}

#[test]
fn sl2_fixed_points() {
    let out = run(&["--json", "bnpair", "sl2", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "pass");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["awc", "frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["awc", "check", "--group", "no/such/file.json", "--prime", "2"]).status.code(), Some(2));
    assert_eq!(run(&["awc", "check", "--group", "S3", "--prime", "4"]).status.code(), Some(2));
}

#[test]
fn caps_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_alperin"))
        .args(["awc", "check", "--group", "S5", "--prime", "2"])
        .env("ALPERIN_CAPS", "group_order=24")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn battery_is_byte_identical_across_runs() {
    let cfg = data("battery/default.json");
    let a = run(&["--json", "battery", "--config", &cfg]);
    let b = run(&["--json", "battery", "--config", &cfg]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["result"]["failed"], 0);
}

#[test]
fn failing_battery_exits_1() {
    let dir = std::env::temp_dir().join(format!("alperin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("bad.json");
    std::fs::write(&cfg, r#"{"battery": [{"group": "S3"}, {"group": "missing.json"}]}"#).unwrap();
    let out = run(&["--json", "battery", "--config", cfg.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["result"]["failed"], 1);
}
