use std::process::{Command, Output};

fn asm3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asm3"))
        .args(args)
        .env_remove("ASM3_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn table_three_enumeration() {
    let out = asm3(&["table", "--n", "5", "--x", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,r,value\n5,1,90\n5,2,495\n5,3,855\n5,4,495\n5,5,90\n"
    );
}

#[test]
fn table_plain_counts() {
    let out = asm3(&["table", "--n", "4", "--x", "1"]);
    assert_eq!(stdout(&out), "n,r,value\n4,1,7\n4,2,14\n4,3,14\n4,4,7\n");
    let out = asm3(&["table", "--n", "1", "--x", "1"]);
    assert_eq!(stdout(&out), "n,r,value\n1,1,1\n");
}

#[test]
fn table_through_the_oracle() {
    let out = asm3(&["table", "--n", "3", "--x", "1/2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "n,r,value\n3,1,2\n3,2,5/2\n3,3,2\n");
    // x = 2 agrees between the product formula and the oracle route.
    let formula = stdout(&asm3(&["table", "--n", "6", "--x", "2"]));
    let oracle = stdout(&asm3(&["table", "--n", "6", "--x", "4/2"]));
    assert_eq!(formula, oracle);
}

#[test]
fn table_json_uses_strings() {
    let out = asm3(&["table", "--n", "4", "--x", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "table");
    assert_eq!(doc["params"]["x"], "3");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert_eq!(results[1]["value"], "36");
    assert_eq!(results[1]["r"], "2");
}

#[test]
fn output_is_deterministic() {
    let a = asm3(&["table", "--n", "2..7", "--x", "3"]);
    let b = asm3(&["table", "--n", "7,6,5,4,3,2", "--x", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_asm3"))
        .args(["table", "--n", "2..7", "--x", "3"])
        .env("ASM3_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, single.stdout);
}

#[test]
fn scan_small_masses() {
    let out = asm3(&["scan", "--n", "4", "--epsilon", "3/10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,epsilon,mass_exact,mass_decimal\n4,3/10,4/5,0.800000000000\n"
    );
    let out = asm3(&["scan", "--n", "3", "--epsilon", "0.4"]);
    assert_eq!(
        stdout(&out),
        "n,epsilon,mass_exact,mass_decimal\n3,2/5,5/9,0.555555555556\n"
    );
}

#[test]
fn scan_json() {
    let out = asm3(&["scan", "--n", "6,8", "--epsilon", "1/4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "scan");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results[0]["n"], "6");
    assert_eq!(results[1]["n"], "8");
}

#[test]
fn verify_suites() {
    let out = asm3(&["verify", "--suite", "tq-identities", "--max-m", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert!(text.contains("PASS Vfinal m=3"));

    let out = asm3(&["verify", "--suite", "oracle", "--max-n", "7"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS oracle-x3 n=7"));

    let out = asm3(&["verify", "--suite", "all", "--max-m", "0"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_json() {
    let out = asm3(&[
        "verify",
        "--suite",
        "closed-forms",
        "--max-m",
        "2",
        "--max-n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["params"]["suite"], "closed-forms");
    assert!(doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["passed"] == true));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["table", "--n", "0"],
        &["table", "--n", "5..2"],
        &["table", "--n", "15", "--x", "5"],
        &["table", "--n", "3", "--x", "0.1234567890123456789"],
        &["scan", "--n", "4", "--epsilon", "1/2"],
        &["scan", "--n", "1", "--epsilon", "1/4"],
        &["scan", "--n", "4", "--epsilon", "1/4", "--x", "4"],
        &["verify", "--suite", "oracle", "--max-n", "15"],
        &["verify", "--suite", "nope"],
    ] {
        assert_eq!(code(&asm3(args)), 2, "{args:?}");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_asm3"))
        .args(["table", "--n", "3"])
        .env("ASM3_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
