use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccobstruct")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_emits_report_json() {
    let out = run(&["analyze", "--space", "pn-complement", "--n", "11", "--d", "12", "--p", "3", "--with-model"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["space"], "X_{11,12}");
    let maslov = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "maslov_p3").unwrap();
    assert_eq!(maslov["verdict"], "Obstructed");
    assert_eq!(v["model"]["name"], "X_{11,12}");
}

#[test]
fn stabilized_analysis_is_unchanged() {
    let base = run(&["analyze", "--space", "sphere6-wedge", "--k", "23", "--format", "csv"]);
    let stable = run(&["analyze", "--space", "sphere6-wedge", "--k", "23", "--stabilize", "66", "--format", "csv"]);
    assert!(base.status.success());
    assert_eq!(stdout(&base), stdout(&stable));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.md");
    let out = run(&["search", "--n", "7..12", "--d", "3..9", "--format", "md", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("| n | d | gradable |"));
    assert_eq!(text.lines().count(), 2 + 6 * 7);
}

#[test]
fn kernel_check_lists_every_relation() {
    let out = run(&["kernel-check", "--max-k", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with("IN KERNEL")).count(), 12);
    assert!(text.contains("c1*c24 - c25: IN KERNEL"));
}

#[test]
fn usage_and_domain_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--space", "pn-complement", "--n", "1", "--d", "3"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--space", "pn-complement", "--n", "9"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--n", "9..7"]).status.code(), Some(1));
    assert_eq!(run(&["facts", "binom", "--n", "10", "--k", "3", "--p", "4"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn facts_tables() {
    let out = run(&["facts", "pi", "--group", "U/O", "--k", "1..8", "--format", "csv"]);
    let text = stdout(&out);
    let values: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values, ["Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0"]);

    let out = run(&["facts", "binom", "--n", "15", "--k", "5", "--p", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["exact"], "3003");
    assert_eq!(v["mod_p"], 3);
}

#[test]
fn sphere6_record() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["sphere6", "--k", "23"]))).unwrap();
    assert_eq!(v["c3_pairing"], "48");
    assert_eq!(v["maslov_sufficient"], true);
    assert_eq!(v["destabilized_rank"], 3);
}
