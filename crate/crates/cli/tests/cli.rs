use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn covalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covalg"))
        .args(args)
        .env_remove("COVALG_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_doc(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

#[test]
fn gdim_of_an_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.txt");
    fs::write(&path, "1 2\n").unwrap();
    let o = covalg(&["gdim", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "gdim 2, A: 1, B: 2\n");
}

#[test]
fn e8_has_six_basic_one_covers() {
    let o = covalg(&["covers", "@E8", "--k", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.starts_with("k=1 ")));
}

#[test]
fn analyze_e7_passes_every_cross_check() {
    let o = covalg(&["analyze", "@E7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("krull dimension = gdim: 4 = 4 OK"), "{out}");
    assert!(out.contains("(101)(110) = 0"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn structured_output_is_json_and_deterministic() {
    let a = covalg(&["analyze", "@C6", "--format", "structured"]);
    let b = covalg(&["analyze", "@C6", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["gdim"]["gdim"], 3);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["verdict"] != "fail"));
}

#[test]
fn poset_lists_hasse_lines() {
    let o = covalg(&["poset", "@E7"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for line in ["000 < 100", "100 < 101", "100 < 110", "101 < 111", "110 < 111"] {
        assert!(out.contains(line), "{out}");
    }
}

#[test]
fn project_reports_blocks_of_a_whiskered_edge() {
    let o = covalg(&["project", "@P4", "--format", "structured"]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["wsc"], true);
    assert_eq!(doc["projection"]["is_fixed_point"], true);
}

#[test]
fn json_graph_input_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    fs::write(&path, r#"{"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}"#).unwrap();
    let o = covalg(&["gdim", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("gdim 2, "));
}

#[test]
fn malformed_input_exits_one_with_error_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1 2\n2 x\n").unwrap();
    let o = covalg(&["covers", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let doc = error_doc(&o);
    assert_eq!(doc["error"]["kind"], "MalformedInput");
    assert_eq!(doc["error"]["exit_code"], 1);
}

#[test]
fn missing_file_and_bad_flags_exit_one() {
    assert_eq!(covalg(&["gdim", "/no/such/file"]).status.code(), Some(1));
    let o = covalg(&["gdim", "@K2", "--no-such-flag"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_doc(&o)["error"]["kind"], "Usage");
}

#[test]
fn budget_exhaustion_exits_two() {
    let o = covalg(&["covers", "@E8", "--k", "5", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_doc(&o)["error"]["kind"], "SearchBudgetExceeded");
}

#[test]
fn budget_defaults_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_covalg"))
        .args(["covers", "@E8", "--k", "5"])
        .env("COVALG_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_bipartite_poset_is_an_input_error() {
    let o = covalg(&["poset", "@C5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_doc(&o)["error"]["kind"], "NotBipartite");
}

#[test]
fn fixtures_are_written_and_reloadable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = covalg(&["fixtures", "--fixtures-dir", out.to_str().unwrap()]);
    assert!(o.status.success());
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 10);
    let e8 = out.join("E8.txt");
    let o = covalg(&["covers", e8.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 6);
}
