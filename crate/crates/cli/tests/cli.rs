use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerstab"))
        .args(args)
        .env_remove("EULERSTAB_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_text() {
    let o = run(&["gen", "--family", "A", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x2*x3 + x2*y3 + x3*y2 + 2*x3*y3 + y2*y3\n");
}

#[test]
fn gen_json() {
    let o = run(&["gen", "--family", "affC", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert_eq!(terms[0], serde_json::json!({"m": {"x1": 1, "x2": 1, "x3": 1, "y3": 1}, "c": "8"}));
}

#[test]
fn gen_both_methods() {
    let o = run(&["gen", "--family", "B", "--n", "2", "--q", "sym", "--method", "both"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("agree"));
    let g = run(&["gen", "--family", "G:3", "--n", "3", "--q", "multisym", "--method", "both", "--jobs", "1"]);
    assert!(g.status.success());
}

#[test]
fn gen_rejects_bad_input() {
    assert_eq!(run(&["gen", "--family", "D", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "A", "--n", "3", "--q", "sym"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "G:3", "--r", "4", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "affB", "--n", "3", "--method", "brute"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "Q", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn job_count_does_not_change_output() {
    let a = run(&["--jobs", "1", "gen", "--family", "B", "--n", "5", "--q", "multisym", "--method", "brute"]);
    let b = run(&["--jobs", "3", "gen", "--family", "B", "--n", "5", "--q", "multisym", "--method", "brute"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["gen", "--family", "G:3", "--n", "3", "--q", "sym", "--format", "json"];
    let fresh = run(&args);
    let first = run(&[&args[..], &["--cache-dir", d]].concat());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let cached = run(&[&args[..], &["--cache-dir", d]].concat());
    assert_eq!(fresh.stdout, first.stdout);
    assert_eq!(fresh.stdout, cached.stdout);
    let file = entries[0].as_ref().unwrap().path();
    assert_eq!(format!("{}\n", std::fs::read_to_string(&file).unwrap()).as_bytes(), &fresh.stdout[..]);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_eulerstab"))
        .args(["gen", "--family", "affA", "--n", "3"])
        .env("EULERSTAB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names, ["v1-affA-n3-r1-q1-rec.json"]);
}

#[test]
fn verify_stability_reports_witness() {
    let o = run(&["verify", "stability", "--format", "json"]);
    assert!(o.status.success());
    let v: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let d3 = v.iter().find(|c| c["check"] == "stability.d3star-halfplane").unwrap();
    assert_eq!(d3["status"], "witness");
    assert!(d3["witness"]["point"].is_array() || d3["witness"].is_object());
}

#[test]
fn verify_motzkin_flags_the_shift() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = run(&["verify", "motzkin", "--report", report.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    let flagged: Vec<_> = v.iter().filter(|c| c["check"] == "motzkin.census-as-stated").collect();
    assert!(!flagged.is_empty());
    assert!(flagged.iter().all(|c| c["severity"] == "informational" && c["status"] == "fail"));
    assert!(stdout(&o).contains("0 asserted failures"));
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
}

#[test]
fn export_table1() {
    let o = run(&["export", "table1"]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(&o.stdout[..]);
    assert_eq!(r.headers().unwrap(), vec!["sigma", "b_slot0", "b_tops", "d_slot0", "d_tops"]);
    assert_eq!(r.records().count(), 24);
}

#[test]
fn export_d3star_and_appendix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d3.json");
    let o = run(&["export", "d3star", "--format", "json", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["polynomial"]["terms"].as_array().unwrap().len(), 10);

    let o = run(&["export", "appendix", "--format", "json"]);
    let v: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 13);
    assert_eq!(v[12]["name"], "affC_3");

    let o = run(&["export", "appendix"]);
    assert_eq!(csv::Reader::from_reader(&o.stdout[..]).records().count(), 13);
}

#[test]
fn export_to_unwritable_path() {
    let o = run(&["export", "table1", "-o", "/nonexistent/dir/t.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/dir/t.csv"));
}
