use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_blockalg");
const SPECS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../specs");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_json_has_the_report_schema() {
    let out = run(&["verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 4);
    for k in ["version", "p", "checks", "overall"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["p"], 3);
    for c in v["checks"].as_array().unwrap() {
        let obj = c.as_object().unwrap();
        let mut fields: Vec<&str> = obj.keys().map(String::as_str).collect();
        fields.sort();
        assert_eq!(fields, ["actual", "claim", "expected", "field_of_verification", "id", "status"]);
        assert!(["pass", "fail", "skipped"].contains(&obj["status"].as_str().unwrap()));
    }
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let a = run(&["verify", "--json"]);
    let b = run(&["verify", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let t = run(&["verify", "--text"]);
    assert_eq!(t.status.code(), Some(0));
    assert!(stdout(&t).contains("overall pass"));
}

#[test]
fn verify_at_p5_skips() {
    let out = run(&["verify", "--json", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let skipped = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "skipped").count();
    assert_eq!(skipped, 9);
}

#[test]
fn corrupted_relation_exits_1_with_a_report() {
    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(SPECS).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let quiver = dir.path().join("algebra_A.quiver");
    let text = fs::read_to_string(&quiver).unwrap().replace("relation delta.gamma\n", "");
    fs::write(&quiver, text).unwrap();
    let out = run(&["verify", "--json", "--specs", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["overall"], "fail");
    let s1_fails = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("S1.") && c["status"] == "fail")
        .count();
    assert!(s1_fails > 0);
}

#[test]
fn quiver_build_info() {
    let out = run(&["quiver", "build", &format!("{SPECS}/algebra_A.quiver"), "--info"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "dim 9, center 6, radical layers 2,4,2,1");
    let plain = stdout(&run(&["quiver", "build", &format!("{SPECS}/algebra_A.quiver")]));
    assert!(plain.starts_with("dim 9\n"));
    assert_eq!(plain.lines().count(), 10);
}

#[test]
fn comm_build_info() {
    let out = run(&["comm", "build", &format!("{SPECS}/stable_centre_A.comm"), "--info"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "dim 5, center 5, radical layers 1,2,1,1");
}

#[test]
fn orbits() {
    for (g, n) in [("D8", "3"), ("C2free", "5"), ("C2fix", "6"), ("V4", "4"), ("SD16", "2")] {
        let out = run(&["orbits", "--group", g]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).trim(), n, "{g}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["orbits", "--group", "A5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--p", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--json", "--text"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn missing_input_exits_1() {
    let out = run(&["quiver", "build", "/nonexistent/file.quiver"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
