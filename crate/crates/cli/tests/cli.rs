use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csst-kit")).args(args).env_remove("CSST_KIT_CAP").output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn code(s: u32, poly: u32, n: usize, rows: Value) -> Value {
    json!({ "field": { "s": s, "primitive_poly": poly }, "length": n, "generators": rows })
}

fn pair_file(dir: &Path, name: &str, c1: Value, c2: Value) -> String {
    write(dir, name, &json!({ "c1": c1, "c2": c2 })).to_str().unwrap().to_owned()
}

/// F_8 pair of length 4 that fails the trace criterion.
fn example_one(dir: &Path) -> String {
    let g2 = json!([[1, 2, 4, 7]]);
    pair_file(dir, "ex1.json", code(3, 0b1011, 4, json!([[1, 2, 4, 7], [1, 1, 1, 1]])), code(3, 0b1011, 4, g2))
}

/// F_4 pair of length 6 that passes it.
fn example_three(dir: &Path) -> String {
    let g2 = json!([[1, 1, 3, 3, 2, 2]]);
    pair_file(dir, "ex3.json", code(2, 0b111, 6, json!([[1, 1, 3, 3, 2, 2], [1, 1, 1, 1, 1, 1]])), code(2, 0b111, 6, g2))
}

#[test]
fn construct_rm_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = kit(&["construct", "rm", "--r", "1", "--m", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["length"], 8);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    // Re-reading a shuffled generator list yields the same canonical file.
    let mut rows = v["generators"].as_array().unwrap().clone();
    rows.reverse();
    let p = write(dir.path(), "rm.json", &json!({ "field": v["field"], "length": 8, "generators": rows }));
    let shown = stdout_json(&kit(&["show", p.to_str().unwrap()]));
    assert_eq!(shown["generators"], v["generators"]);
    assert_eq!(shown["dim"], 4);
    assert_eq!(shown["min_distance"], 4);
}

#[test]
fn construct_cyclic_worked_example() {
    let out = kit(&["--s", "2", "construct", "cyclic", "--n", "9", "--gen", "2,2,2,1,1,1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["length"], 9);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    let d = stdout_json(&kit(&["--s", "2", "construct", "cyclic", "--n", "9", "--gen", "2,2,2,1,1,1", "--describe"]));
    assert_eq!(d["generator_poly"], json!([2, 2, 2, 1, 1, 1]));
    let bad = kit(&["--s", "2", "construct", "cyclic", "--n", "9", "--gen", "1,1,1,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let ex1 = example_one(dir.path());
    let ex3 = example_three(dir.path());
    let out = kit(&["check", "csst-qary", "--pair", &ex1]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["is_csst"], false);
    assert_eq!(v["trace_c2_self_orthogonal"], false);
    assert_eq!(kit(&["check", "trace-necessary", "--pair", &ex1]).status.code(), Some(1));

    let out = kit(&["check", "csst-qary", "--pair", &ex3]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["is_csst"], true);
    assert_eq!(kit(&["check", "bounds", "--pair", &ex3]).status.code(), Some(0));

    // Swapped roles: not nested.
    let v = json!({ "c1": code(2, 7, 6, json!([[1, 1, 3, 3, 2, 2]])), "c2": code(2, 7, 6, json!([[1, 1, 3, 3, 2, 2], [1, 1, 1, 1, 1, 1]])) });
    let swapped = write(dir.path(), "swapped.json", &v);
    let out = kit(&["check", "css", "--pair", swapped.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["is_css_pair"], false);

    let junk = write(dir.path(), "junk.json", &json!({ "c1": 3 }));
    assert_eq!(kit(&["check", "css", "--pair", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(kit(&["check", "csst-binary", "--pair", &ex3]).status.code(), Some(2));
}

#[test]
fn binary_checks_agree() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("p.json");
    let p = p.to_str().unwrap();
    assert!(kit(&["--seed", "3", "--out", p, "random-pair", "--n", "8", "--k1", "4", "--k2", "2", "--csst"]).status.success());
    for via in ["star", "intersection", "definition"] {
        assert_eq!(kit(&["check", "csst-binary", "--via", via, "--pair", p]).status.code(), Some(0), "{via}");
    }
}

#[test]
fn simulate_reports() {
    let dir = TempDir::new().unwrap();
    let rm13 = dir.path().join("rm13.json");
    let rm03 = dir.path().join("rm03.json");
    kit(&["--out", rm13.to_str().unwrap(), "construct", "rm", "--r", "1", "--m", "3"]);
    kit(&["--out", rm03.to_str().unwrap(), "construct", "rm", "--r", "0", "--m", "3"]);
    let out = kit(&["simulate", "--c1", rm13.to_str().unwrap(), "--c2", rm03.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 2);
    assert!(recs.iter().all(|r| r["preserved"] == true));
    assert!(recs.iter().all(|r| r["logical_order"].is_u64()));

    let ex1 = example_one(dir.path());
    let v = stdout_json(&kit(&["simulate", "--pair", &ex1, "--lambda", "0,1"]));
    assert_eq!(v[0]["preserved"], true);
    assert_eq!(v[0]["logical_order"], 1);
    assert_eq!(v[1]["preserved"], false);
    assert_eq!(v[1]["logical_order"], Value::Null);

    assert_eq!(kit(&["--amp-cap", "16", "simulate", "--pair", &ex1]).status.code(), Some(2));
    assert_eq!(kit(&["simulate", "--pair", &ex1, "--lambda", "9"]).status.code(), Some(2));
}

#[test]
fn construct_double_repairs_pair() {
    let dir = TempDir::new().unwrap();
    let ex1 = example_one(dir.path());
    let out_path = dir.path().join("doubled.json");
    let out = kit(&["--out", out_path.to_str().unwrap(), "construct", "double", "--pair", &ex1]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["c1"]["length"], 8);
    assert_eq!(kit(&["check", "csst-qary", "--pair", out_path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn search_cyclic_is_deterministic() {
    let a = kit(&["--field-s", "2", "search-cyclic", "--n", "3,5"]);
    let b = kit(&["--field-s", "2", "search-cyclic", "--n", "3,5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(!text.is_empty());
    for line in text.lines() {
        let r: Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["conditions"]["cond1"], true);
        assert_eq!(r["conditions"]["cond2"], true);
        assert_eq!(r["conditions"]["csst_qary"], true);
    }
    assert_eq!(kit(&["search-cyclic", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn cyclic_conditions_check() {
    let dir = TempDir::new().unwrap();
    let f = json!({ "s": 2, "primitive_poly": 7 });
    let s1 = write(dir.path(), "s1.json", &json!({ "n": 3, "field": f, "generating_set": [0] }));
    let s2 = write(dir.path(), "s2.json", &json!({ "n": 3, "field": f, "generating_set": [] }));
    let out = kit(&["check", "cyclic-conditions", "--spec1", s1.to_str().unwrap(), "--spec2", s2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["csst_qary"], true);
    let out = kit(&["check", "cyclic-conditions", "--spec1", s2.to_str().unwrap(), "--spec2", s1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cap_flag_and_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_csst-kit"))
        .args(["--field-s", "2", "search-cyclic", "--n", "3"])
        .env("CSST_KIT_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(kit(&["--cap", "0", "show", "x.json"]).status.code(), Some(2));
}
