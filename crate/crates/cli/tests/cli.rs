use std::process::{Command, Output};

use serde_json::Value;

fn qcox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcox")).args(args).env_remove("QCOX_JOBS").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = qcox(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("one JSON object")
}

#[test]
fn len_of_a_colored_diagonal() {
    let v = json(&["len", "G(3,1,3):[1 2 3;1,1,1]"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["refl_length"], 3);
    assert_eq!(v["codim"], 3);
    assert_eq!(v["full_length"], 6);
}

#[test]
fn fred_of_a_three_cycle() {
    let v = json(&["fred", "G(1,1,3):[2 3 1;0,0,0]"]);
    assert_eq!(v["count"], "3");
    assert_eq!(v["formula"], "3");
    assert_eq!(v["match"], true);
}

#[test]
fn element_as_json() {
    let text = json(&["len", "G(2,1,2):[2 1;0,1]"]);
    let from_json = json(&["len", r#"{"m":2,"p":1,"n":2,"perm":[2,1],"colors":[0,1]}"#]);
    assert_eq!(text, from_json);
}

#[test]
fn rgs_routes_agree() {
    for route in ["graph", "brute", "both"] {
        let v = json(&["rgs", "G(3,3,3):[1 2 3;0,0,0]", "--route", route]);
        assert_eq!(v["match"], true, "{route}");
        assert_eq!(v["rgs_count"], v["formula"]);
    }
    let v = json(&["rgs", "G(2,1,2):[1 2;1,1]"]);
    assert_eq!(v["is_pqc"], false);
    assert_eq!(v["rgs_count"], "0");
}

#[test]
fn output_independent_of_jobs() {
    let args = |jobs: &'static str| ["rgs", "G(2,2,4):[2 1 3 4;0,0,0,0]", "--list", "--jobs", jobs];
    assert_eq!(qcox(&args("1")).stdout, qcox(&args("4")).stdout);
}

#[test]
fn formats() {
    let csv = qcox(&["hurwitz-number", "3,2", "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap(), "hurwitz_number,partition\n1296,\"[3,2]\"\n");
    let text = qcox(&["hurwitz-number", "2,1", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("hurwitz_number: 8"));
}

#[test]
fn hurwitz_orbit_emits_tuples() {
    let out = qcox(&["hurwitz-orbit", "G(1,1,4):[2 3 4 1;0,0,0,0]", "--emit"]);
    assert!(out.status.success());
    let lines: Vec<Value> = out.stdout.split(|&b| b == b'\n').filter(|l| !l.is_empty()).map(|l| serde_json::from_slice(l).unwrap()).collect();
    assert_eq!(lines.len(), 17);
    let summary = lines.last().unwrap();
    assert_eq!(summary["orbit_size"], "16");
    assert_eq!(summary["transitive"], true);
}

#[test]
fn weyl_checks() {
    assert_eq!(json(&["weyl", "--type", "D4", "--check", "abc"])["count"], "162");
    assert_eq!(json(&["weyl", "--type", "A3", "--check", "gendet"])["det"], 4);
    let v = json(&["weyl", "--type", "B2", "--check", "pdet", "--element", "G(2,1,2):[1 2;1,1]"]);
    assert_eq!(v["pdet"], 4);
    assert_eq!(v["match"], true);
    assert_eq!(json(&["weyl", "--type", "B3", "--check", "pdet"])["mismatches"], "0");
}

#[test]
fn pqc_witnesses() {
    let v = json(&["pqc", "G(3,1,2):[2 1;1,0]", "--all"]);
    assert_eq!(v["is_qc"], true);
    assert_eq!(v["agree"], true);
    assert_eq!(v["witnesses"]["full_length"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(qcox(&["len", "G(3,1,3):[1 2 3;1,1"]).status.code(), Some(64));
    assert_eq!(qcox(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(qcox(&["len", "x", "--format", "yaml"]).status.code(), Some(64));
    assert_eq!(qcox(&["len", "G(3,3,2):[1 2;1,1]"]).status.code(), Some(1));
    assert_eq!(qcox(&["fred", "G(1,1,6):[2 3 4 5 6 1;0,0,0,0,0,0]", "--depth-cap", "3"]).status.code(), Some(2));
    assert_eq!(qcox(&["hurwitz-orbit", "G(1,1,5):[2 3 4 5 1;0,0,0,0,0]", "--orbit-cap", "10"]).status.code(), Some(2));
    assert_eq!(qcox(&["--help"]).status.code(), Some(0));
    assert_eq!(qcox(&["--version"]).status.code(), Some(0));
}

#[test]
fn verify_subset() {
    let out = qcox(&["verify", "--suite", "core", "--criterion", "1", "--criterion", "12", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("[PASS]")).count(), 2);
    assert_eq!(qcox(&["verify", "--criterion", "99"]).status.code(), Some(64));
}
