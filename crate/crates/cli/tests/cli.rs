use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rigidcurve::families::catalog_entry;
use rigidcurve::wire::{CurveFile, WitnessFile};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rigidcurve"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn rigidcurve")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn construct_to(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = run(&all);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn audit_json(path: &Path) -> Value {
    let o = run(&["audit", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn toe1_three_cusps() {
    let dir = TempDir::new().unwrap();
    let p = construct_to(&dir, "t.json", &["toe1", "--n", "2"]);
    let file = CurveFile::from_json(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(file.metadata.provenance.family, "toe1");
    let a = audit_json(&p);
    assert_eq!(a["descriptor"], "3 A2");
    assert_eq!(a["matches_file_descriptor"], true);
    assert_eq!(a["delta_total"], 3);
}

#[test]
fn toe1_n3_audit() {
    let dir = TempDir::new().unwrap();
    let p = construct_to(&dir, "t.json", &["toe1", "--n", "3"]);
    assert_eq!(audit_json(&p)["descriptor"], "A3 + 2 T(3,5)");
}

#[test]
fn add2_default_and_hyphen_parameter() {
    let o = run(&["construct", "add2", "--n", "2", "--a", "0"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["metadata"]["descriptor"]["rigidity_class"], 2);
    let o = run(&["construct", "add2", "--n", "2", "--a", "-3/2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn catalog_member_i16() {
    let o = run(&["construct", "I16"]);
    assert_eq!(code(&o), 0);
    let file = CurveFile::from_json(&stdout(&o)).unwrap();
    assert!(file.metadata.descriptor.is_some());
}

#[test]
fn rational_quartic_with_a6_has_flexes() {
    let dir = TempDir::new().unwrap();
    let p = construct_to(&dir, "nu2.json", &["I24"]);
    let a = audit_json(&p);
    assert_eq!(a["descriptor"], "A6");
    let flexes = a["flexes"].as_array().unwrap();
    assert!(!flexes.is_empty());
    assert!(!flexes[0]["flexes"].as_array().unwrap().is_empty());
}

#[test]
fn two_equal_lines_fail_certification() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("lines.json");
    let line = r#"{"component":{"implicit":[[1,0,0,"1"]]}}"#;
    let text = format!(r#"{{"format_version":1,"components":[{line},{line}],"metadata":{{"provenance":{{"family":"manual","params":{{}}}}}}}}"#);
    std::fs::write(&p, text).unwrap();
    let o = run(&["audit", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn report_separates_the_two_orbits() {
    let dir = TempDir::new().unwrap();
    let c0 = construct_to(&dir, "c0.json", &["II2", "--a", "0"]);
    let c1 = construct_to(&dir, "c1.json", &["II2", "--a", "1"]);
    let c2 = construct_to(&dir, "c2.json", &["II2", "--a", "2"]);
    let files = [c0.to_str().unwrap(), c1.to_str().unwrap(), c2.to_str().unwrap()];

    let o = run(&["report", files[0], files[1], "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["report"]["k_lower_bound"], 2);
    assert_eq!(v["report"]["pairs"][0]["status"], "certified-distinct");

    let w = dir.path().join("w.json");
    let entry = catalog_entry("II2").unwrap();
    std::fs::write(&w, WitnessFile::new(vec![entry.witnesses[0].clone()]).to_json()).unwrap();
    let o = run(&["report", files[0], files[1], files[2], "--witnesses", w.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["classes"], serde_json::json!([[0], [1, 2]]));
    assert_eq!(v["report"]["undecided"], 0);
}

#[test]
fn report_on_one_file() {
    let dir = TempDir::new().unwrap();
    let p = construct_to(&dir, "q.json", &["I3"]);
    let o = run(&["report", p.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["report"]["k_lower_bound"].as_u64().unwrap() >= 1);
}

#[test]
fn report_rejects_mixed_families() {
    let dir = TempDir::new().unwrap();
    let a = construct_to(&dir, "a.json", &["toe1", "--n", "2"]);
    let b = construct_to(&dir, "b.json", &["I24"]);
    let o = run(&["report", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
}

#[test]
fn plot_tricuspidal_quartic() {
    let dir = TempDir::new().unwrap();
    let p = construct_to(&dir, "q.json", &["toe1", "--n", "2"]);
    let svg = dir.path().join("q.svg");
    let o = run(&["plot", p.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let s = std::fs::read_to_string(svg).unwrap();
    assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(code(&run(&["construct", "nope"])), 3);
    assert_eq!(code(&run(&["construct", "toe1"])), 3);
    assert_eq!(code(&run(&["construct", "I3", "--n", "2"])), 3);
    assert_eq!(code(&run(&["construct", "add2", "--n", "2", "--a", "1/0"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);

    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, r#"{"format_version":9,"components":[]}"#).unwrap();
    assert_eq!(code(&run(&["audit", p.to_str().unwrap()])), 3);
    assert_eq!(code(&run(&["audit", dir.path().join("missing.json").to_str().unwrap()])), 3);
}

#[test]
fn sweep_writes_one_file_per_member() {
    let dir = TempDir::new().unwrap();
    let o = run(&["construct", "toe1", "--sweep", "2..4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[1]["descriptor"], "A3 + 2 T(3,5)");
    for k in 2..=4 {
        assert!(dir.path().join(format!("toe1-n{k}.json")).exists());
    }
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let a = stdout(&run(&["construct", "add3", "--n", "3", "--a", "1/3"]));
    let b = stdout(&run(&["construct", "add3", "--n", "3", "--a", "1/3"]));
    assert_eq!(a, b);
    assert_eq!(CurveFile::from_json(&a).unwrap().to_json(), a);
}

#[test]
fn rigit_orbit_counts() {
    let o = run(&["rigit", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orbit_count"], 2);
    let o = run(&["construct", "rigit", "--n", "5"]);
    assert_eq!(stdout(&o), stdout(&run(&["rigit", "--n", "5"])));
}

#[test]
fn catalog_certifies() {
    let o = run(&["catalog", "--certify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("all 26 entries certified"));
}
