use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_atiyah-lab"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn summary(out: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().last().expect("summary line");
    let v: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(v["record"], "summary");
    v
}

#[test]
fn eval_two_points() {
    let f = scratch("two.txt", "# pair\n0 0 0\n0.3 -1.2 0.7\n");
    let out = run(&["eval", "--input", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = summary(&out);
    assert!((v["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(v["independent"], true);
    assert_eq!(v["points"][1]["a"], 0.3);
}

#[test]
fn eval_collinear_five() {
    let f = scratch("collinear.txt", "0 0 0\n1 0 0\n2 0 0\n3 0 0\n4 0 0\n");
    let out = run(&["eval", "--input", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!((summary(&out)["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn eval_repeated_point() {
    let f = scratch("repeat.txt", "# dup\n0 0 0\n1 2 3\n0 0 0\n");
    let out = run(&["eval", "--input", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("coincident points at lines 2, 4"), "{err}");
}

#[test]
fn eval_table1_orientation() {
    let f = scratch("case_a.txt", "-0.5 0 0\n0.7 0 0\n0 -1 0\n");
    let out = run(&["eval", "--input", f.to_str().unwrap(), "--orientation", "table1", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(summary(&out)["ratio"].as_f64().unwrap() >= 1.0);
    let missing_m = run(&["eval", "--input", f.to_str().unwrap(), "--orientation", "table1"]);
    assert_eq!(missing_m.status.code(), Some(1));
}

#[test]
fn invalid_arguments() {
    assert_eq!(run(&["eval"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["fuzz", "--samples", "ten"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--input", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn generate_then_eval_round_trip() {
    let f = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("generated.txt");
    let out = run(&["generate", "--kind", "random_box", "--n", "6", "--seed", "3", "--output", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let c = atiyah_lab::io::parse_configuration(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let direct = atiyah_lab::generators::random_config(6, 3, atiyah_lab::generators::GeneratorKind::RandomBox).unwrap();
    assert_eq!(c, direct);
    let out = run(&["eval", "--input", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identities_full_grid() {
    let out = run(&["identities", "--m", "1..20", "--grid", "0.01:4:0.01"]);
    assert_eq!(out.status.code(), Some(0));
    let v = summary(&out);
    assert!(v["max_relative_residual"].as_f64().unwrap() <= 1e-12);
    assert_eq!(v["evaluations"], 20 * 400);
}

#[test]
fn cases_all_pass() {
    let out = run(&["cases", "--m-max", "10", "--trials", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(summary(&out)["failures"], 0);
}

#[test]
fn fuzz_report_is_reproducible() {
    let f = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("fuzz.jsonl");
    let args = ["fuzz", "--n", "3..6", "--samples", "200", "--seed", "7", "--output", f.to_str().unwrap()];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let records = std::fs::read_to_string(&f).unwrap();
    assert_eq!(records.lines().count(), 201);
    let b = run(&args);
    let (mut va, mut vb) = (summary(&a), summary(&b));
    va.as_object_mut().unwrap().remove("wall_time_secs");
    vb.as_object_mut().unwrap().remove("wall_time_secs");
    assert_eq!(va, vb);
    assert!(va["min_ratio"].as_f64().unwrap() >= 1.0 - 1e-9);
}

#[test]
fn minimize_from_collinear_file() {
    let f = scratch("min_start.txt", "0 0 0\n1 0 0\n2 0 0\n3 0 0\n");
    let out = run(&["minimize", "--input", f.to_str().unwrap(), "--budget", "300", "--restarts", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = summary(&out);
    assert!(v["best"]["final_ratio"].as_f64().unwrap() >= 1.0 - 1e-6);
    assert!(v["reproducer"].is_null());
}

#[test]
fn probe_and_invariance() {
    let out = run(&["probe-b", "--samples", "2000", "--m", "6", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(summary(&out)["violation"].is_null());
    let out = run(&["invariance", "--n", "5", "--seed", "2", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(0));
}
