use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_str().unwrap().to_string()
}

fn silting(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_silting")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn info_reports_weak_symmetry() {
    let o = silting(&["info", "--algebra", &data("lambda4.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dimension 32"));
    assert!(s.contains("weakly symmetric true"));
    assert!(s.contains("symmetric false"));
}

#[test]
fn check_distinguishes_silting_from_tilting() {
    let (alg, cx) = (data("lambda4.alg"), data("t_lambda4.cpx"));
    let o = silting(&["check", "--algebra", &alg, "--complex", &cx, "--certificate", "base-change"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("silting, not tilting"));
    let o = silting(&["check", "--algebra", &alg, "--complex", &cx, "--tilting"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("nonzero Hom at shift -2, dim 16"));
}

#[test]
fn twisted_regular_complex_is_tilting() {
    let o = silting(&["check", "--algebra", &data("a4.alg"), "--complex", &data("t4.cpx"), "--tilting"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_output_parses() {
    let o = silting(&["--json", "check", "--algebra", &data("lambda4.alg"), "--complex", &data("printed4_1.cpx")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["presilting"], true);
}

#[test]
fn mutate_rejects_bad_index() {
    let o = silting(&["mutate", "--algebra", &data("lambda4.alg"), "--complex", &data("t_lambda4.cpx"), "--at", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mutation_output_is_a_complex_file() {
    let o = silting(&["mutate", "--algebra", &data("a4.alg"), "--complex", &data("t4.cpx"), "--at", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().starts_with("degree "));
}

#[test]
fn bad_files_exit_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "field 101\nvertices 2\narrow a: 1 -> 3\n").unwrap();
    let o = silting(&["info", "--algebra", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:"));
}

#[test]
fn enumerate_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a2.dot");
    let o = silting(&[
        "enumerate",
        "--algebra",
        &data("preprojective_a2.alg"),
        "--two-term",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("6 nodes"));
    let dot = std::fs::read_to_string(out).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("doublecircle").count(), 2);
}

#[test]
fn demos_pass() {
    let o = silting(&["demo", "paper", "--n", "4", "--p", "101", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    let o = silting(&["demo", "preprojective", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn seeded_reports_are_byte_stable() {
    let args = ["--seed", "7", "--json", "demo", "paper", "--depth", "1"];
    assert_eq!(silting(&args).stdout, silting(&args).stdout);
}
