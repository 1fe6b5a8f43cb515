//! End-to-end runs of the `groupchar` binary: exit codes and output bytes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_groupchar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn save(dir: &Path, spec: &str, file: &str) -> PathBuf {
    let path = dir.join(file);
    let out = run(&["group", "--spec", spec, "--save", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compare_dihedral_quaternion() {
    let dir = TempDir::new().unwrap();
    let d8 = save(dir.path(), "dihedral(8)", "d8.json");
    let q8 = save(dir.path(), "quaternion(8)", "q8.json");
    let (a, b) = (d8.to_str().unwrap(), q8.to_str().unwrap());
    let one = run(&["compare", "--a", a, "--b", b, "--levels", "1"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(json(&one)["equivalent"], true);
    let three = run(&["compare", "--a", a, "--b", b, "--levels", "1,2,3"]);
    assert_eq!(three.status.code(), Some(1));
    assert_eq!(json(&three)["equivalent"], false);
}

#[test]
fn reconstruct_from_group_file() {
    let dir = TempDir::new().unwrap();
    let s3 = save(dir.path(), "symmetric(3)", "s3.json");
    let pairs = dir.path().join("p.json");
    let out = run(&["reconstruct", "--group", s3.to_str().unwrap(), "--save-pairs", pairs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["witness"]["kind"], "isomorphism");
    assert_eq!(v["witness"]["map"].as_array().unwrap().len(), 6);

    let bare = run(&["reconstruct", "--pairs", pairs.to_str().unwrap()]);
    assert_eq!(bare.status.code(), Some(0));
    assert_eq!(json(&bare)["feasible"], true);
}

#[test]
fn infeasible_pairs_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"order":2,"pairs":[[0,0,[0,0]],[0,1,[1,1]],[1,1,[1,1]]]}"#).unwrap();
    let out = run(&["reconstruct", "--pairs", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["feasible"], false);
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"name":"x","order":2,"table":[[0,1],[1,1]]}"#).unwrap();
    let out = run(&["chartab", "--group", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("latin rows") && err.contains("[1, 1]"), "{err}");

    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(run(&["group", "--group", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["group", "--group", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["group", "--spec", "cyclic(x)"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["compare", "--a", "cyclic(2)", "--b", "cyclic(2)", "--levels", "4"]).status.code(), Some(2));
    assert_eq!(run(&["--max-order", "4", "group", "--spec", "cyclic(5)"]).status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = ["--seed", "7", "detcheck", "--spec", "symmetric(3)", "--points", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = run(&["--seed", "8", "detcheck", "--spec", "symmetric(3)", "--points", "3"]);
    assert_ne!(a.stdout, other.stdout);
    let v = json(&a);
    assert_eq!(v["factorization"].as_array().unwrap().len(), 3);
    assert_eq!(v["regular_identity"].as_array().unwrap().len(), 3);

    let t1 = run(&["--seed", "1", "chartab", "--spec", "quaternion(8)"]);
    let t2 = run(&["--seed", "1", "chartab", "--spec", "quaternion(8)"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn detcheck_default_point_count() {
    let out = run(&["detcheck", "--spec", "cyclic(3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["factorization"].as_array().unwrap().len(), 20);
}

#[test]
fn chartab_file_loads_back() {
    let dir = TempDir::new().unwrap();
    let q8 = save(dir.path(), "quaternion(8)", "q8.json");
    let table = dir.path().join("t.json");
    let out = run(&["chartab", "--group", q8.to_str().unwrap(), "--save", table.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let g = groupchar::io::load_group(&q8, 100).unwrap();
    let t = groupchar::io::chartab_from_json(&std::fs::read_to_string(&table).unwrap(), &g).unwrap();
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u32>(), 8);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end(), std::fs::read_to_string(&table).unwrap());
}

#[test]
fn kchar_and_ortho_verbs() {
    let out = run(&["kchar", "--spec", "symmetric(3)", "--character", "2", "--tuple", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], serde_json::json!([2, 1]));

    let reg = run(&["kchar", "--spec", "cyclic(4)", "--regular", "--tuple", "0,0,0"]);
    assert_eq!(json(&reg)["value"], serde_json::json!([24, 1]));

    let orbits = run(&["kchar", "--spec", "symmetric(3)", "--character", "2", "--k", "2", "--orbits"]);
    let v = json(&orbits);
    let sizes: u64 = v["entries"].as_array().unwrap().iter().map(|e| e["orbit_size"].as_u64().unwrap()).sum();
    assert_eq!(sizes, 21);

    let ortho = run(&["ortho", "--spec", "dihedral(8)"]);
    assert_eq!(ortho.status.code(), Some(0));
    assert_eq!(json(&ortho).as_array().unwrap().len(), 5 * 5 * 3);
    let one = run(&["ortho", "--spec", "dihedral(8)", "--i", "0", "--j", "4", "--k", "2"]);
    assert_eq!(json(&one)[0]["value"], serde_json::json!([0, 1]));
}

#[test]
fn pretty_output_is_the_same_json() {
    let compact = run(&["group", "--spec", "cyclic(3)"]);
    let pretty = run(&["--output", "pretty", "group", "--spec", "cyclic(3)"]);
    assert_ne!(compact.stdout, pretty.stdout);
    assert_eq!(json(&compact), json(&pretty));
}
