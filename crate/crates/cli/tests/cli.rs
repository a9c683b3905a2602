use std::path::Path;
use std::process::{Command, Output};

fn silted(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_silted")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn a2_two_term_grid() {
    let o = silted(&["ar", "fixture:a2", "--two-term", "--format", "ascii"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "      11          01[1]\n01          10          11[1]\n");
}

#[test]
fn d4_dot_has_twelve_vertices() {
    let o = silted(&["ar", "fixture:d4_first", "--format", "dot"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 12);
    assert!(text.starts_with("digraph"));
}

#[test]
fn enumeration_counts() {
    let o = silted(&["silting", "fixture:d5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 182);

    let o = silted(&["silting", "fixture:a3_linear", "--tilting-only", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 5);

    let o = silted(&["silting", "fixture:a4_linear", "--oracle", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 42);
}

#[test]
fn quiver_files_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let q = write(dir.path(), "a3.quiver", "vertices 1 2 3\narrow a:1->2\narrow b:2->3\n");
    let out = dir.path().join("classes.csv");
    let o = silted(&["classify", &q, "--format", "csv", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 5);
    assert_eq!(csv.lines().filter(|l| l.ends_with(",A3")).count(), 4);
}

#[test]
fn a4_linear_classification_summary() {
    let o = silted(&["classify", "fixture:a4_linear", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 15);
    assert_eq!(v["families"]["A4"], 10);
    assert_eq!(v["families"]["A3⊔A1"], 4);
    assert_eq!(v["families"]["A2⊔A2"], 1);
    assert_eq!(v["records"].as_array().unwrap().len(), 42);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.quiver", "vertices 1 2\narrow a 1 2\n");
    assert_eq!(silted(&["ar", &bad]).status.code(), Some(2));
    let cyclic = write(dir.path(), "loop.quiver", "vertices 1\narrow a:1->1\n");
    assert_eq!(silted(&["ar", &cyclic]).status.code(), Some(2));
    let square = write(dir.path(), "square.quiver", "vertices 1 2 3 4\narrow a:1->2\narrow b:2->3\narrow c:3->4\narrow d:1->4\n");
    assert_eq!(silted(&["silting", &square]).status.code(), Some(3));
    assert_eq!(silted(&["ar", "fixture:nope"]).status.code(), Some(2));
    assert_eq!(silted(&["silting", "fixture:a2", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let one = silted(&["classify", "fixture:d4_first", "--format", "json", "--jobs", "1"]);
    let four = silted(&["classify", "fixture:d4_first", "--format", "json", "--jobs", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn reproduction_suite_passes() {
    let o = silted(&["paper-suite", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(text.contains("d5,classes,62,62,true"));
}
