use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn algshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algshift")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const PATH5: &str = "5 2\n1 2\n2 3\n3 4\n4 5\n";
const TRIANGLE5: &str = "# a triangle with two isolated vertices\n5 2\n2 3\n1 2\n1 3\n";

#[test]
fn tree_shifts_to_star() {
    let files = Files::new();
    let input = files.write("path.txt", PATH5);
    let out = algshift(&["shift", "-i", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["5 2", "1 2", "1 3", "1 4", "1 5"]);
    assert!(text.lines().next().unwrap().contains("consensus true"));
}

#[test]
fn shift_output_parses_back_and_is_a_fixed_point() {
    let files = Files::new();
    let input = files.write("path.txt", PATH5);
    let first = stdout(&algshift(&["--mode", "symmetric", "shift", "-i", input.to_str().unwrap()]));
    let again = files.write("star.txt", &first);
    let second = stdout(&algshift(&["--mode", "symmetric", "shift", "-i", again.to_str().unwrap()]));
    assert_eq!(first, second);
}

#[test]
fn triangle_is_not_matroidal() {
    let files = Files::new();
    let input = files.write("tri.txt", TRIANGLE5);
    let path = input.to_str().unwrap();

    let out = algshift(&["--format", "kv", "matroidal", "-i", path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("schema=algshift-report/1"));
    let pairs: Vec<&str> = lines.collect();
    for expected in [
        "command=matroidal",
        "preimage_size=10",
        "matroidal=false",
        "b1={12,13,23}",
        "b2={14,15,45}",
        "e1={1,2}",
    ] {
        assert!(pairs.contains(&expected), "missing {expected} in {text}");
    }

    assert_eq!(algshift(&["matroidal", "-i", path, "--expect", "matroid"]).status.code(), Some(1));
    assert_eq!(algshift(&["matroidal", "-i", path, "--expect", "not-matroid"]).status.code(), Some(0));
    assert_eq!(
        algshift(&["--mode", "symmetric", "s-matroidal", "-i", path, "--expect", "not-matroid"]).status.code(),
        Some(0)
    );
}

#[test]
fn kv_output_is_deterministic() {
    let files = Files::new();
    let input = files.write("tri.txt", TRIANGLE5);
    let args = ["--format", "kv", "construct-violation", "-i", input.to_str().unwrap()];
    let a = algshift(&args);
    let b = algshift(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("holds=true"));
}

#[test]
fn segment_check_and_lex_prefixes() {
    let files = Files::new();
    let input = files.write("seg.txt", "5 2\n1 2\n1 3\n1 4\n");
    let path = input.to_str().unwrap();
    let text = stdout(&algshift(&["--format", "kv", "check", "-i", path]));
    assert!(text.contains("shifted=true"));
    assert!(text.contains("initial_lex_segment=true"));
    assert_eq!(algshift(&["lex-matroidal", "-i", path, "--expect", "matroid"]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2() {
    let files = Files::new();
    let input = files.write("bad.txt", "4 2\n1 2\n1 x\n");
    let out = algshift(&["check", "-i", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let missing = files.dir.path().join("missing.txt");
    assert_eq!(algshift(&["check", "-i", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn preimage_needs_shifted_input() {
    let files = Files::new();
    let input = files.write("path.txt", PATH5);
    assert_eq!(algshift(&["preimage", "-i", input.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn tiny_prime_reports_disagreement() {
    let files = Files::new();
    let input = files.write("g.txt", "6 2\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n1 4\n");
    let out = algshift(&["--prime", "2", "shift", "-i", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("consensus: false"));
}

#[test]
fn exact_field_agrees_with_prime_field() {
    let files = Files::new();
    let input = files.write("path.txt", PATH5);
    let path = input.to_str().unwrap();
    let body = |out: Output| -> Vec<String> {
        stdout(&out).lines().filter(|l| !l.starts_with('#')).map(String::from).collect()
    };
    assert_eq!(body(algshift(&["--exact", "shift", "-i", path])), body(algshift(&["shift", "-i", path])));
    assert_eq!(algshift(&["--exact", "verify"]).status.code(), Some(2));
}

#[test]
fn verify_single_suite() {
    let out = algshift(&["verify", "--suite", "triangle"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("suite triangle pass"));
    assert_eq!(algshift(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}
