//! End-to-end runs of the `trilink` binary: command output, file formats
//! and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_trilink");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_then_classify_pipeline() {
    for (name, label) in [
        ("borromean", "Borromean"),
        ("hopf-split", "HopfSplit"),
        ("chain3", "Chain3"),
        ("necklace", "Necklace"),
        ("unlink3", "ZeroProfileNonBorromean (Unlink3 under Conjecture)"),
    ] {
        let generated = run(&["generate", name]);
        assert!(generated.status.success(), "generate {name}");
        let classified = run_with_stdin(&["classify", "-"], &stdout(&generated));
        assert!(classified.status.success(), "classify {name}");
        let text = stdout(&classified);
        assert_eq!(text.lines().next(), Some(label), "{name}: {text}");
        assert!(text.contains("parities: {"), "{name}: {text}");
    }
}

#[test]
fn unknown_generate_name_is_a_usage_error() {
    let out = run(&["generate", "trefoil"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_error_exits_2_with_line_number() {
    let out = run_with_stdin(&["classify", "-"], "0 0 0\n1 0 1/0\n0 1 0\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn validation_error_exits_1() {
    // Two triangles sharing a vertex: outlines intersect.
    let text = "0 0 0\n2 0 0\n0 2 0\n\n0 0 0\n-2 0 0\n0 -2 0\n";
    let out = run_with_stdin(&["classify", "-"], text);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn move_command_applies_and_reports_verdicts() {
    let dir = std::env::temp_dir().join("trilink-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("pair.txt");
    std::fs::write(&input, "0 0 0\n2 0 0\n0 2 0\n\n50 0 0\n52 0 0\n50 2 0\n").unwrap();

    let moved = dir.join("moved.txt");
    let out = run(&[
        "move",
        input.to_str().unwrap(),
        "--target",
        "1",
        "--pivot",
        "2",
        "--apex",
        "50",
        "2",
        "1/2",
        "-o",
        moved.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("verdict: valid"));
    let text = std::fs::read_to_string(&moved).unwrap();
    assert!(text.contains("50 2 1/2"));

    // Apex on the kept line is rejected with exit code 1.
    let out = run(&[
        "move",
        input.to_str().unwrap(),
        "--target",
        "0",
        "--pivot",
        "2",
        "--apex",
        "1",
        "0",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("invalid"));
}

#[test]
fn fuzz_command_is_deterministic_and_exits_zero() {
    let generated = run(&["generate", "chain3"]);
    let dir = std::env::temp_dir().join("trilink-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("chain3.txt");
    std::fs::write(&input, stdout(&generated)).unwrap();

    let args = ["fuzz", input.to_str().unwrap(), "--moves", "20", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b), "same seed must give identical reports");
    assert!(stdout(&a).contains("violations: 0"));
}

#[test]
fn bordef_check_exits_zero() {
    let out = run(&["bordef-check", "--trials", "40", "--seed", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("violations: 0"));
}

#[test]
fn export_obj_writes_polyline_loops() {
    let generated = run(&["generate", "borromean"]);
    let dir = std::env::temp_dir().join("trilink-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("borromean.txt");
    std::fs::write(&input, stdout(&generated)).unwrap();
    let obj = dir.join("borromean.obj");

    let out = run(&[
        "export-obj",
        input.to_str().unwrap(),
        "-o",
        obj.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&obj).unwrap();
    assert!(text.starts_with("# visualization-only"));
    assert_eq!(text.matches("\nl ").count(), 3);
}

#[test]
fn invariants_command_prints_both_predicates() {
    let generated = run(&["generate", "borromean"]);
    let out = run_with_stdin(&["invariants", "-"], &stdout(&generated));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("parities: {0,0,0}"));
    assert!(text.contains("borromean: true"));
    assert!(text.contains("borromean-reduced: true"));
}
