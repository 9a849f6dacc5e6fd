//! End-to-end runs of the `equicycle` binary.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicycle"))
        .args(args)
        .env_remove("EQUICYCLE_BUDGET_MS")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct_to(dir: &Path, ell: u32, v: u32, format: &str) -> String {
    let path = dir.join(format!("k{v}_{ell}.{format}"));
    let p = path.to_str().unwrap().to_string();
    let o = run(&[
        "construct",
        "--ell",
        &ell.to_string(),
        "--v",
        &v.to_string(),
        "--out",
        &p,
        "--format",
        format,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn construct_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    for (ell, v) in [(9, 19), (7, 29), (7, 43), (7, 35)] {
        let p = construct_to(dir.path(), ell, v, "text");
        let o = run(&["verify", &p]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("overall=pass"));
    }
}

#[test]
fn construct_writes_to_stdout_without_out() {
    let o = run(&["construct", "--ell", "7", "--v", "15"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("ell=7\nv=15\n"));
    assert!(text.ends_with("end\n"));
}

#[test]
fn unsupported_parameters_exit_two() {
    for args in [
        ["construct", "--ell", "7", "--v", "20"],
        ["construct", "--ell", "5", "--v", "11"],
        ["construct", "--ell", "8", "--v", "17"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}");
    }
    assert_eq!(code(&run(&["construct", "--ell", "7"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn flipped_colour_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct_to(dir.path(), 9, 19, "text");
    let text = std::fs::read_to_string(&p).unwrap();
    let line = text
        .lines()
        .find(|l| l.ends_with(" red"))
        .unwrap()
        .to_string();
    let broken = text.replacen(&line, &line.replace(" red", " blue"), 1);
    std::fs::write(&p, broken).unwrap();
    let o = run(&["verify", &p]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("check=equitable-cycles status=fail"));
    assert!(out.contains("check=class-sizes status=fail"));
    assert!(out.contains("check=edge-partition status=pass"));
}

#[test]
fn truncated_certificate_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct_to(dir.path(), 7, 15, "text");
    let text = std::fs::read_to_string(&p).unwrap();
    std::fs::write(&p, &text[..text.len() / 2]).unwrap();
    let o = run(&["verify", &p]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    let missing = dir.path().join("absent.cert");
    assert_eq!(code(&run(&["verify", missing.to_str().unwrap()])), 2);
}

#[test]
fn structured_format_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct_to(dir.path(), 9, 37, "structured");
    assert!(std::fs::read_to_string(&p).unwrap().starts_with('{'));
    let o = run(&["verify", &p]);
    assert_eq!(code(&o), 0);
}

#[test]
fn inspect_prints_difference_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct_to(dir.path(), 17, 69, "text");
    let o = run(&["inspect", &p, "--differences"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("class ")).count() >= 34);
    assert!(out.contains("overall=pass"));

    let o = run(&["inspect", &p]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("cycles=138 red=34 blue=35"));
}

#[test]
fn inspect_differences_needs_a_rotational_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let p = construct_to(dir.path(), 7, 21, "text");
    assert_eq!(code(&run(&["inspect", &p, "--differences"])), 2);
}

#[test]
fn zero_budget_exhausts_search() {
    let o = Command::new(env!("CARGO_BIN_EXE_equicycle"))
        .args(["construct", "--ell", "7", "--v", "35"])
        .env("EQUICYCLE_BUDGET_MS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}
