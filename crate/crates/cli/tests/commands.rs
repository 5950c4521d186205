use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negaz4v")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("negaz4v-{}-{name}", std::process::id()))
}

#[test]
fn counts() {
    assert_eq!(stdout(&run(&["count", "--n", "7"])), "293687\n");
    assert_eq!(stdout(&run(&["count", "--n", "31", "--self-dual"])), "5093808171\n");
}

#[test]
fn idempotents_print_one_per_line() {
    let out = run(&["idempotents", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["factor"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["dual", "--code", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn enumerate_then_dual_is_identity_on_self_dual_codes() {
    let list = temp("sd.jsonl");
    let out = run(&["enumerate", "--n", "7", "--self-dual", "--limit", "5", "--out", list.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&list).unwrap();
    assert_eq!(text.lines().count(), 5);
    let code = temp("code.json");
    std::fs::write(&code, text.lines().nth(3).unwrap()).unwrap();
    let dual = run(&["dual", "--code", code.to_str().unwrap()]);
    assert_eq!(stdout(&dual).trim(), text.lines().nth(3).unwrap());
}

#[test]
fn gray_and_minweight() {
    let code = temp("flag.json");
    std::fs::write(&code, r#"{"n":3,"components":[{"family":"F7"},{"family":"F15","b":"0"}]}"#).unwrap();
    let out = run(&["minweight", "--code", code.to_str().unwrap(), "--threads", "2"]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(line.starts_with("d_L=") && line.contains("type=4^"), "{line}");
    let gray = run(&["gray", "--code", code.to_str().unwrap(), "--binary"]);
    let text = stdout(&gray);
    assert!(text.starts_with("length 12 type "), "{text}");
    assert!(text.contains("binary image"));
}

#[test]
fn verify_suites_pass_deterministically() {
    let a = run(&["verify", "--suite", "length2", "--threads", "1"]);
    let b = run(&["verify", "--suite", "length2", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("m=1 standard classes"));
}

#[test]
fn mersenne_counts_reproduce() {
    let out = run(&["reproduce", "thm61"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("5093808171"));
}
