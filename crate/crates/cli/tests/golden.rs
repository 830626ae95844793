mod common;

use common::*;

#[test]
fn golden_sessions() {
    for name in GOLDEN {
        let (got, code, expected) = run_golden(name);
        assert_eq!(code, Some(0), "{name}");
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn single_command_forms() {
    let cfg = data("points4.cfg");
    let joined = gcalg(&["--config", &cfg, "eval ab + cd"]);
    let split = gcalg(&["--config", &cfg, "eval", "ab", "+", "cd"]);
    assert!(joined.status.success());
    assert_eq!(joined.stdout, split.stdout);
    assert_eq!(
        String::from_utf8(joined.stdout).unwrap(),
        "{12}: 1\n{13}: -10\n{23}: -2\n{14}: -5\n{24}: -1\n{34}: 0\n"
    );
    let flag = gcalg(&["--config", &cfg, "flag", "abc", "ab"]);
    assert!(flag.status.success());
    assert!(String::from_utf8(flag.stdout).unwrap().starts_with("level 1: step 3\n"));
}

#[test]
fn commands_from_stdin() {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(env!("CARGO_BIN_EXE_gcalg"))
        .args(["--config", &data("points4.cfg")])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"eval [abcd]\nrank\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "> eval [abcd]\n0\n> rank\n3\n");
}

#[test]
fn concurrent_instance() {
    let out = gcalg(&["--config", &data("u36_concurrent.cfg"), "concurrent", "ab", "cd", "ef"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "true\n");
}
