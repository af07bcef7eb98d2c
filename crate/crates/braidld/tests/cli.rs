use std::process::{Command, Output};

fn braidld(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidld"))
        .args(args)
        .env_remove("BRAIDLD_MAX_WORD_LENGTH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn predicates_exit_zero_or_one() {
    assert_eq!(braidld(&["braid-id", "1", "-1"]).status.code(), Some(0));
    assert_eq!(braidld(&["braid-id", "1"]).status.code(), Some(1));
    assert_eq!(braidld(&["braid-eq", "1", "3", "--", "3", "1"]).status.code(), Some(0));
    assert_eq!(braidld(&["ld-eq", "(x (x x))", "--", "((x x) (x x))"]).status.code(), Some(0));
    assert_eq!(braidld(&["ld-eq", "x", "--", "(x x)"]).status.code(), Some(1));
}

#[test]
fn errors_have_distinct_codes() {
    let parse = braidld(&["braid-id", "1", "q"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(!parse.stderr.is_empty());
    let cap = braidld(&["--max-word-length", "4", "braid-id", "1", "2", "1", "2", "-2", "-1", "-2", "-1"]);
    assert_eq!(cap.status.code(), Some(3));
    assert_eq!(braidld(&["nonsense"]).status.code(), Some(4));
    assert_eq!(braidld(&["seq-act", "x", "--", "-1"]).status.code(), Some(5));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidld"))
        .args(["braid-id", "1", "2", "1", "2", "-2", "-1", "-2", "-1"])
        .env("BRAIDLD_MAX_WORD_LENGTH", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output() {
    let out = braidld(&["--json", "braid-eq", "1", "2", "1", "--", "2", "1", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "braid-eq");
    assert_eq!(v["result"], true);
    assert_eq!(v["exit"], 0);
    assert!(v["inputs"].is_object());
}

#[test]
fn prop_runs_are_reproducible() {
    let a = braidld(&["prop", "sigma-n", "--cases", "50", "--seed", "7"]);
    let b = braidld(&["prop", "sigma-n", "--cases", "50", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("failures: 0"));
}

#[test]
fn outputs_parse_back() {
    let shifted = stdout(&braidld(&["shift", "2", "1", "-3"]));
    assert_eq!(shifted, "3 -5\n");
    let reversed = stdout(&braidld(&["reverse", shifted.trim()]));
    assert_eq!(reversed, "-5 3\n");
}
