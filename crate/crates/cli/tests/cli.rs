use std::io::Write;
use std::process::{Command, Output, Stdio};

fn braidfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidfact"))
        .args(args)
        .env_remove("BRAIDFACT_BUDGET")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braidfact"))
        .args(args)
        .env_remove("BRAIDFACT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_relation_is_equal() {
    assert_eq!(code(&braidfact(&["eq", "-m", "3", "1 2 1", "2 1 2"])), 0);
    assert_eq!(code(&braidfact(&["eq", "-m", "3", "1 2", "2 1"])), 1);
}

#[test]
fn tilde_delta_squared_validates_from_file() {
    let out = braidfact(&["tilde-delta2", "-m", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tilde_delta2.json");
    std::fs::write(&path, stdout(&out)).unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(code(&braidfact(&["validate-bmf", "-m", "3", "-N", "1", &arg])), 0);
    assert_eq!(code(&braidfact(&["validate-bmf", "-m", "3", "-N", "2", &arg])), 1);
}

#[test]
fn product_mismatch_is_certified_no() {
    let out = braidfact(&["hurwitz-eq", "-m", "3", "1|2", "2|1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("alpha mismatch"));
    let out = braidfact(&["hurwitz-eq", "-m", "3", "1|2", "2|1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reason"], "alpha mismatch");
}

#[test]
fn hurwitz_yes_and_unknown() {
    assert_eq!(code(&braidfact(&["hurwitz-eq", "-m", "3", "1|2", "2|-2 1 2"])), 0);
    let out = braidfact(&["hurwitz-eq", "-m", "3", "1|2|1", "2|1|2", "--budget-states", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_round_trip() {
    for cmd in ["delta2", "tilde-delta2"] {
        let out = braidfact(&[cmd, "-m", "4", "--json"]);
        let first: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let again = with_stdin(&["redegenerate", "--split", "", "--json"], &first.to_string());
        // an empty split list is a usage error, the input itself must still parse
        assert_eq!(code(&again), 3);
        let census = with_stdin(&["census", "--json"], &first.to_string());
        assert_eq!(code(&census), 0);
        let checked = with_stdin(&["validate-bmf", "-N", "1"], &first.to_string());
        assert_eq!(code(&checked), 0, "{cmd}");
    }
    let out = braidfact(&["vankampen", "-m", "2", "1 1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let p = braidfact::curve::GroupPresentation::from_json(&v).unwrap();
    assert_eq!(p.to_json(), v);
}

#[test]
fn normal_form_output() {
    let out = braidfact(&["nf", "-m", "3", "1 2 1 1 2 1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "Δ^2 |");
    let out = with_stdin(&["nf", "-m", "3", "--json"], "1 2\n-2\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], serde_json::json!([1]));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(code(&braidfact(&["nope"])), 3);
    assert_eq!(code(&braidfact(&["eq", "-m", "3", "1 q", "2"])), 3);
    assert_eq!(code(&braidfact(&["eq", "1", "2"])), 3);
    assert_eq!(code(&braidfact(&["--help"])), 0);
    let out = braidfact(&["nf", "-m", "3", "1\n2 5"]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("\"5\""), "{err}");
}

#[test]
fn remaining_commands() {
    assert_eq!(code(&braidfact(&["conj", "-m", "3", "1", "2"])), 0);
    assert_eq!(code(&braidfact(&["conj", "-m", "3", "1", "1 1"])), 1);
    assert_eq!(code(&braidfact(&["stable-eq", "-m", "3", "1|2", "2|-2 1 2"])), 0);
    assert_eq!(code(&braidfact(&["stable-eq", "-m", "3", "1|2", "1|1"])), 1);
    assert_eq!(code(&braidfact(&["inseparable", "-m", "2", "-k", "2", "1 1 1"])), 0);
    assert_eq!(code(&braidfact(&["inseparable", "-m", "2", "-k", "2", ""])), 1);
    assert_eq!(code(&braidfact(&["interlace", "-m", "5", "4 3 -4"])), 0);
    assert_eq!(code(&braidfact(&["verify-centralizer", "-m", "6", "2", "3"])), 0);
    let t = stdout(&braidfact(&["tilde-delta2", "-m", "3"]));
    let split = with_stdin(&["redegenerate", "--split", "0,1,2"], &t);
    assert_eq!(code(&split), 0);
    assert_eq!(code(&with_stdin(&["redegenerate"], &stdout(&split))), 0);
    assert_eq!(code(&braidfact(&["redegenerate", "-m", "2", "1"])), 1);
}

#[test]
fn budget_environment_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidfact"))
        .args(["hurwitz-eq", "-m", "3", "1|2|1", "2|1|2"])
        .env("BRAIDFACT_BUDGET", "max_states=0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_braidfact"))
        .args(["eq", "-m", "3", "1", "1"])
        .env("BRAIDFACT_BUDGET", "bogus")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}
