use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bicycles"))
}

fn demos_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("demos")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn every_shipped_script_runs_cleanly() {
    let mut seen = 0;
    for entry in std::fs::read_dir(demos_dir()).unwrap() {
        let path = entry.unwrap().path();
        let o = run(&["eval", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}\n{}{}", path.display(), stdout(&o), stderr(&o));
        assert!(!stdout(&o).contains("FAIL"));
        seen += 1;
    }
    assert_eq!(seen, 5);
}

#[test]
fn every_demo_runs() {
    for name in ["pppu", "units", "chern", "normal-form", "projection", "universality", "mutants"] {
        let o = run(&["--trials", "60", "demo", name]);
        assert_eq!(o.status.code(), Some(0), "{name}\n{}{}", stdout(&o), stderr(&o));
        assert!(stdout(&o).ends_with(&format!("DEMO {name}: PASS\n")), "{}", stdout(&o));
    }
}

#[test]
fn pppu_demo_passes() {
    let o = run(&["demo", "pppu"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("lhs = 1 * (v0, w0, 3, {}) + 1 * (v1, w0, 3, {}) + 1 * (v2, w1, 1, {})"), "{out}");
    assert_eq!(out.matches(": PASS").count(), 3);
}

#[test]
fn forget_pullback_demo_confirms_the_inequality() {
    let o = run(&["demo", "forget-pullback-fails"]);
    assert_eq!(o.status.code(), Some(3));
    let expected = "\
DEMO forget-pullback-fails (the forget map does not commute with pullback)
X = Y = {y}, f = id, g : {y1', y2'} -> {y}, all of dimension 0
alpha = 1 * (y, 0, {})
forget(g^* alpha)            = 1 * (<y,y1'>, y1', 0, {}) + 1 * (<y,y2'>, y2', 0, {})   (2 terms)
(g')^* forget(alpha) ,^* g   = 1 * (<y,y1'>, y1', 0, {}) + 1 * (<y,y1'>, y2', 0, {}) + 1 * (<y,y2'>, y1', 0, {}) + 1 * (<y,y2'>, y2', 0, {})   (4 terms)
DEMO forget-pullback-fails: EXPECTED INEQUALITY CONFIRMED
";
    assert_eq!(stdout(&o), expected);
    let o = run(&["--format", "structured", "demo", "forget-pullback-fails"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["details"]["lhs_terms"], 2);
    assert_eq!(v["details"]["rhs_terms"], 4);
}

#[test]
fn eval_of_unit_times_a_equals_eval_of_a() {
    let script = demos_dir().join("units.bc");
    let s = script.to_str().unwrap();
    let lhs = run(&["eval", s, "unit(X) . a"]);
    let rhs = run(&["eval", s, "a"]);
    assert_eq!(lhs.status.code(), Some(0));
    assert_eq!(stdout(&lhs), stdout(&rhs));
    assert_eq!(stdout(&rhs), "2 * (x0, y0, 1, {}) + 1 * (x0, y0, 1, {(1,0)}) + 2 * (x1, y0, 3, {}) + 1 * (x1, y0, 3, {(0,-1)})\n");
}

#[test]
fn assert_eq_exit_status_tracks_equality() {
    let script = demos_dir().join("units.bc");
    let s = script.to_str().unwrap();
    assert_eq!(run(&["assert-eq", s, "unit(X) . a", "a . unit(Y)"]).status.code(), Some(0));
    let o = run(&["assert-eq", s, "a", "2 * a"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("DIFFERENT\n"));
}

#[test]
fn scripts_can_come_from_stdin() {
    let o = run_stdin(&["eval", "-"], "space X { x0: dim 2 }\neval 2 * unit(X) - unit(X)\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2 * unit(X) - unit(X) = 1 * (x0, x0, 2, {})\n");
}

#[test]
fn failed_assertions_exit_with_one() {
    let o = run_stdin(&["eval", "-"], "space X { x0: dim 0 }\nassert unit(X) == 2 * unit(X)\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(": FAIL\n  lhs = 1 * (x0, x0, 0, {})\n  rhs = 2 * (x0, x0, 0, {})\n"));
}

#[test]
fn elaboration_errors_exit_with_two_and_a_location() {
    let script = "space X { x0: dim 0, x1: dim 1 }\nspace Y { y0: dim 0 }\nmap f : X -> Y { x0 -> y0, x1 -> y0 }\nlet a = unit(X)\neval push(f, pull(f, a))\n";
    let o = run_stdin(&["eval", "-"], script);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: <stdin>:5:19: type error: map f is not smooth\n");
    let o = run_stdin(&["eval", "-"], "space X { x0: dim 0 }\neval unit(Z)\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:11: name error: unknown space `Z` (did you mean `X`?)"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["check", "A99"]).status.code(), Some(2));
    assert_eq!(run(&["--max-points", "7", "check", "A1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "/nonexistent/script.bc"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["demo", "pppv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("did you mean `pppu`?"));
}

#[test]
fn check_forwards_to_the_harness() {
    let o = run(&["--trials", "40", "check", "PPPU"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "AXIOM PPPU trials=40 failures=0\n");
    let o = run(&["--trials", "40", "--theory", "mutant-rotated-unit", "check", "PPPU"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("  witness trial="));
    let o = run(&["--trials", "40", "--theory", "mod-2", "check-all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("THEORY Z/(mod 2) seed=1\n"), "{}", stdout(&o));
}

#[test]
fn structured_reports_are_deterministic() {
    let args = ["--trials", "30", "--seed", "9", "--format", "structured", "check-all"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 9);
    let text = ["--trials", "30", "--seed", "9", "check-all"];
    assert_eq!(run(&text).stdout, run(&text).stdout);
}

#[test]
fn list_axioms_covers_every_family() {
    let o = run(&["list-axioms"]);
    let out = stdout(&o);
    for id in ["A1", "A2'", "PSREL", "GT-CHERN", "ORACLE-PRODUCT", "VB-TENSOR-A1", "FORGET-CHERN"] {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(id)), "{id}");
    }
    let v: serde_json::Value = serde_json::from_slice(&run(&["--format", "structured", "list-axioms"]).stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), out.lines().count());
}
