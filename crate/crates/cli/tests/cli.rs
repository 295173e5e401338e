use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rtg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rtg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // a command that fails on its arguments exits without reading stdin
    if let Err(e) = child.stdin.take().unwrap().write_all(stdin.as_bytes()) {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe);
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn folded(l: &str) -> String {
    stdout(&rtg(&["gen", "folded-cube", "--l", l], ""))
}

#[test]
fn folded_cube_census() {
    let d16 = folded("5");
    let o = rtg(&["count", "--pattern", "C5"], &d16);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("192\n", 0));
    let o = rtg(&["count", "--pattern", "C5", "--jobs", "1"], &d16);
    assert_eq!(stdout(&o), "192\n");
}

#[test]
fn check_exit_codes() {
    let d16 = folded("5");
    let o = rtg(&["check", "--pattern", "P5"], &d16);
    assert_eq!((stdout(&o).as_str(), code(&o)), ("free\n", 0));
    let o = rtg(&["check", "--pattern", "P1", "-"], &d16);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "witness path 1: 0 -1- 1\n");
    let o = rtg(
        &[
            "check",
            "--pattern",
            "P4",
            "--anchor",
            "3",
            "--role",
            "endpoint",
        ],
        &d16,
    );
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("witness path 4: 3 "));
    let o = rtg(&["check", "--pattern", "P2", "--anchor", "99"], &d16);
    assert_eq!(code(&o), 2);
}

#[test]
fn malformed_input_reports_the_line() {
    let o = rtg(&["count", "--pattern", "P3"], "rtg1 3 2\n0 1 1\n1 1 2\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = rtg(&["check", "--pattern", "X3"], "rtg1 1 0\n");
    assert_eq!(code(&o), 2);
    let o = rtg(&["partition", "--unknown"], "rtg1 1 0\n");
    assert_eq!(code(&o), 2);
}

#[test]
fn partition_lists() {
    let c5 = "rtg1 6 5\n0 1 1\n1 2 2\n2 3 3\n3 4 4\n0 4 5\n";
    let o = rtg(&["partition"], c5);
    assert_eq!(stdout(&o), "in_c5: 0 1 2 3 4\nout_c5: 5\n");
}

#[test]
fn verify_lines_and_codes() {
    let o = rtg(&["verify", "--lemma", "all"], &folded("5"));
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains("lemma cycle pass checked=16"));
    assert!(text.contains("lemma p3-endpoint domain-error"));
    let o = rtg(&["verify", "--lemma", "p3-endpoint"], &folded("3"));
    assert_eq!(code(&o), 2);
    let o = rtg(
        &["verify", "--lemma", "main"],
        "rtg1 6 5\n0 1 1\n1 2 2\n2 3 3\n3 4 4\n4 5 5\n",
    );
    assert_eq!(code(&o), 2, "a rainbow P5 is outside the domain");
    let o = rtg(&["verify", "--lemma", "nope"], &folded("3"));
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_corpus_is_reproducible() {
    let args = ["verify", "--corpus", "--seed", "3", "--instances", "200"];
    let a = rtg(&args, "");
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "2"]);
    let b = rtg(&with_jobs, "");
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("triggers instances=200"));
}

#[test]
fn search_and_guard() {
    let o = rtg(&["search", "--n", "4", "--pattern", "P3"], "");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("ex*(4, P3) = 6\n"));
    assert!(text.contains("rtg1 4 6\n"));
    let o = rtg(&["search", "--n", "9", "--pattern", "P3"], "");
    assert_eq!(code(&o), 2);
    let o = rtg(
        &["search", "--n", "8", "--pattern", "P4", "--edge-cap", "3"],
        "",
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn pipelines_stay_canonical() {
    let lb = stdout(&rtg(&["gen", "lower-bound", "--n", "19", "--l", "4"], ""));
    assert!(lb.starts_with("rtg1 19 32\n"));
    let pruned = stdout(&rtg(&["prune", "--k", "3"], &lb));
    assert!(pruned.starts_with("rtg1 16 32\n"));
    // output re-parses to the same bytes
    assert_eq!(stdout(&rtg(&["prune", "--k", "0"], &pruned)), pruned);
    let empty = stdout(&rtg(&["prune", "--preprocess"], &lb));
    assert_eq!(empty, "rtg1 0 0\n");
    let o = rtg(&["prune"], &lb);
    assert_eq!(code(&o), 2);
    let random = stdout(&rtg(
        &["gen", "random", "--seed", "1", "--instance", "4"],
        "",
    ));
    assert_eq!(
        random,
        stdout(&rtg(
            &["gen", "random", "--seed", "1", "--instance", "4"],
            ""
        ))
    );
    assert_eq!(
        stdout(&rtg(&["check", "--pattern", "P5"], &random)),
        "free\n"
    );
}

#[test]
fn bounds_output() {
    let o = rtg(&["bounds", "--n", "16", "--l", "5"], "");
    assert_eq!(stdout(&o), "lower 40\nupper 40\n");
    let o = rtg(&["bounds", "--n", "7", "--l", "3"], "");
    assert_eq!(stdout(&o), "lower 6\nupper 21/2\n");
    assert_eq!(code(&rtg(&["bounds", "--n", "7", "--l", "2"], "")), 2);
}
