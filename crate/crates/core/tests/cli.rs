//! The command-line front end, in process and as a binary.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use soberbench::cli::main_with_args;

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str, text: &str) -> Self {
        let path = std::env::temp_dir().join(format!("soberbench-cli-{}-{name}", std::process::id()));
        std::fs::write(&path, text).unwrap();
        Scratch(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("soberbench").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(out: &str) -> Vec<Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn find<'a>(recs: &'a [Value], key: &str) -> &'a Value {
    recs.iter().find(|r| r["key"] == key).unwrap_or_else(|| panic!("no record {key}"))
}

const LAMBDA: &str = "# lambda\nposet 3\n0 < 2\n1 < 2\n";

#[test]
fn classify_lambda_is_sober() {
    let f = Scratch::new("lambda", LAMBDA);
    let (code, out, _) = run(&["classify", f.path()]);
    assert_eq!(code, 0);
    assert!(out.contains("sober = true"), "{out}");
    let (_, out, _) = run(&["--format", "records", "classify", f.path()]);
    let recs = records(&out);
    assert_eq!(find(&recs, "sober")["value"], true);
    assert_eq!(find(&recs, "t1")["value"], false);
}

#[test]
fn hofmann_mislove_on_the_two_chain() {
    let f = Scratch::new("chain", "poset 2\n0 < 1\n");
    let (code, out, _) = run(&["--format", "records", "verify", f.path(), "hofmann-mislove"]);
    assert_eq!(code, 0);
    let recs = records(&out);
    let r = find(&recs, "hofmann-mislove");
    assert_eq!(r["value"]["verdict"], "pass");
    assert_eq!(r["value"]["detail"]["open filters"], 2);
    assert_eq!(find(&recs, "failures")["value"], 0);
}

#[test]
fn cofinite_well_filtered_witness() {
    let f = Scratch::new("cofinite", "cofinite\n");
    let (code, out, _) = run(&["--format", "records", "classify", f.path()]);
    assert_eq!(code, 0);
    let recs = records(&out);
    let wf = find(&recs, "well_filtered");
    assert_eq!(wf["value"], false);
    assert_eq!(wf["witness"]["family"], "cofinite-tails");
}

#[test]
fn parse_errors_name_the_line() {
    let f = Scratch::new("cycle", "poset 2\n0 < 1\n1 < 0\n");
    let (code, _, err) = run(&["classify", f.path()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let f = Scratch::new("range", "poset 2\n\n0 < 5\n");
    let (code, _, err) = run(&["classify", f.path()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["classify"]).0, 2);
    assert_eq!(run(&["classify", "/nonexistent/soberbench/file"]).0, 2);
    let f = Scratch::new("unknown-id", LAMBDA);
    assert_eq!(run(&["verify", f.path(), "no-such-theorem"]).0, 2);
}

#[test]
fn empty_search_prints_only_a_summary() {
    let (code, out, _) = run(&["--format", "records", "--seed", "3", "search", "--count", "0"]);
    assert_eq!(code, 0);
    let recs = records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["key"], "summary");
    assert_eq!(recs[0]["value"]["instances"], 0);
    assert_eq!(recs[0]["value"]["seed"], 3);
}

#[test]
fn search_is_reproducible_in_process() {
    let args = ["--format", "records", "--seed", "11", "search", "--count", "12", "--max-n", "4"];
    let (code, a, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, run(&args).1);
    let summary = records(&a).pop().unwrap();
    assert_eq!(summary["value"]["instances"], 12);
    assert_eq!(summary["value"]["failures"], serde_json::json!([]));
}

#[test]
fn theorems_lists_the_registry() {
    let (code, out, _) = run(&["theorems"]);
    assert_eq!(code, 0);
    for id in ["hofmann-mislove", "inclusion-chain", "sober.7cond", "wf.equational"] {
        assert!(out.contains(id), "{id} missing");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_soberbench");
    let f = Scratch::new("bin", LAMBDA);
    let ok = Command::new(bin).args(["classify", f.path()]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("sober = true"));
    let bad = Command::new(bin).arg("bogus").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
