use std::process::Command;

use serde_json::Value;

use endochain::{Status, VerificationReport};
use endochain_cli::{run_args, Output, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> Output {
    run_args(std::iter::once("endochain").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    for key in ["command", "n", "params", "result"] {
        assert!(v.get(key).is_some(), "missing {key} in {v}");
    }
    v
}

#[test]
fn analyze_reports() {
    let out = run(&["analyze", "2,2,2,4,5,5,5"]);
    assert!(out.stdout.contains("fixed points: {2,5}\n"));
    assert!(out.stdout.contains("jump points: {3}\n"));
    assert!(out.stdout.contains("idempotent: no\n"));
    assert!(out.stdout.contains("omega: 2,2,2,5,5,5,5 (index 2)\n"));
    let out = run(&["analyze", "0,1,2"]);
    assert!(
        out.stdout.contains("fixed points: {0,1,2}\n") && out.stdout.contains("idempotent: yes\n")
    );
    let v = json(&["analyze", "1,1,1,3,5,5"]);
    assert_eq!(v["result"]["idempotent"], true);
    assert_eq!(v["result"]["jump_points"], serde_json::json!([3, 4]));
    assert_eq!(v["n"], 6);
}

#[test]
fn literal_errors_and_compact_form() {
    let out = run(&["analyze", "0,x,1"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position 2"), "{}", out.stderr);
    assert_eq!(run(&["analyze", "1,0"]).code, EXIT_USAGE);
    let out = run(&["analyze", "1111555"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.starts_with("warning: compact literal"));
    assert!(out.stdout.contains("images: 1,1,1,1,5,5,5\n"));
}

#[test]
fn enumerate_listings() {
    let out = run(&["enumerate", "--n", "7", "--idempotent", "--fixed", "1,5"]);
    assert_eq!(
        out.stdout,
        "1,1,1,1,1,5,5\n1,1,1,1,5,5,5\n1,1,1,5,5,5,5\n1,1,5,5,5,5,5\n"
    );
    assert_eq!(
        run(&[
            "enumerate",
            "--n",
            "3",
            "--idempotent",
            "--no-jumps",
            "--count"
        ])
        .stdout,
        "6\n"
    );
    assert_eq!(run(&["enumerate", "--n", "3", "--count"]).stdout, "10\n");
    let out = run(&["enumerate", "--n", "6", "--idempotent", "--jumps", "3,4"]);
    assert!(out.stdout.lines().any(|l| l == "1,1,1,3,5,5"));
    let v = json(&["enumerate", "--n", "3", "--idempotent"]);
    assert_eq!(v["result"]["count"], 8);
    assert_eq!(v["result"]["members"].as_array().unwrap().len(), 8);
    let csv = run(&["enumerate", "--n", "2", "--format", "csv"]).stdout;
    assert_eq!(csv, "endo\n\"0,0\"\n\"0,1\"\n\"1,1\"\n");
}

#[test]
fn enumerate_flag_errors() {
    assert_eq!(
        run(&["enumerate", "--n", "4", "--jumps", "1", "--no-jumps"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["enumerate", "--n", "4", "--fixed", "4"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["enumerate", "--n", "4", "--jumps", "0"]).code,
        EXIT_USAGE
    );
    let out = run(&["enumerate", "--n", "13", "--count"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--cap-override"));
    assert_eq!(
        run(&["enumerate", "--n", "3", "--count", "--cap-override", "2"]).code,
        EXIT_USAGE
    );
}

#[test]
fn class_reports() {
    let out = run(&["class", "2,2,2,5,5,5,5"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("members (4):"));
    assert!(out.stdout.contains("order (segment formula): 4\n"));
    assert!(out.stdout.contains("closed under + and ·: yes\n"));
    assert!(run(&["class", "0,1,2"])
        .stdout
        .contains("members (1):\n  0,1,2\n"));
    let out = run(&["class", "1,1,1,5,5,5,5"]);
    assert!(out.stdout.contains("order (C_t variant): 4  [differs]"));
    assert!(out.stderr.contains("gives 4"));
    let out = run(&["class", "2,2,2,4,5,5,5"]);
    assert!(out.stderr.contains("not idempotent"));
    assert!(out.stdout.starts_with("class of 2,2,2,5,5,5,5 on C7\n"));
    let v = json(&["class", "1,1,1,5,5,5,5"]);
    let r = &v["result"];
    assert_eq!(
        (
            r["order_bruteforce"].as_u64(),
            r["order_formula"].as_u64(),
            r["order_ct_variant"].as_u64()
        ),
        (Some(2), Some(2), Some(4))
    );
    assert_eq!(
        r["members"],
        serde_json::json!(["1,1,1,4,5,5,5", "1,1,1,5,5,5,5"])
    );
    assert_eq!(r["blocks"], serde_json::json!([[1, 1], [5, 5]]));
    assert_eq!(r["closure_ok"], true);
}

#[test]
fn tables_output() {
    let out = run(&["tables", "--n", "4", "--fixed", "0,1,3"]);
    assert!(out.stdout.contains("φ1 = 0,1,1,3\nφ2 = 0,1,3,3\n"));
    assert!(out.stdout.contains("φ1 | φ1 φ2\nφ2 | φ2 φ2\n"));
    assert!(out.stdout.contains("φ1 | φ1 φ1\nφ2 | φ2 φ2\n"));
    let out = run(&["tables", "--n", "5", "--fixed", "2"]);
    assert!(out.stdout.contains("+  | φ1\n---+---\nφ1 | φ1\n"));
    let csv = run(&["tables", "--n", "7", "--fixed", "1,5", "--format", "csv"]).stdout;
    assert!(csv.starts_with("+,\"1,1,1,1,1,5,5\""));
    let v = json(&["tables", "--n", "7", "--fixed", "1,5"]);
    assert_eq!(v["result"]["product"][2][0], "1,1,1,5,5,5,5");
    assert_eq!(run(&["tables", "--n", "4", "--fixed", ""]).code, EXIT_USAGE);
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "--n", "7", "--theorem", "Thm3.9"]);
    let reports: Vec<VerificationReport> = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].status, Status::Pass);
    // nonempty proper subsets of {0..n-1}, summed over n = 2..7
    assert_eq!(
        reports[0].instances,
        (2..=7).map(|n| (1u64 << n) - 2).sum::<u64>()
    );

    let out = run(&["verify", "--n", "7", "--theorem", "Thm4.8"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("Thm4.8     pass-with-erratum"));
    assert!(out.stderr.contains("warning: Thm4.8"));
    assert!(out
        .stdout
        .contains("erratum: [1,1,1,5,5,5,5] brute force 2, C_t variant 4"));

    let out = run(&["verify", "--n", "8", "--theorem", "Rem4.11"]);
    assert_eq!(out.code, EXIT_OK);
    let csv = run(&["verify", "--n", "4", "--all", "--format", "csv"]).stdout;
    assert_eq!(csv.lines().count(), 23);
}

#[test]
fn verify_errors() {
    assert_eq!(
        run(&["verify", "--n", "5", "--theorem", "Thm9.9"]).code,
        EXIT_USAGE
    );
    assert_eq!(run(&["verify", "--n", "5"]).code, EXIT_USAGE);
    assert_eq!(
        run(&["verify", "--n", "5", "--all", "--theorem", "Thm3.9"]).code,
        EXIT_USAGE
    );
    assert_eq!(run(&["verify", "--n", "20", "--all"]).code, EXIT_USAGE);
}

#[test]
fn counterexamples() {
    assert_eq!(
        run(&["counterexample", "--property", "congruence", "--n", "2"]).stdout,
        "none\n"
    );
    let out = run(&["counterexample", "--property", "congruence", "--n", "8"]);
    assert_eq!(
        out.stdout,
        "n: 3\nalpha: 1,2,2\nbeta: 2,2,2\ngamma: 0,0,1\nalpha·gamma: 0,1,1\nbeta·gamma: 1,1,1\n"
    );
    let v = json(&["counterexample", "--property", "congruence", "--n", "2"]);
    assert!(v["result"].is_null());
    assert_eq!(
        run(&["counterexample", "--property", "commutes", "--n", "3"]).code,
        EXIT_USAGE
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_endochain");
    let ok = Command::new(bin)
        .args(["enumerate", "--n", "3", "--count"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"10\n");
    let bad = Command::new(bin).args(["analyze", "2,1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty() && !bad.stderr.is_empty());
    let usage = Command::new(bin).args(["bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
