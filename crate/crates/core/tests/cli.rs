use std::path::PathBuf;
use std::process::Command;

use blcalc::cli::run_args;
use serde_json::Value;

fn bin(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_blcalc")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not json ({e}): {s}"))
}

/// Re-serializing through a sorted map reproduces the text only when the
/// keys were already sorted.
fn assert_sorted_keys(s: &str) {
    let v = json(s);
    assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), s);
    assert_eq!(v["schema"], "blcalc/1");
}

fn tmp(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

const GOEDEL3: &str = r#"{"size":3,"mul":[[0,0,0],[0,1,1],[0,1,2]],"imp":[[2,2,2],[0,2,2],[0,1,2]]}"#;

#[test]
fn binary_evaluates_and_decomposes() {
    let (out, _, code) = bin(&["chain", "eval", "L2", "--op", "mul", "--x", "0:1", "--y", "0:1"]);
    assert_eq!((out.trim(), code), ("0:0", 0));
    let (out, _, code) = bin(&["chain", "eval", "L1+Z", "--op", "imp", "--x", "1:-3", "--y", "1:-5"]);
    assert_eq!((out.trim(), code), ("1:-2", 0));

    let path = tmp("goedel3.json", GOEDEL3);
    let (out, _, code) = bin(&["chain", "decompose", "--table", &path]);
    assert_eq!(code, 0);
    assert_sorted_keys(&out);
    assert_eq!(json(&out)["chain"], "W1+W1");
}

#[test]
fn flatten_then_decompose_round_trips() {
    let flat = run_args(&["chain", "flatten", "L2+W1+W3"]);
    assert_eq!(flat.code, 0);
    assert_sorted_keys(&flat.stdout);
    let path = tmp("l2w1w3.json", &flat.stdout);
    let dec = run_args(&["chain", "decompose", "--table", &path]);
    assert_eq!(json(&dec.stdout)["chain"], "L2+W1+W3");
}

#[test]
fn checking_a_broken_table_answers_no() {
    let broken = r#"{"size":3,"mul":[[0,0,0],[0,0,1],[0,1,2]],"imp":[[2,2,2],[0,2,2],[0,1,2]]}"#;
    let path = tmp("broken.json", broken);
    let (out, _, code) = bin(&["chain", "check", "--table", &path]);
    assert_eq!(code, 1);
    assert_sorted_keys(&out);
    let (_, _, code) = bin(&["chain", "check", "Wo2+Z"]);
    assert_eq!(code, 0);
}

#[test]
fn amalgam_answers() {
    let none =
        run_args(&["amalgam", "search", "--apex", "T", "--left", "W1", "--right", "Z", "--universe", "[W1]|[Z]"]);
    assert_eq!(none.code, 1);
    let v = json(&none.stdout);
    assert_eq!(v["result"], "none within bounds");
    assert_eq!(v["exhaustive"], true);

    let one =
        run_args(&["amalgam", "one-sided", "--apex", "T", "--left", "W1", "--right", "Z", "--universe", "[W1]|[Z]"]);
    assert_eq!(one.code, 0);
    assert_eq!(json(&one.stdout)["one_sided"], true);

    let (out, _, code) =
        bin(&["amalgam", "search", "--apex", "W1", "--left", "W2", "--right", "W3", "--universe", "[U]"]);
    assert_eq!(code, 0);
    assert_sorted_keys(&out);
    assert_eq!(json(&out)["target"], "W6");
}

#[test]
fn classification_exit_codes() {
    for (mode, class, code) in [
        ("bl", "[L1 W1*]", 0),
        ("bl", "[L1 Z]", 0),
        ("bl", "[UM]", 0),
        ("bl", "[L1 W1 W1]", 1),
        ("bh", "[W1* Z]", 0),
        ("mv", "[L3]|[L1]", 0),
        ("mv", "[L3]|[L2]", 1),
    ] {
        let out = run_args(&["classify", mode, "--class", class]);
        assert_eq!(out.code, code, "{mode} {class}: {}", out.stdout);
        assert_sorted_keys(&out.stdout);
    }
    let (out, _, code) = bin(&["classify", "bh", "--gens", "W1+W1"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["ap"], false);
}

#[test]
fn poset_and_catalog_output() {
    let dot = run_args(&["poset", "--interval", "I(W1,Z)"]);
    assert_eq!(dot.code, 0);
    assert!(dot.stdout.starts_with("digraph \"I(W1,Z)\" {"));
    assert_eq!(dot.stdout.matches("->").count(), 22);
    let js = run_args(&["poset", "--name", "wo", "--params", "2", "--format", "json"]);
    assert_eq!(json(&js.stdout)["nodes"].as_array().unwrap().len(), 3);

    let cat = run_args(&["catalog", "--mode", "bh", "--n-max", "3"]);
    assert_eq!(cat.code, 0);
    assert_eq!(json(&cat.stdout)["count"], 59);
}

#[test]
fn logic_commands() {
    let out = run_args(&["logic", "interpolate", "--premise", "p * q", "--conclusion", "q \\/ r", "--gens", "L2"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out.stdout)["interpolant"], "q");

    let goedel = ["--gens", "L1+W1+W1"];
    let mut args = vec!["logic", "interpolate", "--premise", "((q /\\ p) -> q -> 0 \\/ q * q -> p) -> q"];
    args.extend(["--conclusion", "r -> q \\/ r"]);
    args.extend(goedel);
    let out = run_args(&args);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["interpolant"], Value::Null);

    let out = run_args(&["logic", "consequence", "--premise", "p", "--conclusion", "p * p", "--gens", "L2"]);
    assert_eq!(out.code, 0);
    let out = run_args(&["logic", "implies", "--premise", "p", "--conclusion", "p * p", "--gens", "L2"]);
    assert_eq!(out.code, 1);

    let (out, _, code) = bin(&["logic", "dip", "--gens", "L1+W1+W1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("deductive interpolation: no"));
    let (out, _, code) = bin(&["logic", "dip", "--class", "[L1 W1*]", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["deductive_interpolation"], true);
}

#[test]
fn input_errors_exit_with_two() {
    let (_, err, code) = bin(&["chain", "eval", "W1+", "--op", "mul", "--x", "0:1", "--y", "0:1"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error"));
    assert_eq!(bin(&["chain", "eval", "W2", "--op", "mul", "--x", "0:7", "--y", "top"]).2, 2);
    assert_eq!(bin(&["classify", "bh", "--class", "[W1"]).2, 2);
    assert_eq!(bin(&["frobnicate"]).2, 2);
    assert_eq!(bin(&["chain", "decompose", "--table", "/nonexistent/table.json"]).2, 2);
    let (out, _, code) = bin(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn output_is_deterministic() {
    let commands: [&[&str]; 4] = [
        &["catalog", "--mode", "bl", "--n-max", "1", "--m-max", "1"],
        &["amalgam", "construct", "--apex", "W1", "--left", "W2", "--right", "W3", "--universe", "[U]"],
        &["poset", "--interval", "I(W2,Z)", "--format", "json"],
        &["classify", "bh", "--gens", "W2+Z", "--gens", "W1"],
    ];
    for args in commands {
        let first = bin(args);
        assert_eq!(first, bin(args), "{args:?}");
        assert_eq!(first.0, run_args(args).stdout);
    }
}
