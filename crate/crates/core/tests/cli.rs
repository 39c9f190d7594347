use std::path::PathBuf;
use std::process::Command;

use implicit_series::algebra::LaurentPoly;
use implicit_series::cli::{run, Builtin, MethodChoice, Mode, RunConfig, Source, Status, TableFile};
use implicit_series::implicit::{expand_direct, CoeffTable};
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_implicit-series")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("implicit-series-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn y_of(stdout: &str) -> Vec<String> {
    let v: Value = serde_json::from_str(stdout).unwrap();
    v["y"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_owned()).collect()
}

#[test]
fn builtin_geometric_all_methods() {
    let (code, stdout, _) = bin(&["--builtin", "geometric", "-N", "6", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"order\":6,\"method\":\"all\",\"y\":[\"1\",\"2\",\"6\",\"24\",\"120\",\"720\"]}\n");
}

#[test]
fn file_input_and_out_flag() {
    let table = TableFile::from_table(&CoeffTable::lambert(5));
    let input = scratch("lambert.json");
    std::fs::write(&input, serde_json::to_string(&table).unwrap()).unwrap();
    let input = input.to_str().unwrap();

    let (code, stdout, _) = bin(&["--input", input, "--method", "newton"]);
    assert_eq!(code, 0);
    assert_eq!(y_of(&stdout), ["1", "-2", "9", "-64", "625"]);

    let out = scratch("result.json");
    let (code, stdout, _) = bin(&["--input", input, "-N", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(y_of(&std::fs::read_to_string(&out).unwrap()), ["1", "-2", "9"]);

    let (code, _, stderr) = bin(&["--input", input, "-N", "6"]);
    assert_eq!(code, 1, "{stderr}");
}

#[test]
fn malformed_files_exit_1() {
    let cases = [
        ("dup.json", r#"{"max_m":2,"max_n":2,"entries":[{"m":0,"n":1,"v":"1"},{"m":0,"n":1,"v":"1"}]}"#),
        ("oob.json", r#"{"max_m":2,"max_n":2,"entries":[{"m":0,"n":3,"v":"1"}]}"#),
        ("val.json", r#"{"max_m":2,"max_n":2,"entries":[{"m":0,"n":1,"v":"0.5"}]}"#),
        ("syntax.json", r#"{"max_m":2,"#),
    ];
    for (name, text) in cases {
        let path = scratch(name);
        std::fs::write(&path, text).unwrap();
        let (code, _, stderr) = bin(&["--input", path.to_str().unwrap()]);
        assert_eq!(code, 1, "{name}: {stderr}");
    }
    let (code, _, _) = bin(&["--input", scratch("missing.json").to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn not_expandable_file_exits_2() {
    let path = scratch("f00.json");
    std::fs::write(&path, r#"{"max_m":2,"max_n":2,"entries":[{"m":0,"n":0,"v":"1"},{"m":0,"n":1,"v":"1"}]}"#)
        .unwrap();
    let (code, _, stderr) = bin(&["--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("nonzero f[0,0]"));
}

#[test]
fn expression_errors() {
    assert_eq!(bin(&["--expr", "x+1", "-N", "3"]).0, 2);
    assert_eq!(bin(&["--expr", "y*", "-N", "3"]).0, 1);
    assert_eq!(bin(&["--expr", "y - x", "-N", "0"]).0, 1);
    assert_eq!(bin(&["--expr", "y - x"]).0, 1);
    assert_eq!(bin(&["--expr", "log(2 + y) - x", "-N", "2"]).0, 1);
    let (code, stdout, _) = bin(&["--expr", "-x + y", "-N", "2"]);
    assert_eq!(code, 0);
    assert_eq!(y_of(&stdout), ["1", "0"]);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(bin(&[]).0, 1);
    assert_eq!(bin(&["--bogus"]).0, 1);
    assert_eq!(bin(&["--builtin", "geometric", "--expr", "y", "-N", "2"]).0, 1);
    assert_eq!(bin(&["--mode", "symbolic", "--builtin", "lambert", "-N", "2"]).0, 1);
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn symbolic_output_decodes_to_the_expansion() {
    let (code, stdout, _) = bin(&["--mode", "symbolic", "-N", "3", "--method", "all", "--count-monomials"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let y: Vec<LaurentPoly> =
        v["y"].as_array().unwrap().iter().map(|p| LaurentPoly::from_json(p).unwrap()).collect();
    assert_eq!(y, expand_direct(&CoeffTable::symbolic(3), 3).unwrap().y);
    assert_eq!(v["monomials"], serde_json::json!([1, 3, 9]));
}

#[test]
fn output_is_deterministic() {
    let mut cfg = RunConfig::new(Source::None, 4);
    cfg.mode = Mode::Symbolic;
    cfg.method = MethodChoice::All;
    let first = run(&cfg);
    assert_eq!(first.status, Status::Success);
    assert_eq!(run(&cfg), first);
    let cfg = RunConfig::new(Source::Builtin(Builtin::Lambert), 7);
    assert_eq!(run(&cfg).stdout, run(&cfg).stdout);
}

#[test]
fn self_check_passes() {
    let (code, _, stderr) = bin(&["--check"]);
    assert_eq!(code, 0);
    assert_eq!(stderr.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}
