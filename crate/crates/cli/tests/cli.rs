use std::io::Write;
use std::process::{Command, Output, Stdio};

fn latmult(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latmult"))
        .args(args)
        .env_remove("LATMULT_GUARD_OVERRIDE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn mult_worked_example() {
    let o = latmult(&["mult", "--n", "10", "--k", "4", "--ell", "5"], "");
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["multiplicity"], "119");
    assert_eq!(v["gamma"], serde_json::json!([5, 4, 3, 2, 1, 0, 1, 2, 3, 4]));
    let o = latmult(&["mult", "--n", "9", "--k", "4", "--ell", "5"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("floor(n/2)"));
}

#[test]
fn counts() {
    let o = latmult(&["count", "avoiders", "--ell", "3", "--k", "2", "--method", "brute"], "");
    assert_eq!(stdout(&o), "5\n");
    let o = latmult(&["count", "paths", "--ell", "5", "--k", "4", "--method", "brute"], "");
    assert_eq!(stdout(&o), "119\n");
    let o = latmult(&["count", "self-conjugate", "--ell", "5", "--k", "4", "--method", "formula"], "");
    assert_eq!(stdout(&o), "25\n");
    let o = latmult(&["count", "tableaux", "--ell", "4", "--max-height", "2", "--format", "json"], "");
    assert_eq!(json(&o)["count"], "6");
    let o = latmult(&["count", "avoiders", "--ell", "30", "--k", "3", "--method", "formula", "--format", "json"], "");
    let c = json(&o)["count"].as_str().unwrap().to_string();
    assert!(c.len() > 20, "{c}");
}

#[test]
fn per_shape_and_types_tsv() {
    let o = latmult(&["count", "tableaux", "--ell", "5", "--max-height", "4", "--per-shape"], "");
    let out = stdout(&o);
    assert!(out.starts_with("lambda\tf\n(5)\t1\n(4,1)\t4\n(3,2)\t5\n(3,1,1)\t6\n(2,2,1)\t5\n(2,1,1,1)\t4\n"));
    let o = latmult(&["count", "types", "--ell", "4", "--k", "3"], "");
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lambda\tf\tf_squared\tbrute_admissible\tbrute_self_conjugate"));
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[2], cols[3], "{line}");
        assert_eq!(cols[1], cols[4], "{line}");
    }
}

#[test]
fn sigma_and_tau_roundtrip_through_json() {
    let o = latmult(&["map", "sigma", "--halves"], r#"["RURRUR","RUURUR","RUURUU"]"#);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "[[1,4],[2,5],[3],[6]]\n");
    let o = latmult(&["map", "tau"], "[[1,4],[2,5],[3],[6]]");
    let seq = stdout(&o);
    assert_eq!(json(&o)["k"], 4);
    let o = latmult(&["map", "sigma"], &seq);
    assert_eq!(stdout(&o), "[[1,4],[2,5],[3],[6]]\n");
    let o = latmult(&["map", "tau", "--k", "5", "--format", "tsv"], "[[1,2],[3]]");
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn input_errors() {
    let o = latmult(&["map", "sigma"], "{\"ell\": 3,\n \"k\": ");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = latmult(&["map", "sigma"], r#"["RURRUU"]"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not self-conjugate"));
    let o = latmult(&["map", "tau", "--k", "2"], "[[1],[2],[3]]");
    assert_eq!(o.status.code(), Some(2));
    let o = latmult(&["count", "paths", "--ell", "3", "--k", "2", "--method", "brute", "--bogus"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("latmult verify --ell-max L --k-max K"));
}

#[test]
fn guards() {
    let args = ["count", "paths", "--ell", "7", "--k", "2", "--method", "brute"];
    let o = latmult(&args, "");
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("--allow-large"));
    let mut large = args.to_vec();
    large.push("--allow-large");
    let o = latmult(&large, "");
    assert_eq!(stdout(&o), "429\n");
    let o = Command::new(env!("CARGO_BIN_EXE_latmult"))
        .args(args)
        .env("LATMULT_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "429\n");
}

#[test]
fn perm_commands() {
    let o = latmult(&["perm", "lds", "26873415"], "");
    assert_eq!(stdout(&o), "4\n");
    let o = latmult(&["perm", "rsk", "[2,6,8,7,3,4,1,5]", "--format", "json"], "");
    let v = json(&o);
    assert_eq!(v["p"], serde_json::json!([[1, 3, 4, 5], [2, 7], [6], [8]]));
    assert_eq!(v["shape"], serde_json::json!([4, 2, 1, 1]));
    let o = latmult(&["perm", "lds", "1223"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = latmult(&["verify", "--ell-max", "3", "--k-max", "3"], "");
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("# 57/57 checks passed\n"));
    let o = latmult(&["verify", "--ell-max", "2", "--k-max", "2", "--format", "json"], "");
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2 + 2 * 9);
}
