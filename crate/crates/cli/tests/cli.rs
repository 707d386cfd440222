use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn trimulti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trimulti"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn realize_three_vertices_json() {
    let o = trimulti(&["realize", "4,4,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["certificate"]["branch"], "SmallN3");
    assert_eq!(v["verified"], true);
}

#[test]
fn realize_odd_sum_is_rejected() {
    let o = trimulti(&["realize", "13,4,4,4"]);
    assert_eq!(o.status.code(), Some(2));
    let v = stdout_json(&o);
    assert_eq!(v["status"], "not_realizable");
    assert_eq!(v["reason"], "parity");
    assert!(!o.stderr.is_empty());
}

#[test]
fn realize_k5_as_dot() {
    let o = trimulti(&["realize", "4,4,4,4,4", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    let edges: Vec<&str> = text.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(edges.len(), 6);
    let total: u64 = edges
        .iter()
        .map(|l| {
            let m = l.split("[m=").nth(1).unwrap();
            m.trim_end_matches("];").parse::<u64>().unwrap()
        })
        .sum();
    assert_eq!(total, 10);
}

#[test]
fn realize_tsv_keeps_input_order() {
    let o = trimulti(&["realize", "4,6,4,4", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let mut deg = [0u64; 5];
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let f: Vec<u64> = line.split('\t').map(|x| x.parse().unwrap()).collect();
        deg[f[0] as usize] += f[2];
        deg[f[1] as usize] += f[2];
    }
    assert_eq!(&deg[1..], &[4, 6, 4, 4]);
}

#[test]
fn check_erdos_gallai_accepts_k4() {
    let o = trimulti(&["check", "3,3,3,3", "--erdos-gallai"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["report"]["erdos_gallai_ok"], true);
}

#[test]
fn check_erdos_gallai_reports_failing_k() {
    let o = trimulti(&["check", "3,3,1,1", "--erdos-gallai"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["report"]["failing_k"], 2);
}

#[test]
fn check_erdos_gallai_ignores_zeros() {
    let o = trimulti(&["check", "2,2,2,0,0", "--erdos-gallai"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_reports_d1_bound() {
    let o = trimulti(&["check", "10,4,4,4"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["reason"], "d1_bound");
}

#[test]
fn oracle_finds_k4() {
    let o = trimulti(&["oracle", "3,3,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["exists"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_census_csv() {
    let o = trimulti(&["oracle", "--census", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,exists,nodes_explored");
    let exists: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(exists, ["false", "true", "false", "false", "false", "true"]);
}

#[test]
fn oracle_census_beyond_limit() {
    assert_eq!(
        trimulti(&["oracle", "--census", "9"]).status.code(),
        Some(3)
    );
}

#[test]
fn oracle_too_many_vertices() {
    let o = trimulti(&["oracle", "4,4,4,4,4,4,4,4,4,4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_limits_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_trimulti"))
        .args(["oracle", "4,4,4,4"])
        .env("TRIMULTI_ORACLE_MAX_SUM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oracle_simple_mode() {
    let o = trimulti(&["oracle", "--simple", "3,3,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["exists"], false);
}

#[test]
fn usage_errors() {
    assert_eq!(trimulti(&[]).status.code(), Some(1));
    assert_eq!(trimulti(&["realize"]).status.code(), Some(1));
    assert_eq!(trimulti(&["realize", "4,x,4"]).status.code(), Some(1));
    assert_eq!(trimulti(&["realize", "4,-4,4"]).status.code(), Some(1));
    assert_eq!(trimulti(&["--help"]).status.code(), Some(0));
}

#[test]
fn batch_file_preserves_order() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# comment").unwrap();
    writeln!(f, "4,4,4").unwrap();
    writeln!(f, "13,4,4,4").unwrap();
    writeln!(f).unwrap();
    writeln!(f, "6 4 4 4").unwrap();
    let o = trimulti(&["realize", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let text = String::from_utf8(o.stdout).unwrap();
    let docs: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0]["certificate"]["branch"], "SmallN3");
    assert_eq!(docs[1]["status"], "not_realizable");
    assert_eq!(docs[2]["certificate"]["branch"], "FanEvenK1");
}

#[test]
fn generate_then_verify() {
    let o = trimulti(&["generate", "--seed", "7", "--count", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let mut input = tempfile::NamedTempFile::new().unwrap();
    input.write_all(&o.stdout).unwrap();
    let r = trimulti(&["realize", input.path().to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    let mut docs = tempfile::NamedTempFile::new().unwrap();
    docs.write_all(&r.stdout).unwrap();
    let v = trimulti(&["verify", docs.path().to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(String::from_utf8(v.stdout).unwrap().lines().count(), 5);
}

#[test]
fn verify_detects_tampering() {
    let r = trimulti(&["realize", "6,4,4,4,4,4"]);
    let mut doc = stdout_json(&r);
    doc["edges"][0][2] = Value::from(doc["edges"][0][2].as_u64().unwrap() + 1);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(doc.to_string().as_bytes()).unwrap();
    let v = trimulti(&["verify", f.path().to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(2));
}

#[test]
fn bench_reports_json() {
    let o = trimulti(&["bench", "--n", "100", "--trials", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["n"], 100);
    assert!(v["max_edges"].as_u64().unwrap() <= 201);
    assert_eq!(
        trimulti(&["bench", "--n", "100", "--trials", "0"])
            .status
            .code(),
        Some(1)
    );
}
