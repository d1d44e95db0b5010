//! The subcommands compose: each command's JSON output is accepted by
//! its downstream consumers, and exit codes follow the documented
//! contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn nbhc(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nbhc"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_complex_homology_pipeline() {
    let graph = stdout_of(&nbhc(&["gen", "complete", "4"], None));
    let complex = stdout_of(&nbhc(&["complex", "closed-nbhd", "-k", "1"], Some(&graph)));
    let homology = stdout_of(&nbhc(&["homology"], Some(&complex)));
    let parsed: serde_json::Value = serde_json::from_str(&homology).unwrap();
    assert_eq!(parsed["dims"], serde_json::json!({}));

    let graph = stdout_of(&nbhc(&["gen", "cycle", "5"], None));
    let complex = stdout_of(&nbhc(&["complex", "closed-nbhd", "-k", "1"], Some(&graph)));
    let homology = stdout_of(&nbhc(&["homology"], Some(&complex)));
    let parsed: serde_json::Value = serde_json::from_str(&homology).unwrap();
    assert_eq!(parsed["dims"]["1"]["betti"], 1);
}

#[test]
fn dual_round_trips_through_json() {
    let graph = stdout_of(&nbhc(&["gen", "cycle", "4"], None));
    let complex = stdout_of(&nbhc(&["complex", "independence"], Some(&graph)));
    let dual = stdout_of(&nbhc(&["dual"], Some(&complex)));
    let dual_dual = stdout_of(&nbhc(&["dual"], Some(&dual)));
    let a: serde_json::Value = serde_json::from_str(&complex).unwrap();
    let b: serde_json::Value = serde_json::from_str(&dual_dual).unwrap();
    assert_eq!(a, b);
}

#[test]
fn metric_cech_pipeline() {
    let metric = stdout_of(&nbhc(&["metric", "circle", "-n", "6"], None));
    let complex = stdout_of(&nbhc(&["cech", "--closed", "-r", "1/6"], Some(&metric)));
    let homology = stdout_of(&nbhc(&["homology"], Some(&complex)));
    let parsed: serde_json::Value = serde_json::from_str(&homology).unwrap();
    assert_eq!(parsed["dims"]["1"]["betti"], 1);
}

#[test]
fn pi1_pipeline() {
    let graph = stdout_of(&nbhc(&["gen", "cycle", "5"], None));
    let complex = stdout_of(&nbhc(&["complex", "closed-nbhd"], Some(&graph)));
    let pres = stdout_of(&nbhc(&["pi1", "--base", "0"], Some(&complex)));
    let parsed: serde_json::Value = serde_json::from_str(&pres).unwrap();
    assert!(parsed["generators"].as_u64().unwrap() >= 1);
}

#[test]
fn digraph_complexes() {
    let digraph = stdout_of(&nbhc(&["gen", "x1"], None));
    let right = stdout_of(&nbhc(&["complex", "right-closed-nbhd", "-k", "1"], Some(&digraph)));
    let parsed: serde_json::Value = serde_json::from_str(&right).unwrap();
    assert_eq!(parsed["facets"], serde_json::json!([[0, 1], [1, 2]]));
}

#[test]
fn verify_reports_are_reproducible() {
    let a = nbhc(&["verify", "wedge-k2kn", "--seed", "3", "--cases", "5"], None);
    let b = nbhc(&["verify", "wedge-k2kn", "--seed", "3", "--cases", "5"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn kpath_equiv_exit_codes() {
    let dir = std::env::temp_dir().join(format!("nbhc-kpath-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("k3.json");
    let graph = stdout_of(&nbhc(&["gen", "complete", "3"], None));
    std::fs::write(&graph_path, &graph).unwrap();
    let gp = graph_path.to_str().unwrap();

    let out = nbhc(
        &["kpath-equiv", "--graph", gp, "-k", "2", "--loop", "0,1,2,0", "--loop2", "0"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let witness: Vec<Vec<u32>> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(witness.first().unwrap(), &[0, 1, 2, 0]);
    assert_eq!(witness.last().unwrap(), &[0]);

    let c5_path = dir.join("c5.json");
    let c5 = stdout_of(&nbhc(&["gen", "cycle", "5"], None));
    std::fs::write(&c5_path, &c5).unwrap();
    let out = nbhc(
        &[
            "kpath-equiv",
            "--graph",
            c5_path.to_str().unwrap(),
            "-k",
            "2",
            "--loop",
            "0,1,2,3,4,0",
            "--loop2",
            "0",
            "--max-len",
            "7",
            "--max-states",
            "30000",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_input_exits_3() {
    let out = nbhc(&["complex", "closed-nbhd"], Some("{\"nope\": 1}"));
    assert_eq!(out.status.code(), Some(3));
    let out = nbhc(&["verify", "no-such-suite"], None);
    assert_eq!(out.status.code(), Some(3));
}
