use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn effectors(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effectors")).args(args).output().expect("binary runs")
}

/// Runs a command expected to print JSON, checking its exit code.
fn json_of(args: &[&str], code: i32) -> Value {
    let out = effectors(args);
    assert_eq!(out.status.code(), Some(code), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_instance(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

fn example() -> String {
    data("example.json").to_str().unwrap().to_string()
}

fn star() -> String {
    data("star.json").to_str().unwrap().to_string()
}

#[test]
fn validate_reports_parameters() {
    let v = json_of(&["validate", &example()], 0);
    assert_eq!(v["summary"], "n=4 m=6 r=5, not a DAG");
    assert_eq!(v["dag"], false);
    assert_eq!(v["a"], 3);
    assert_eq!(v["algorithms"]["xp-b"]["applicable"], false);
}

#[test]
fn validate_deterministic_dag() {
    let v = json_of(&["validate", &star()], 0);
    assert_eq!(v["dag"], true);
    assert_eq!(v["r"], 0);
    for alg in ["xp-b", "xp-c", "brute-force"] {
        assert_eq!(v["algorithms"][alg]["applicable"], true, "{alg}");
    }
    assert_eq!(v["algorithms"]["influence-max"]["applicable"], false);
}

#[test]
fn malformed_json_points_at_the_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_instance(dir.path(), "bad.json", "{\"nodes\": [\"a\",\n  }");
    let out = effectors(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn validate_dot_export() {
    let out = effectors(&["validate", &example(), "--format", "dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn cost_of_the_hub() {
    let v = json_of(&["cost", &star(), "--effectors", "u"], 0);
    assert_eq!(v["total"], "1");
    let v = json_of(&["cost", &star(), "--effectors", ""], 0);
    assert_eq!(v["total"], "3");
}

#[test]
fn exact_and_live_edge_totals_agree() {
    let exact = json_of(&["cost", &example(), "--effectors", "v1"], 0);
    let live = json_of(&["cost", &example(), "--effectors", "v1", "--method", "live-edge"], 0);
    assert_eq!(exact["total"], live["total"]);
    assert_eq!(exact["probabilities"], live["probabilities"]);
    assert_eq!(exact["probabilities"]["v4"], "837/1000");
}

#[test]
fn monte_carlo_is_reproducible() {
    let args = ["cost", &example(), "--effectors", "v1", "--method", "montecarlo", "--samples", "2000", "--seed", "9"];
    let a = effectors(&args);
    let b = effectors(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["samples"], 2000);
}

#[test]
fn cost_errors_have_exit_codes() {
    assert_eq!(effectors(&["cost", &example(), "--effectors", "nope"]).status.code(), Some(2));
    assert_eq!(effectors(&["cost", &example(), "--effectors", "v1", "--max-r", "2"]).status.code(), Some(3));
    assert_eq!(effectors(&["cost", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(effectors(&["cost", &example(), "--method", "guess"]).status.code(), Some(2));
}

#[test]
fn solve_star_yes() {
    let v = json_of(&["solve", &star()], 0);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["effectors"], serde_json::json!(["u"]));
    assert_eq!(v["cost"], "1");
    assert!(["xp-b", "xp-c"].contains(&v["algorithm"].as_str().unwrap()));
}

#[test]
fn solve_dispatch_and_no_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write_instance(
        dir.path(),
        "zero.json",
        r#"{"nodes":["u","t1","t2"],"arcs":[{"from":"u","to":"t1","weight":"1"},{"from":"u","to":"t2","weight":"1"}],
            "targets":["t1","t2"],"budget":1,"cost_bound":"0"}"#,
    );
    let v = json_of(&["solve", &zero], 1);
    assert_eq!(v["algorithm"], "zero-cost");
    assert_eq!(v["decision"], "no");

    let unlimited = write_instance(
        dir.path(),
        "inf.json",
        r#"{"nodes":["a","b"],"arcs":[{"from":"a","to":"b","weight":"1/2"}],"targets":["b"],"budget":"infinite"}"#,
    );
    let v = json_of(&["solve", &unlimited], 0);
    assert_eq!(v["algorithm"], "infinite-budget");
    assert_eq!(v["effectors"], serde_json::json!(["b"]));
    assert_eq!(v["decision"], Value::Null);
}

#[test]
fn solve_rejects_inapplicable_algorithm() {
    let out = effectors(&["solve", &example(), "--algorithm", "xp-b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("deterministic"));
    assert_eq!(effectors(&["solve", &example(), "--algorithm", "magic"]).status.code(), Some(2));
}

#[test]
fn solve_resource_limit_suggests_monte_carlo() {
    let out = effectors(&["solve", &example(), "--max-bruteforce-nodes", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("montecarlo"));
}

#[test]
fn solve_cost_matches_cost_command() {
    for instance in [example(), star()] {
        let out = effectors(&["solve", &instance]);
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let labels: Vec<&str> = v["effectors"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
        let c = json_of(&["cost", &instance, "--effectors", &labels.join(",")], 0);
        assert_eq!(v["cost"], c["total"]);
    }
}

#[test]
fn simulate_reproduces_a_known_run() {
    let v = json_of(&["simulate", &example(), "--effectors", "v1", "--seed", "56"], 0);
    let run = &v["runs"][0];
    assert_eq!(run["probability"], "27/1000");
    assert_eq!(run["rounds"], serde_json::json!([["v1"], ["v2"], ["v4"]]));
}

#[test]
fn simulate_deterministic_graph_and_repeatability() {
    let v = json_of(&["simulate", &star(), "--effectors", "u", "--runs", "3"], 0);
    for run in v["runs"].as_array().unwrap() {
        assert_eq!(run["probability"], "1");
        assert_eq!(run["rounds"], serde_json::json!([["u"], ["t1", "t2", "t3"]]));
    }
    let args = ["simulate", &example(), "--effectors", "v1", "--runs", "5", "--seed", "4"];
    assert_eq!(effectors(&args).stdout, effectors(&args).stdout);
}

#[test]
fn generate_mcc_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mcc.json");
    let out = out.to_str().unwrap();
    let v = json_of(
        &["generate", "mcc", "--edges", "x-y,y-z,x-z", "--colors", "x=1,y=2,z=3", "--k", "3", "--out", out],
        0,
    );
    assert_eq!((v["n"].as_u64(), v["b"].as_u64(), v["c"].as_str()), (Some(27), Some(3), Some("6")));
    let check = json_of(&["validate", out], 0);
    assert_eq!(check["n"], 27);
    assert_eq!(check["r"], 0);
}

#[test]
fn generate_other_families() {
    let v = json_of(&["generate", "random", "--nodes", "10", "--prob-fraction", "0", "--out", "/dev/null"], 0);
    assert_eq!(v["r"], 0);
    let v = json_of(&["generate", "setcover", "--sets", "u1", "--h", "1", "--out", "/dev/null"], 0);
    assert_eq!(v["n"], 2);
    let v = json_of(&["generate", "stcon", "--arcs", "s>a,a>t,s>t", "--s", "s", "--t", "t", "--z", "3", "--out", "/dev/null"], 0);
    assert_eq!(v["p_z_prime"], "3/8");
    assert_eq!(v["b"], "infinite");
    let v = json_of(&["generate", "domset", "--edges", "a-b", "--k", "1", "--out", "/dev/null"], 0);
    assert_eq!(v["a"], 4);
    let v = json_of(&["generate", "indepset", "--edges", "a-b,b-c", "--k", "2", "--out", "/dev/null"], 0);
    assert_eq!(v["b"], 1);
}

#[test]
fn generate_to_stdout_is_seeded() {
    let args = ["generate", "random", "--nodes", "7", "--seed", "11"];
    let a = effectors(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, effectors(&args).stdout);
    assert_ne!(a.stdout, effectors(&["generate", "random", "--nodes", "7", "--seed", "12"]).stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("\"nodes\""));
}

#[test]
fn generate_rejects_bad_parameters() {
    for args in [
        &["generate", "mcc", "--edges", "x-y", "--colors", "x=1", "--k", "2"][..],
        &["generate", "indepset", "--edges", "a-b", "--k", "5"],
        &["generate", "random", "--arc-density", "2"],
        &["generate", "stcon", "--arcs", "s>t", "--s", "s", "--t", "t", "--z", "2"],
        &["generate", "setcover", "--sets", "u1", "--h", "2"],
        &["generate", "domset", "--edges", "a", "--k", "1"],
    ] {
        assert_eq!(effectors(args).status.code(), Some(2), "{args:?}");
    }
}
