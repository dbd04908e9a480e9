use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn certdom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_certdom"))
        .args(args)
        .env_remove("CERTDOM_JOBS")
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

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn family(spec: &str) -> String {
    let o = certdom(&["family", spec], "");
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn solve_k2_from_graph6() {
    let o = certdom(&["solve", "--param", "gamma-cer"], "A_\n");
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert_eq!(v["result"]["value"], 2);
    assert_eq!(v["result"]["certificate"], serde_json::json!([0, 1]));
}

#[test]
fn family_pipes_into_solve() {
    let g6 = family("wheel 8");
    let o = certdom(&["solve", "--param", "gamma-cer"], &g6);
    assert_eq!(json_lines(&o)[0]["result"]["value"], 1);

    let o = certdom(&["solve", "--param", "gamma", "--human"], &family("cycle 9"));
    assert!(stdout(&o).starts_with("gamma = 3\n"));
}

#[test]
fn edge_list_input_and_emit() {
    let o = certdom(&["family", "path 4", "--emit", "edgelist"], "");
    assert_eq!(stdout(&o), "n 4\n0 1\n1 2\n2 3\n");
    let o = certdom(&["solve", "-"], &stdout(&o));
    assert_eq!(json_lines(&o)[0]["result"]["value"], 4);
    let o = certdom(&["--format", "graph6", "solve"], "n 4\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn solve_from_file_with_options() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c40.g6");
    std::fs::write(&path, family("cycle 40")).unwrap();
    let p = path.to_str().unwrap();
    let o = certdom(&["solve", p, "--no-closed-forms", "--node-limit", "3"], "");
    let r = &json_lines(&o)[0]["result"];
    assert_eq!(r["proven"], false);
    let o = certdom(&["solve", p, "--no-reductions"], "");
    assert_eq!(json_lines(&o)[0]["result"]["value"], 14);
}

#[test]
fn verify_reports_statuses() {
    let o = certdom(
        &["verify", "--set", "0,1", "--predicate", "certified"],
        &family("bipartite 2 2"),
    );
    let v = &json_lines(&o)[0];
    assert_eq!(v["holds"], true);
    assert_eq!(v["statuses"][0], "illuminated");
    let o = certdom(
        &["verify", "--set", "0,2", "--predicate", "certified"],
        &family("bipartite 2 2"),
    );
    assert_eq!(json_lines(&o)[0]["holds"], false);
    let o = certdom(&["verify", "--set", "0,9", "--predicate", "dominating"], "A_\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_reports() {
    let o = certdom(&["analyze", "--report", "bounds"], &family("path 7"));
    let v = &json_lines(&o)[0];
    assert_eq!((v["gamma"].as_u64(), v["gamma_cer"].as_u64()), (Some(3), Some(3)));
    assert_eq!(o.status.code(), Some(0));

    let o = certdom(&["analyze", "--report", "edges", "--additions"], &family("fig3b 2"));
    let lines = json_lines(&o);
    assert!(lines[..lines.len() - 1].iter().any(|r| r["bound"] == "not-applicable"));
    assert_eq!(lines.last().unwrap()["violations"], 0);

    let o = certdom(
        &["analyze", "--report", "edges", "--delete-edge", "0,3"],
        &family("fig3a 2"),
    );
    assert_eq!(json_lines(&o)[0]["new_value"], 8);

    let o = certdom(
        &["analyze", "--report", "vertices", "--add-vertex", "0"],
        &family("fig4 3"),
    );
    let r = &json_lines(&o)[0];
    assert_eq!(
        (r["new_value"].as_u64(), r["bound"].as_str()),
        (Some(8), Some("no-claim"))
    );
}

#[test]
fn analyze_ng_order_four() {
    // K4: both values at the (3, 2) corner of the table.
    let o = certdom(&["analyze", "--report", "ng"], &family("complete 4"));
    let v = &json_lines(&o)[0];
    assert_eq!((v["sum"].as_u64(), v["product"].as_u64()), (Some(5), Some(4)));
    assert_eq!(o.status.code(), Some(0));
    // C4 gives (6, 8), which the published table omits.
    let o = certdom(&["analyze", "--report", "ng"], &family("cycle 4"));
    let v = &json_lines(&o)[0];
    assert_eq!((v["sum"].as_u64(), v["product"].as_u64()), (Some(6), Some(8)));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dd2_pairs() {
    let o = certdom(&["dd2", "--max-d", "6"], &family("fig1 3"));
    assert_eq!(json_lines(&o)[0]["pair"], Value::Null);
    let o = certdom(&["dd2"], &family("fig1 3"));
    assert_eq!(json_lines(&o)[0]["pair"]["d"].as_array().unwrap().len(), 7);
    let o = certdom(&["dd2", "--human"], "A_\n");
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["solve", "/nonexistent/graph.g6"][..],
        &["analyze", "--report", "edges", "--additions", "--delete-edge", "0,1"],
        &["analyze", "--report", "ng", "--additions"],
        &["verify", "--set", "0"],
        &["family", "wheel 2"],
        &["suite", "--n-max", "8"],
        &["suite", "--claims", "OBS9.9"],
        &["frobnicate"],
    ] {
        let o = certdom(args, "A_\n");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(certdom(&["solve"], "").status.code(), Some(2));
}

#[test]
fn suite_passing_claims() {
    let o = certdom(&["suite", "--n-max", "3", "--claims", "OBS2.6"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1 + 1 + 2 + 8 + 1);
    assert_eq!(lines.last().unwrap()["summary"]["graphs"], 12);
}

#[test]
fn suite_is_deterministic_and_reports_failures() {
    let run = |jobs: &str| certdom(&["suite", "--n-max", "5", "--jobs", jobs, "--failures-only"], "");
    let (one, four) = (run("1"), run("4"));
    assert_eq!(one.status.code(), Some(1));
    assert_eq!(stdout(&one), stdout(&four));
    assert_eq!(one.stderr, four.stderr);
    let lines = json_lines(&one);
    let summary = &lines.last().unwrap()["summary"];
    let failed: Vec<&str> = summary["claims"]
        .as_object()
        .unwrap()
        .iter()
        .filter(|(_, t)| t["failed"] != 0)
        .map(|(k, _)| k.as_str())
        .collect();
    assert_eq!(failed, ["COR4.4", "LEM4.3", "OBS7.2"]);
    assert!(String::from_utf8_lossy(&one.stderr).contains("FAIL LEM4.3 Ck"));
}

#[test]
fn suite_jobs_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_certdom"))
        .args(["suite", "--n-max", "3", "--claims", "THM3.3"])
        .env("CERTDOM_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn suite_batch_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.g6");
    std::fs::write(
        &path,
        format!("{}{}{}", family("cycle 5"), family("wheel 6"), family("fig4 2")),
    )
    .unwrap();
    let o = certdom(&["suite", "--graph6-file", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json_lines(&o).len(), 4);

    std::fs::write(&path, "D?{\nDQc\nD!!\n").unwrap();
    let o = certdom(&["suite", "--graph6-file", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}
