use std::process::{Command, Output};

fn pebble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebble"))
        .args(args)
        .output()
        .expect("run pebble")
}

fn stdout(args: &[&str]) -> String {
    let out = pebble(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn value_and_count() {
    assert_eq!(stdout(&["value", "--graph", "named:pentane"]), "6\n");
    assert_eq!(stdout(&["count", "--graph", "path:2"]), "3\n");
    assert_eq!(
        stdout(&["value", "--graph", "path:4", "--t", "unbounded"]),
        "3\n"
    );
}

#[test]
fn solve_json_lists_witnesses() {
    let text = stdout(&["solve", "--graph", "path:3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["count"], 1);
    assert_eq!(v["witnesses"], serde_json::json!([[0, 2, 0]]));
}

#[test]
fn graph6_and_edge_list_inputs() {
    let dir = std::env::temp_dir().join(format!("pebble-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("p3.txt");
    std::fs::write(&edges, "3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(
        stdout(&["count", "--graph", edges.to_str().unwrap()]),
        "1\n"
    );
    // graph6 for the path on three vertices
    assert_eq!(stdout(&["count", "--graph", "Bg"]), "1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_prints_a_certificate() {
    let text = stdout(&[
        "verify", "--graph", "path:3", "--config", "0,2,0", "--target", "0",
    ]);
    assert_eq!(text, "solvable\ntarget 0: 1->0\n");
    let text = stdout(&["verify", "--graph", "path:3", "--config", "1,0,1"]);
    assert!(text.starts_with("unsolvable\nunreachable: 1\n"));
}

#[test]
fn bounds_and_symmetry() {
    let text = stdout(&["bounds", "--graph", "path:4"]);
    assert!(text.contains("gamma: 2\n") && text.contains("gamma_R: 3\n"));
    let text = stdout(&["sym", "--graph", "star:3"]);
    assert!(text.starts_with("order: 6\n") && text.contains("D: 3\n"));
}

#[test]
fn reproduce_is_identical_across_thread_counts() {
    for format in ["json", "csv"] {
        let runs: Vec<String> = ["1", "2", "8"]
            .iter()
            .map(|t| stdout(&["reproduce", "--format", format, "--threads", t]))
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0], runs[2]);
    }
    let csv = stdout(&["reproduce", "--suite", "alkanes", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 9);
    assert!(csv
        .lines()
        .any(|l| l.starts_with("alkanes,isopentane,") && l.ends_with(",14,5,9,mismatch")));
}

#[test]
fn exit_codes() {
    assert_eq!(
        pebble(&["value", "--graph", "bogus:3"]).status.code(),
        Some(1)
    );
    assert_eq!(pebble(&["value"]).status.code(), Some(1));
    assert_eq!(
        pebble(&["value", "--graph", "path:3", "--t", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(pebble(&["--help"]).status.code(), Some(0));
    assert_eq!(pebble(&["--version"]).status.code(), Some(0));
    let out = pebble(&["value", "--graph", "path:30", "--max-nodes", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
