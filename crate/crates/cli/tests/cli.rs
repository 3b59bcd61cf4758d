use std::fs;
use std::process::{Command, Output};

const S3: &str = r#"{"family":"cyclic","m":2,"n":3,"a":2}"#;
const G1155: &str = r#"{"family":"cyclic","m":15,"n":77,"a":4}"#;

fn ddgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddgraph"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("failed to spawn ddgraph")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn moore_prints_the_bound() {
    let out = ddgraph(&["moore", "--delta", "3", "--diameter", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "10\n");

    let out = ddgraph(&["moore", "--delta", "4", "--diameter", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bound"], 4373);
}

#[test]
fn moore_overflow_exits_three() {
    let out = ddgraph(&["moore", "--delta", "1000", "--diameter", "40"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bfs_reports_the_record_diameter() {
    let out = ddgraph(&["bfs", "--group", G1155, "--gens", "[[6,2],[10,9]]", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stats"]["order"], 1155);
    assert_eq!(v["stats"]["degree"], 4);
    assert_eq!(v["stats"]["diameter"], 7);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn inputs_can_come_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("group.json");
    let gens = dir.path().join("gens.json");
    fs::write(&group, G1155).unwrap();
    fs::write(&gens, "[[6,2],[10,9]]").unwrap();
    let out = ddgraph(&[
        "bfs",
        "--group",
        &format!("@{}", group.display()),
        "--gens",
        &format!("@{}", gens.display()),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("diameter   7"));
}

#[test]
fn bad_inputs_exit_two() {
    // 4 has multiplicative order 15 mod 77, which does not divide 14.
    let bad_spec = r#"{"family":"cyclic","m":14,"n":77,"a":4}"#;
    assert_eq!(ddgraph(&["bfs", "--group", bad_spec, "--gens", "[[1,0]]"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["bfs", "--group", "{not json", "--gens", "[[1,0]]"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["bfs", "--group", G1155, "--gens", "[[15,0]]"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["bfs", "--group", G1155, "--gens", "[]"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["verify", "--record", "99,2"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["moore", "--delta", "x", "--diameter", "2"]).status.code(), Some(2));
    assert_eq!(ddgraph(&["search", "--group", S3]).status.code(), Some(2));
}

#[test]
fn infeasible_search_exits_three() {
    let out = ddgraph(&[
        "search",
        "--group",
        G1155,
        "--delta",
        "4",
        "--target-diameter",
        "5",
        "--trials",
        "5",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // Odd degree in an odd-order group.
    let out = ddgraph(&[
        "search",
        "--group",
        G1155,
        "--delta",
        "3",
        "--target-diameter",
        "9",
        "--trials",
        "5",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_json_is_stable_across_runs_and_threads() {
    let run = |threads: &str| {
        let out = ddgraph(&[
            "search",
            "--group",
            S3,
            "--delta",
            "3",
            "--target-diameter",
            "2",
            "--trials",
            "200",
            "--seed",
            "20240601",
            "--json",
            "--threads",
            threads,
        ]);
        assert!(out.status.success());
        out.stdout
    };
    let first = run("1");
    assert_eq!(first, run("1"));
    assert_eq!(first, run("4"));
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert!(!v["hits"].as_array().unwrap().is_empty());
}

#[test]
fn verify_single_record() {
    let out = ddgraph(&["verify", "--record", "4,7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(4,7)"));
    assert!(text.contains("1 passed, 0 mismatched, 0 skipped"));

    let out = ddgraph(&["verify", "--record", "(7,5)", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], 1);
}

#[test]
fn verify_all_small_budget_is_deterministic() {
    let a = ddgraph(&["verify", "--all", "--max-order", "100000", "--json", "--threads", "1"]);
    let b = ddgraph(&["verify", "--all", "--max-order", "100000", "--json", "--threads", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], 29);
    assert_eq!(v["mismatched"], 0);
}

#[test]
fn export_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g.edges");
    let dimacs = dir.path().join("g.dimacs");
    for (format, path) in [("edgelist", &edges), ("dimacs", &dimacs)] {
        let out = ddgraph(&[
            "export",
            "--group",
            G1155,
            "--gens",
            "[[6,2],[10,9]]",
            "--format",
            format,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let edges = fs::read_to_string(edges).unwrap();
    assert_eq!(edges.lines().count(), 2310);
    let dimacs = fs::read_to_string(dimacs).unwrap();
    assert!(dimacs.starts_with("p edge 1155 2310\n"));
    assert_eq!(dimacs.lines().count(), 2311);

    let out = ddgraph(&["export", "--group", G1155, "--gens", "[[6,2]]", "--format", "gml", "--out", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn records_dump_round_trips() {
    let out = ddgraph(&["records-dump"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), ddgraph::records::EMBEDDED_RECORDS);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.json");
    assert!(ddgraph(&["records-dump", "--out", path.to_str().unwrap()]).status.success());
    let text = fs::read_to_string(path).unwrap();
    let entries = ddgraph::load_records(ddgraph::RecordSource::Json(&text)).unwrap();
    assert_eq!(entries.len(), 51);
}
