use std::fs;
use std::process::{Command, Output};

use pegraph::graph::{graph_from_json, graph_to_json};
use pegraph_cli::{group_to_json, load_group};

fn pegraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn build_writes_group_json() {
    let out = pegraph(&["build", "Q8 x Z3"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order"], 24);
    assert_eq!(json["provenance"], "Q8 x Z3");

    let out = pegraph(&["build", "Z1"]);
    assert_eq!(
        stdout(&out),
        "{\"name\":\"Z1\",\"order\":1,\"provenance\":\"Z1\",\"table\":[[0]]}\n"
    );
}

#[test]
fn build_to_file_and_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.json");
    let out = pegraph(&["build", "heis 3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let out = pegraph(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"1\":1,\"3\":26}\n");
}

#[test]
fn group_json_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    for expr in ["Z1", "D10 x Z3", "Heis3", "S4"] {
        let path = dir.path().join("g.json");
        assert_eq!(
            code(&pegraph(&["build", expr, "-o", path.to_str().unwrap()])),
            0
        );
        let text = fs::read_to_string(&path).unwrap();
        let again = group_to_json(&load_group(path.to_str().unwrap()).unwrap());
        assert_eq!(text, again, "{expr}");
    }
}

#[test]
fn graph_json_round_trips_byte_for_byte() {
    for kind in ["enhanced", "power", "dpower", "cyclic"] {
        let out = pegraph(&["graph", "D8 x Z3", "--kind", kind, "--format", "json"]);
        assert_eq!(code(&out), 0, "{kind}");
        let text = stdout(&out);
        if kind == "dpower" {
            let parsed = pegraph::graph::GraphJson::parse(&text).unwrap();
            assert_eq!(parsed.to_canonical_string(), text);
        } else {
            let (k, g) = graph_from_json(&text).unwrap();
            assert_eq!(graph_to_json(k, &g), text, "{kind}");
        }
    }
}

#[test]
fn graph_examples() {
    let out = pegraph(&["graph", "Z5", "--kind", "enhanced", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"adj\":[[1,2,3,4],[0,2,3,4],[0,1,3,4],[0,1,2,4],[0,1,2,3]],\"kind\":\"enhanced\",\"n\":5}\n"
    );
    let out = pegraph(&["graph", "Q8", "--kind", "cyclic"]);
    let (_, g) = graph_from_json(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 3);
    assert!(g.components().iter().all(|c| c.len() == 2));

    let out = pegraph(&["graph", "Z4", "--kind", "dpower", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph \"dpower graph of Z4\" {"), "{dot}");
    assert!(dot.contains("1 -> 2;"));
}

#[test]
fn iso_exit_codes() {
    let out = pegraph(&["iso", "Z3x Z3xZ3", "Heis3", "enhanced"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("certificate: ["));

    let out = pegraph(&["iso", "Z8", "Q8", "enhanced"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("not isomorphic"));

    let out = pegraph(&["--iso-budget", "1", "iso", "Z4 x Z2", "Z4 x Z2"]);
    assert_eq!(code(&out), 2);

    let out = pegraph(&["iso", "Z4 x Z2", "D7"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("even"));
}

#[test]
fn malformed_inputs_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let corrupt = dir.path().join("bad.json");
    fs::write(
        &corrupt,
        "{\"name\":\"x\",\"order\":2,\"table\":[[0,1],[1,1]]}",
    )
    .unwrap();
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "not json at all").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["build"],
        vec!["build", "D7"],
        vec!["build", "Z3 x"],
        vec!["build", "S9"],
        vec!["graph", "Z4", "--kind", "square"],
        vec!["graph", "Z4", "--format", "png"],
        vec!["graph", corrupt.to_str().unwrap()],
        vec!["graph", garbage.to_str().unwrap()],
        vec!["iso", "Z4"],
        vec!["iso", "Z4", "Z4", "nonsense"],
        vec!["spectrum", "Heis4"],
        vec!["--iso-budget", "lots", "iso", "Z4", "Z4"],
        vec!["verify", "--max-order", "9999"],
        vec!["verify", "--max-order", "0"],
        vec!["verify", "--families", "Q8xZn,Nope", "--max-order", "8"],
        vec!["verify", "--max-order", "many"],
    ];
    for args in cases {
        let out = pegraph(&args);
        assert_eq!(code(&out), 3, "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&pegraph(&["--help"])), 0);
    assert_eq!(code(&pegraph(&["--version"])), 0);
    assert_eq!(code(&pegraph(&["verify", "--help"])), 0);
}

#[test]
fn verify_families_writes_a_clean_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = pegraph(&[
        "verify",
        "--families",
        "Q8xZn",
        "--max-order",
        "24",
        "--report-path",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let table = stdout(&out);
    assert!(table.contains("corpus:"));
    assert!(table.contains("uniqueness.enhanced"));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let records = report["records"].as_array().unwrap();
    assert!(records.iter().all(|r| r["verdict"] == "pass"));
    assert!(records
        .iter()
        .any(|r| r["params"] == "family=Q8xZn, n=3, H=Q8 x Z3"));
    assert!(records
        .iter()
        .all(|r| r["check"].as_str().unwrap().starts_with("uniqueness.")));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = pegraph(&[
            "verify",
            "--max-order",
            "32",
            "--report-path",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn verify_budget_only_exits_2() {
    let out = pegraph(&[
        "--iso-budget",
        "1",
        "verify",
        "--families",
        "E2mxZn",
        "--max-order",
        "16",
    ]);
    assert_eq!(code(&out), 2, "{}", stdout(&out));
    assert!(stdout(&out).contains("skipped (budget exhausted)"));
}
