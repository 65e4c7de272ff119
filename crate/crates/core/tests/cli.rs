//! End-to-end checks of the command-line binary: exit codes, JSON formats,
//! and byte-stable output across runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn srgq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srgq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp_file(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("srgq-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn build_emits_sorted_graph_json() {
    let out = srgq(&["build", "clebsch"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(value["n"], 16);
    assert_eq!(value["edges"].as_array().unwrap().len(), 40);
    // identical across runs
    let again = srgq(&["build", "clebsch"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn build_dot_output() {
    let out = srgq(&["build", "pentagon", "--dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph g {"));
    assert!(text.contains("0 -- 1;"));
}

#[test]
fn build_unknown_name_is_usage_error() {
    let out = srgq(&["build", "nosuchgraph"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_verb_is_usage_error() {
    let out = srgq(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_srg_round_trip_through_file() {
    let path = temp_file("petersen.json");
    let build = srgq(&["build", "petersen", "-o", path.to_str().unwrap()]);
    assert!(build.status.success());
    let verify = srgq(&["verify-srg", path.to_str().unwrap()]);
    assert!(verify.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&verify).trim()).unwrap();
    assert_eq!(value["n"], 10);
    assert_eq!(value["k"], 3);
    assert_eq!(value["lambda"], 0);
    assert_eq!(value["mu"], 1);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_srg_rejects_irregular_graph() {
    let path = temp_file("path3.json");
    std::fs::write(&path, "{\"n\":3,\"edges\":[[0,1],[1,2]]}").unwrap();
    let out = srgq(&["verify-srg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not strongly regular"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn malformed_json_is_usage_error() {
    let path = temp_file("garbage.json");
    std::fs::write(&path, "{{{").unwrap();
    let out = srgq(&["verify-srg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn missing_file_is_usage_error() {
    let out = srgq(&["plus", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plus_reports_components_for_t6() {
    let out = srgq(&["plus", "trapezohedral:6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("components: 3"));
    assert!(text.contains("2-regular: true"));
    assert!(text.contains("component 0: C_8"));
}

#[test]
fn plus_emit_writes_graph_json() {
    let path = temp_file("plus.json");
    let out = srgq(&["plus", "clebsch", "--emit-plus", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(value["n"], 40);
    std::fs::remove_file(&path).ok();
}

#[test]
fn parity_clebsch_feasible_json() {
    let out = srgq(&["parity", "clebsch"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rows: 40"));
    assert!(text.contains("status: FEASIBLE"));
    let json_line = text.lines().last().unwrap();
    let value: serde_json::Value = serde_json::from_str(json_line).unwrap();
    assert_eq!(value["status"], "feasible");
    assert_eq!(value["witness"].as_array().unwrap().len(), 40);
}

#[test]
fn parity_gewirtz_infeasible_json() {
    let out = srgq(&["parity", "gewirtz"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rows: 630"));
    assert!(text.contains("columns: 280"));
    assert!(text.contains("status: INFEASIBLE"));
    let value: serde_json::Value =
        serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(value["status"], "infeasible");
    let rows = value["certificate_rows"].as_array().unwrap();
    let cycles = value["cycles"].as_array().unwrap();
    assert_eq!(rows.len(), cycles.len());
    assert!(!rows.is_empty());
}

#[test]
fn parity_needs_force_off_contract() {
    let out = srgq(&["parity", "petersen"]);
    assert_eq!(out.status.code(), Some(2));
    let forced = srgq(&["parity", "petersen", "--force"]);
    assert!(forced.status.success());
    // girth 5: no 4-cycles, empty system, trivially feasible
    assert!(stdout(&forced).contains("rows: 0"));
}

#[test]
fn certify_q2_clebsch_passes() {
    let out = srgq(&["certify-q2", "clebsch"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pattern: ok"));
    assert!(text.contains("idempotent: ok"));
    assert!(text.contains("multiplicities: (8, 8)"));
    assert!(text.contains("psd rank bounds: (8, 8)"));
    assert!(text.contains("certificate: PASS"));
}

#[test]
fn certify_q2_needs_matrix_for_other_graphs() {
    let out = srgq(&["certify-q2", "petersen"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectrum_exact_output() {
    let out = srgq(&["spectrum", "gewirtz"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        vec![
            "eigenvalue 10 multiplicity 1",
            "eigenvalue 2 multiplicity 35",
            "eigenvalue -4 multiplicity 20",
        ]
    );
}

#[test]
fn decompose_emits_structure() {
    let path = temp_file("decomposition.json");
    let out = srgq(&["decompose", "gewirtz", "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "decompose failed: {}", stdout(&out));
    let text = stdout(&out);
    for line in [
        "four-cycles-per-edge: pass",
        "trapezohedral-subgraphs: pass (24)",
        "pairing-partition: pass (3 pairings)",
        "perfect-matchings: pass",
        "rim-exclusivity: pass",
        "edge-distribution: pass",
    ] {
        assert!(text.contains(line), "missing: {line}");
    }
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["P"].as_array().unwrap().len(), 16);
    assert_eq!(value["L"].as_array().unwrap().len(), 16);
    assert_eq!(value["T"].as_array().unwrap().len(), 24);
    assert_eq!(value["tau_cycles"].as_array().unwrap().len(), 6);
    assert_eq!(value["pairings"].as_array().unwrap().len(), 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn decompose_respects_budget_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_srgq"))
        .args(["decompose", "gewirtz"])
        .env("SRGQ_SEARCH_BUDGET", "5")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("budget"));
}

#[test]
fn report_single_graph() {
    let out = srgq(&["report", "--graph", "higman-sims"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("higman-sims (100,22,0,6): q=open"));
    let bad = srgq(&["report", "--graph", "nosuchgraph"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn build_accepts_every_documented_name() {
    for (name, n) in [
        ("pentagon", 5),
        ("petersen", 10),
        ("clebsch", 16),
        ("hoffman-singleton", 50),
        ("gewirtz", 56),
        ("mesner", 77),
        ("higman-sims", 100),
        ("trapezohedral:9", 20),
    ] {
        let out = srgq(&["build", name]);
        assert!(out.status.success(), "{name}");
        let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(value["n"], n, "{name}");
    }
}

#[test]
fn certify_q2_fails_on_wrong_matrix() {
    // a pattern-matching but non-idempotent matrix: the adjacency matrix
    let entries: Vec<Vec<[i64; 4]>> = {
        let out = srgq(&["build", "clebsch"]);
        let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        let edges: Vec<(usize, usize)> = value["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
            .collect();
        (0..16)
            .map(|i| {
                (0..16)
                    .map(|j| {
                        let adjacent = edges.contains(&(i.min(j), i.max(j))) && i != j;
                        [i64::from(adjacent), 1, 0, 1]
                    })
                    .collect()
            })
            .collect()
    };
    let path = temp_file("adjacency-matrix.json");
    let doc = serde_json::json!({"dim": 16, "entries": entries});
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = srgq(&["certify-q2", "clebsch", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("pattern: ok"));
    assert!(text.contains("idempotent: FAILED"));
    assert!(text.contains("certificate: FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn report_all_is_byte_stable() {
    let first = srgq(&["report", "--all"]);
    let second = srgq(&["report", "--all"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn report_writes_json_reports() {
    let dir = temp_file("reports");
    let out = srgq(&["report", "--graph", "clebsch", "--json-dir", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let report_text = std::fs::read_to_string(dir.join("clebsch.json")).unwrap();
    let value: serde_json::Value = serde_json::from_str(&report_text).unwrap();
    assert_eq!(value["verdict"], "2");
    assert_eq!(value["two_eigenvalue"]["rank"], 8);
    assert_eq!(value["params"]["n"], 16);
    std::fs::remove_dir_all(&dir).ok();
}
