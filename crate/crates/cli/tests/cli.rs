//! End-to-end tests against the built binary: flag grammar, exit codes,
//! env-var format override, and file inputs.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgespectra"))
        .args(args)
        .env_remove("EDGESPECTRA_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("edgespectra-test-{name}-{}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn matrix_requires_exactly_one_input() {
    let out = run(&["matrix"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["matrix", "--family", "cycle:3", "--graph6", "Bw"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_reads_edge_list_files() {
    let path = write_temp("k2", "# a single edge\n0 1\n");
    let out = run(&["matrix", "--edges", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["matrices"]["n"], serde_json::json!([["0", "0"], ["0", "0"]]));
    std::fs::remove_file(path).ok();

    let bad = write_temp("loop", "0 0\n");
    let out = run(&["matrix", "--edges", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(bad).ok();
}

#[test]
fn matrix_rejects_bipartite_orientation_of_odd_cycle() {
    let out = run(&["matrix", "--family", "cycle:3", "--orient", "bipartite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not bipartite"));
}

#[test]
fn matrix_blocks_show_bipartite_zero_blocks() {
    let out = run(&[
        "matrix", "--family", "kpq:2,3", "--orient", "bipartite", "--blocks", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let zero_block = |name: &str| {
        doc["blocks"][name]
            .as_array()
            .unwrap()
            .iter()
            .all(|row| row.as_array().unwrap().iter().all(|c| c == "0"))
    };
    assert!(zero_block("m11") && zero_block("m22"));
    assert!(!zero_block("m12") && !zero_block("m21"));
}

#[test]
fn charpoly_json_matches_the_schema() {
    let out = run(&["charpoly", "--family", "cycle:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(
        doc["charpoly"]["coeffs"],
        serde_json::json!(["0", "0", "9", "-18", "15", "-6", "1"])
    );
    assert_eq!(doc["roots"], serde_json::Value::Null);
}

#[test]
fn format_env_var_is_a_default_and_flags_override_it() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_edgespectra"))
        .args(["charpoly", "--family", "complete:2", "--which", "d"])
        .env("EDGESPECTRA_FORMAT", "json")
        .output()
        .unwrap();
    assert!(serde_json::from_slice::<serde_json::Value>(&with_env.stdout).is_ok());

    let overridden = Command::new(env!("CARGO_BIN_EXE_edgespectra"))
        .args(["charpoly", "--family", "complete:2", "--which", "d", "--format", "text"])
        .env("EDGESPECTRA_FORMAT", "json")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&overridden.stdout).contains("phi_d(x) = x^2"));
}

#[test]
fn check_all_on_petersen_exits_zero() {
    let out = run(&["check", "--family", "petersen", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 9);
}

#[test]
fn check_rejects_unknown_checker_names() {
    let out = run(&["check", "--family", "petersen", "unheard-of"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown checker"));
}

#[test]
fn sweep_from_a_graph6_file() {
    let path = write_temp("corpus", "Bw\nBW\nA_\n");
    let out = run(&[
        "sweep",
        "--graph6-file",
        path.to_str().unwrap(),
        "--checkers",
        "tree,nilpotent",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["checks"].as_array().unwrap().len(), 6);
    std::fs::remove_file(path).ok();
}

#[test]
fn sweep_validates_max_n() {
    let out = run(&["sweep", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["sweep"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_reports_the_six_vertex_cospectral_trees() {
    let out = run(&[
        "sweep", "--max-n", "6", "--checkers", "tree", "--report-collisions", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["summary"]["failed"], 0);
    let groups = doc["cospectral_groups"].as_array().unwrap();
    // the repeated tree spectrum {0: 3, 1: 4, 2: 3}, i.e.
    // x^3 (x-1)^4 (x-2)^3 in ascending coefficients
    let expected =
        serde_json::json!(["0", "0", "0", "-8", "44", "-102", "129", "-96", "42", "-10", "1"]);
    let hit = groups.iter().any(|g| {
        g["charpoly"]["coeffs"] == expected && g["graphs"].as_array().unwrap().len() == 2
    });
    assert!(hit, "expected the cospectral tree pair in {groups:?}");
}
