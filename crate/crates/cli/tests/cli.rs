use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_miura-ofg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn json(output: &Output) -> Value {
    serde_json::from_str(&stdout(output)).expect("json output")
}

#[test]
fn enumerate_lists_sorted_assignments() {
    let output = run(&["enumerate", "--n", "2"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "MMMV\nMMVM\nMVMM\nVMVV\nVVMV\nVVVM\n");
}

#[test]
fn enumerate_count_only() {
    let output = run(&["enumerate", "--n", "6", "--count-only"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "486\n");
}

#[test]
fn stats_reports_counts_and_degrees() {
    let output = run(&["stats", "--n", "4"]);
    assert!(output.status.success());
    let value = json(&output);
    assert_eq!(value["vertices"], 54);
    assert_eq!(value["edges"], 120);
    assert_eq!(
        value["degrees"],
        serde_json::json!({"2": 4, "3": 8, "4": 20, "5": 8, "6": 12, "8": 2})
    );
}

#[test]
fn stats_handles_three_rows() {
    let output = run(&["stats", "--n", "2", "--m", "3"]);
    assert!(output.status.success());
    let value = json(&output);
    assert!(value["vertices"].as_u64().unwrap() > 0);
}

#[test]
fn graph_dot_export_is_exact() {
    let output = run(&["graph", "--n", "1", "--format", "dot"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "graph flip_graph {\n  0 [label=\"M\"];\n  1 [label=\"V\"];\n  0 -- 1;\n}\n"
    );
}

#[test]
fn graph_json_carries_the_counts() {
    let output = run(&["graph", "--n", "3", "--format", "json"]);
    assert!(output.status.success());
    let value = json(&output);
    assert_eq!(value["vertex_count"], 18);
    assert_eq!(value["edge_count"], 32);
    assert_eq!(value["states"].as_array().unwrap().len(), 18);
}

#[test]
fn graph_edge_list_has_one_line_per_edge() {
    let output = run(&["graph", "--n", "3", "--format", "edges"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 32);
    assert!(text.lines().all(|l| {
        let mut parts = l.split_whitespace();
        let a: u32 = parts.next().unwrap().parse().unwrap();
        let b: u32 = parts.next().unwrap().parse().unwrap();
        a < b && parts.next().is_none()
    }));
}

#[test]
fn graph_respects_the_state_cap() {
    let output = run(&[
        "graph",
        "--n",
        "6",
        "--format",
        "edges",
        "--max-states",
        "100",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn distance_formula_and_bfs_agree() {
    let output = run(&["distance", "--from", "MMVM", "--to", "VVMV"]);
    assert!(output.status.success());
    let formula: u64 = stdout(&output).trim().parse().unwrap();

    let output = run(&[
        "distance", "--from", "MMVM", "--to", "VVMV", "--method", "both",
    ]);
    assert!(output.status.success());
    let value = json(&output);
    assert_eq!(value["formula"].as_u64().unwrap(), formula);
    assert_eq!(value["agree"], true);
}

#[test]
fn distance_rejects_bad_strings() {
    let output = run(&["distance", "--from", "MMX", "--to", "MMV"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["distance", "--from", "MMVM", "--to", "MVMMMVM"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn diameter_both_methods_agree() {
    let output = run(&["diameter", "--n", "4", "--method", "both"]);
    assert!(output.status.success());
    let value = json(&output);
    assert_eq!(value["formula"], 8);
    assert_eq!(value["bfs"], 8);
    assert_eq!(value["agree"], true);
}

#[test]
fn diameter_guards_large_bfs() {
    let output = run(&["diameter", "--n", "10", "--method", "bfs"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["diameter", "--n", "12", "--method", "formula"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "72\n");
}

#[test]
fn forest_csv_matches_the_small_tables() {
    let output = run(&["forest", "--generations", "3", "--emit", "csv"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "d,v_1,v_2,v_3\n2,2,4,4\n3,,0,4\n4,,2,8\n5,,,0\n6,,,2\n"
    );
}

#[test]
fn forest_json_lists_generations() {
    let output = run(&["forest", "--generations", "4", "--emit", "json"]);
    assert!(output.status.success());
    let value = json(&output);
    let tables = value.as_array().unwrap();
    assert_eq!(tables.len(), 4);
    assert_eq!(tables[3]["generation"], 4);
    assert_eq!(tables[3]["counts"]["8"]["blue"], 2);
}

#[test]
fn verify_passes_and_prints_claim_lines() {
    let output = run(&["verify", "--n-max", "3"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("[PASS] vertex-count"));
    assert!(text.contains("[PASS] bfs-diameter"));
    assert!(!text.contains("[FAIL]"));
    assert!(text.trim_end().ends_with("claims passed"));
}

#[test]
fn verify_json_reports_pass() {
    let output = run(&["verify", "--n-max", "3", "--json"]);
    assert!(output.status.success());
    let value = json(&output);
    assert_eq!(value["pass"], true);
    assert_eq!(value["n_max"], 3);
    assert!(value["claims"].as_array().unwrap().len() >= 20);
}

#[test]
fn bijection_translates_both_ways() {
    let output = run(&["bijection", "--mv", "MMVM"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "01\n10\n");

    let output = run(&["bijection", "--coloring", "01/10"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "MMVM\n");
}

#[test]
fn bijection_requires_canonical_or_flag() {
    let output = run(&["bijection", "--coloring", "12/21"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["bijection", "--coloring", "12/21", "--canonicalize"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "MMVM\n");
}

#[test]
fn bijection_needs_exactly_one_input() {
    let output = run(&["bijection"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["bijection", "--mv", "M", "--coloring", "0/1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn canonicalize_only_applies_to_colorings() {
    let output = run(&["bijection", "--mv", "MMVM", "--canonicalize"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["bijection", "--canonicalize"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let one = run(&["graph", "--n", "4", "--format", "json", "--threads", "1"]);
    let four = run(&["graph", "--n", "4", "--format", "json", "--threads", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);

    let first = run(&["verify", "--n-max", "3", "--json", "--threads", "2"]);
    let second = run(&["verify", "--n-max", "3", "--json", "--threads", "3"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn out_flag_writes_the_file_instead_of_stdout() {
    let dir = std::env::temp_dir().join("miura-ofg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stats.json");
    let output = run(&["stats", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["vertices"], 18);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_thread_settings_are_usage_errors() {
    let output = run(&["enumerate", "--n", "2", "--threads", "0"]);
    assert_eq!(output.status.code(), Some(2));

    let output = Command::new(env!("CARGO_BIN_EXE_miura-ofg"))
        .args(["enumerate", "--n", "2"])
        .env("MIURA_OFG_THREADS", "banana")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}
