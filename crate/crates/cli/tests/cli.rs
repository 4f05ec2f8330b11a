//! End-to-end tests for the `hfold` binary: documented output shapes, exit
//! codes, normalization echoes, and byte-for-byte determinism.

use std::process::Command;

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_hfold"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf8 stdout"),
        String::from_utf8(output.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn structure_json_matches_documented_schema() {
    let (code, stdout, stderr) = run(&["structure", "--set", "0,2,3", "--t", "1", "--format", "json"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    let expected = json!({
        "set": [0, 2, 3],
        "t": 1,
        "h_t": 7,
        "c_t": 2,
        "d_t": 0,
        "C_t": [0],
        "D_t": [],
        "c_prime_t": 4,
        "d_prime_t": 6,
        "verified_h": [7, 9],
    });
    assert_eq!(parsed, expected);
    // Normalized input in json mode leaves stderr quiet.
    assert!(stderr.is_empty(), "unexpected stderr: {stderr}");
}

#[test]
fn structure_json_round_trips() {
    let (code, stdout, _) = run(&["structure", "--set", "0,2,3", "--t", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    let rendered = serde_json::to_string(&parsed).expect("serializable");
    let reparsed: Value = serde_json::from_str(&rendered).expect("valid json");
    assert_eq!(parsed, reparsed);
    assert_eq!(parsed["c_t"], json!(8));
    assert_eq!(parsed["C_t"], json!([6]));
    assert_eq!(parsed["d_t"], json!(3));
    assert_eq!(parsed["D_t"], json!([]));
}

#[test]
fn frobenius_text_example() {
    let (code, stdout, _) = run(&["frobenius", "--set", "0,2,3", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "A = {0, 2, 3}\nFN_1 = 1, FN_2 = 7\n");
}

#[test]
fn frobenius_csv_rows() {
    let (code, stdout, _) = run(&["frobenius", "--set", "0,2,3", "--t", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "t,fn\n1,1\n2,7\n");
}

#[test]
fn frobenius_pair_set_reports_infinite_thresholds() {
    let (code, stdout, _) = run(&["frobenius", "--set", "0,5", "--t", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["values"], json!([-1]));
    assert_eq!(parsed["infinite_from_t"], json!(2));
}

#[test]
fn verify_sweep_passes() {
    let (code, stdout, _) = run(&[
        "verify", "--seed", "42", "--k-max", "3", "--a-max", "8", "--t-max", "2", "--count", "8",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS: 0 violations"), "stdout: {stdout}");
    assert!(stdout.contains("structure certificates: 16"), "stdout: {stdout}");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--seed", "9", "--count", "6", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
    assert_eq!(first.0, 0);
    let parsed: Value = serde_json::from_str(&first.1).expect("valid json");
    assert_eq!(parsed["passed"], json!(true));
    assert_eq!(parsed["violations"], json!([]));
}

#[test]
fn repr_csv_golden() {
    let (code, stdout, stderr) = run(&["repr", "--set", "0,1,2", "--h", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n,count\n0,1\n1,1\n2,2\n3,1\n4,1\n");
    assert!(stderr.is_empty());
}

#[test]
fn repr_text_marks_capped_entries() {
    let (code, stdout, _) = run(&["repr", "--set", "0,2,3", "--h", "4", "--cap", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\n6,2+\n"), "stdout: {stdout}");
    assert!(stdout.contains("\n7,1\n"), "stdout: {stdout}");
    // CSV mode prints the saturated value without the marker.
    let (_, csv, _) = run(&["repr", "--set", "0,2,3", "--h", "4", "--cap", "2", "--format", "csv"]);
    assert!(csv.contains("\n6,2\n"), "csv: {csv}");
    assert!(!csv.contains('+'), "csv: {csv}");
}

#[test]
fn repr_json_counts_are_decimal_strings() {
    let (code, stdout, _) = run(&["repr", "--set", "0,1", "--h", "64", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["cap"], json!("exact"));
    let rows = parsed["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 65);
    for row in rows {
        assert_eq!(row["count"], json!("1"));
    }
}

#[test]
fn sumset_denormalizes_output() {
    let (code, stdout, stderr) =
        run(&["sumset", "--set", "4,10,13", "--h", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["set"], json!([4, 10, 13]));
    assert_eq!(parsed["normalized"], json!([0, 2, 3]));
    assert_eq!(parsed["offset"], json!(4));
    assert_eq!(parsed["scale"], json!(3));
    assert_eq!(parsed["members"], json!([8, 14, 17, 20, 23, 26]));
    assert!(stderr.contains("normalized:"), "stderr: {stderr}");
}

#[test]
fn sumset_reports_deduplication() {
    let (code, stdout, _) = run(&["sumset", "--set", "5,3,3", "--h", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("duplicate elements removed"), "stdout: {stdout}");
    assert!(stdout.contains("{6, 8, 10}"), "stdout: {stdout}");
}

#[test]
fn witness_json_golden() {
    let (code, stdout, _) =
        run(&["witness", "--set", "0,2,3", "--n", "4", "--h", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["witnesses"], json!([{"exponents": [2, 0], "zeros": 2}]));
}

#[test]
fn witness_text_renders_sum() {
    let (code, stdout, _) = run(&["witness", "--set", "0,2,3", "--n", "4", "--h", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("witness 1: 4 = 2*2 + 2*0"), "stdout: {stdout}");
}

#[test]
fn witness_outside_interval_is_usage_error() {
    let (code, _, stderr) = run(&["witness", "--set", "0,2,3", "--n", "1", "--h", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("outside the guaranteed interval"), "stderr: {stderr}");
}

#[test]
fn witness_unattainable_residue_is_usage_error() {
    let (code, _, stderr) = run(&["witness", "--set", "4,10,13", "--n", "30", "--h", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not attainable"), "stderr: {stderr}");
}

#[test]
fn structure_pair_set_high_threshold_reports_empty() {
    let (code, stdout, _) = run(&["structure", "--set", "0,5", "--t", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed, json!({"set": [0, 1], "t": 2, "empty_for_all_h": true}));
}

#[test]
fn dual_json_swaps_fringe() {
    let (code, stdout, _) = run(&["dual", "--set", "0,2,3", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed["dual"], json!([0, 1, 3]));
    assert_eq!(parsed["fringe"]["c_t"], json!(0));
    assert_eq!(parsed["fringe"]["C_t"], json!([]));
    assert_eq!(parsed["fringe"]["d_t"], json!(2));
    assert_eq!(parsed["fringe"]["D_t"], json!([0]));
}

#[test]
fn invalid_literal_is_usage_error() {
    let (code, _, stderr) = run(&["repr", "--set", "0,x", "--h", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"), "stderr: {stderr}");

    let (code, _, _) = run(&["repr", "--set", "5", "--h", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn zero_parameters_are_usage_errors() {
    let (code, _, _) = run(&["repr", "--set", "0,1", "--h", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["sumset", "--set", "0,1", "--h", "2", "--t", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["repr", "--set", "0,1", "--h", "2", "--cap", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn oversized_table_is_refused() {
    let (code, _, stderr) = run(&["repr", "--set", "0,3,1073741824", "--h", "8"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("2^31"), "stderr: {stderr}");
}

#[test]
fn unknown_flag_is_usage_error() {
    let (code, _, _) = run(&["repr", "--set", "0,1", "--h", "2", "--frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn csv_rejected_for_structural_subcommands() {
    for subcommand in ["structure", "dual", "witness"] {
        let mut args = vec![subcommand, "--set", "0,2,3", "--format", "csv"];
        if subcommand == "witness" {
            args.extend_from_slice(&["--n", "4", "--h", "4"]);
        }
        let (code, _, stderr) = run(&args);
        assert_eq!(code, 2, "subcommand {subcommand}");
        assert!(stderr.contains("csv format is not available"), "stderr: {stderr}");
    }
}

#[test]
fn text_output_is_deterministic() {
    let args = ["structure", "--set", "0,2,3,7", "--t", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
    assert_eq!(first.0, 0);
}
