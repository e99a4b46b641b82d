use std::process::{Command, Output};

use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn zeta_json() {
    let out = hurwitz(&["zeta", "--s", "2", "--a", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let re = v["value"][0].as_f64().unwrap();
    assert!((re - std::f64::consts::PI.powi(2) / 2.0).abs() < 1e-12);
    assert_eq!(v["derivative"], false);
}

#[test]
fn zeta_derivative_complex() {
    let out = hurwitz(&["--format", "csv", "zeta", "--s", "0", "--a", "1", "--deriv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "s_re,s_im,a_re,a_im,derivative,value_re,value_im");
    let value: f64 = lines.next().unwrap().split(',').nth(5).unwrap().parse().unwrap();
    assert!((value + 0.5 * (2.0 * std::f64::consts::PI).ln()).abs() < 1e-12);
}

#[test]
fn eval_both_passes() {
    let out = hurwitz(&["eval", "--family", "bose-even", "--n", "1", "--a", "1", "--s", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["candidate"], "printed");
}

#[test]
fn eval_complex_parameters() {
    let out = hurwitz(&["eval", "--family", "sinh-even", "--n", "1", "--a", "1.2,0.3", "--s", "4.5,-0.8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["s"][1].as_f64(), Some(-0.8));
}

#[test]
fn failing_candidate_exits_one() {
    let out = hurwitz(&["eval", "--family", "bose-odd", "--candidate", "printed", "--n", "0", "--a", "1", "--s", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["status"], "FAIL");
}

#[test]
fn open_family_quadrature() {
    let out = hurwitz(&["eval", "--family", "open-L", "--n", "2", "--q", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["err_estimate"].as_f64().unwrap() < 1e-10);
}

#[test]
fn transform_text() {
    let out = hurwitz(&["--format", "text", "transform", "--kernel", "fermi", "--w", "2", "--beta", "6.283185307179586"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with("PASS"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hurwitz(&["zeta", "--s", "1", "--a", "1"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["eval", "--family", "open-T", "--method", "closed", "--q", "1"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["eval", "--family", "bose-even", "--a", "1,2,3"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["sweep", "--grid", "/nonexistent/grid.json"]).status.code(), Some(2));
}

#[test]
fn sweep_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    let out_json = dir.path().join("records.json");
    let out_csv = dir.path().join("records.csv");
    std::fs::write(
        &grid,
        r#"[
            {"family": "bose-even", "n": 1, "a": 1.0, "s": 5.0},
            {"family": "fermi-odd", "n": 0, "a": [0.7, 0.0], "s": 2.5, "candidate": "canonical"},
            {"family": "bose-even", "n": 0, "a": 1.0, "s": 1.0000001, "candidate": "printed"}
        ]"#,
    )
    .unwrap();
    let grid_arg = grid.to_str().unwrap();

    let out = hurwitz(&["sweep", "--grid", grid_arg, "--out", out_json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let records: Value = serde_json::from_str(&std::fs::read_to_string(&out_json).unwrap()).unwrap();
    let statuses: Vec<_> = records.as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["PASS", "PASS", "SKIPPED_POLE"]);
    assert_eq!(records[1]["candidate"], "corrected@pi");

    let out = hurwitz(&["--format", "csv", "sweep", "--grid", grid_arg, "--serial", "--out", out_csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out_csv).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("family,n,a_re,a_im,s_re,s_im,candidate,closed_re"));
}
