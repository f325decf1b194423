use std::f64::consts::PI;
use std::process::{Command, Output};

use clausen_cli::{RunRecord, CSV_HEADER};

const CATALAN: f64 = 0.915_965_594_177_219;

fn clausen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clausen"))
        .args(args)
        .env_remove("CLAUSEN_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn parse_csv(text: &str) -> Vec<RunRecord> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<_> = rdr.headers().unwrap().iter().map(str::to_string).collect();
    assert_eq!(header.join(","), CSV_HEADER);
    rdr.deserialize().map(Result::unwrap).collect()
}

fn closed_form_line(text: &str) -> f64 {
    let line = text.lines().find(|l| l.starts_with("closed form")).expect("closed form line");
    line.split_whitespace().last().unwrap().parse().unwrap()
}

#[test]
fn eval_clausen_at_quarter_turn() {
    let o = clausen(&["eval", "--family", "T1", "--m", "1", "--x", "1.5707963"]);
    assert!(o.status.success(), "{}", stderr(&o));
    // x is truncated, so the value moves by Cl₁(π/2)·Δx ≈ 1e-8
    assert!((closed_form_line(&stdout(&o)) - CATALAN).abs() < 2e-8);
    let o = clausen(&["eval", "--family", "T1", "--m", "1", "--x", "0.5pi"]);
    assert!((closed_form_line(&stdout(&o)) - CATALAN).abs() < 1e-11);
}

#[test]
fn eval_outside_interval_is_a_domain_error() {
    let o = clausen(&["eval", "--family", "T1", "--m", "1", "--x", "6.4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("outside (0, 2π)"), "{}", stderr(&o));
    let o = clausen(&["eval", "--family", "T1", "--m", "0", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_beta_cosine_at_origin() {
    let o = clausen(&["eval", "--family", "T8", "--m", "1", "--x", "0", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cf = v["record"]["closed_form"].as_f64().unwrap();
    assert!((cf - CATALAN).abs() < 1e-12);
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
}

#[test]
fn eval_reports_oracle_convergence_failure() {
    // Cesàro window for Σ cos(nx)/n blows past the term cap this close to 0
    let o = clausen(&["eval", "--family", "T2", "--m", "1", "--x", "1e-6"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("best value"));
}

#[test]
fn compare_passes_on_acceptance_grid() {
    let o = clausen(&["compare", "--family", "T3", "--m", "2", "--grid", "9", "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(parse_csv(&stdout(&o)).len(), 9);
    assert!(stderr(&o).contains("max rel_err"));
}

#[test]
fn compare_json_record_count() {
    let o = clausen(&["compare", "--family", "T7", "--m", "1", "--grid", "9", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 9);
    assert!(recs.iter().all(|r| r["rel_err"].as_f64().is_some()));
}

#[test]
fn compare_uses_cesaro_for_order_one_cosine() {
    let o = clausen(&["compare", "--family", "T2", "--m", "1", "--grid", "9"]);
    assert!(o.status.success());
    let recs = parse_csv(&stdout(&o));
    let mid = recs.iter().find(|r| (r.x - PI).abs() < 1e-12).expect("x = π on the grid");
    assert_eq!(mid.oracle_method, "cesaro");
    assert!((mid.closed_form + 2f64.ln()).abs() < 1e-12);
}

#[test]
fn compare_fails_with_exit_four_above_tolerance() {
    let o = Command::new(env!("CARGO_BIN_EXE_clausen"))
        .args(["compare", "--family", "T1", "--m", "1", "--grid", "3"])
        .env("CLAUSEN_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    // records are still written
    assert_eq!(parse_csv(&stdout(&o)).len(), 3);
}

#[test]
fn table2_rows_are_accepted_as_families() {
    let o = clausen(&["compare", "--family", "table2-T1", "--m", "2", "--grid", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(parse_csv(&stdout(&o)).iter().all(|r| r.family == "table2-T1"));
}

#[test]
fn verify_special_values() {
    let o = clausen(&["verify", "--suite", "special-values", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let names: Vec<_> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect();
    for want in ["eta(1) = ln 2", "beta(0) = 1/2", "zeta(0) = -1/2", "zeta(-10) = 0"] {
        assert!(names.iter().any(|n| n == want), "missing {want}");
    }
}

#[test]
fn verify_choi_srivastava_and_all() {
    let o = clausen(&["verify", "--suite", "choi-srivastava", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("suite,check,status,measured,tolerance,detail"));
    assert_eq!(text.lines().filter(|l| l.contains(",pass,")).count(), 5);
    let o = clausen(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn sweep_row_count_and_accuracy() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("t1.csv");
    let json_path = dir.path().join("t1.json");
    let base = ["sweep", "--family", "T1", "--m", "1..3", "--grid", "9", "--out"];
    let mut args = base.to_vec();
    args.push(csv_path.to_str().unwrap());
    assert!(clausen(&args).status.success());
    let mut args = base.to_vec();
    args.extend([json_path.to_str().unwrap(), "--format", "json"]);
    assert!(clausen(&args).status.success());

    let csv_recs = parse_csv(&std::fs::read_to_string(&csv_path).unwrap());
    assert_eq!(csv_recs.len(), 27);
    assert!(csv_recs.iter().all(|r| r.rel_err <= 1e-8));
    let json_recs: Vec<RunRecord> = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(csv_recs, json_recs);
    // ordered by (m, x)
    assert!(csv_recs.windows(2).all(|w| (w[0].m, w[0].x) < (w[1].m, w[1].x)));
}

#[test]
fn sweep_to_unwritable_path_is_an_io_error() {
    let o = clausen(&["sweep", "--family", "T1", "--m", "1", "--grid", "2", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn explicit_abscissae() {
    let o = clausen(&["sweep", "--family", "T4", "--m", "1", "--x", "-0.5pi,pi/3,1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let recs = parse_csv(&stdout(&o));
    assert_eq!(recs.len(), 3);
    assert!((recs[1].closed_form - 0.5 * 3f64.ln()).abs() < 1e-12);
}
