use std::process::{Command, Output};

use serde_json::Value;

fn eulerkern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerkern"))
        .args(args)
        .env_remove("EULERKERN_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = eulerkern(&full);
    let doc: Value = serde_json::from_slice(&out.stdout).expect("one json document");
    (doc, out.status.code().unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kernel_show_first_order() {
    let (doc, code) = json(&["kernel", "show", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["parameters"]["split"], "u + v = 1");
    assert_eq!(doc["results"][0]["polynomial"], "1");
    assert_eq!(doc["results"][1]["polynomial"], "0");
    assert_eq!(doc["status"], "info");
}

#[test]
fn kernel_show_rejects_order_zero() {
    let out = eulerkern(&["kernel", "show", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn kernel_verify_to_eight() {
    let (doc, code) = json(&["kernel", "verify", "--max-n", "8"]);
    assert_eq!(code, 0);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["check"] == "PASS"));
    assert_eq!(doc["status"], "pass");
}

#[test]
fn identities_all_pass_with_ranges() {
    let out = eulerkern(&["identities"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("reflection") && text.contains("0..24"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn delta_table_values() {
    let (doc, code) = json(&["delta", "--max-n", "5"]);
    assert_eq!(code, 0);
    let exact: Vec<&str> = doc["results"].as_array().unwrap().iter().map(|r| r["delta"].as_str().unwrap()).collect();
    assert_eq!(exact, ["1/2", "1/4", "1/6", "5/48"]);
}

#[test]
fn delta_requires_n_at_least_two() {
    assert_eq!(eulerkern(&["delta", "--max-n", "1"]).status.code(), Some(2));
}

#[test]
fn s_table_flags_leibniz_row() {
    let (doc, code) = json(&["s", "--max-n", "4"]);
    assert_eq!(code, 0);
    let rows = doc["results"].as_array().unwrap();
    assert_eq!(rows[0]["rational_part"], "1/4");
    assert_eq!(rows[0]["volume_range"], false);
    assert_eq!(rows[1]["rational_part"], "1/8");
    assert_eq!(rows[1]["volume_range"], true);
}

#[test]
fn zeta_even_json_schema() {
    let (doc, code) = json(&["zeta", "even", "1"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "parameters", "results", "status", "elapsed_s"]);
    let row = &doc["results"][0];
    assert_eq!(row["rational_part"], "1/6");
    assert_eq!(row["pi_power"], 2);
    assert!((row["value"].as_f64().unwrap() - 1.644934).abs() < 1e-6);
    assert_eq!(row["check"], "PASS");
}

#[test]
fn zeta_odd_quadrature_matches_oracle() {
    let (doc, code) = json(&["zeta", "odd", "1", "--method", "quadrature"]);
    assert_eq!(code, 0);
    assert!((doc["results"][0]["value"].as_f64().unwrap() - 1.2020569032).abs() < 1e-10);
    assert_eq!(doc["results"][0]["check"], "PASS");
}

#[test]
fn zeta_odd_every_method_passes() {
    for method in ["formula", "quadrature", "logtan", "series"] {
        let (doc, code) = json(&["zeta", "odd", "2", "--method", method]);
        assert_eq!(code, 0, "{method}");
        assert_eq!(doc["status"], "pass", "{method}");
    }
}

#[test]
fn zeta_odd_zero() {
    let (doc, code) = json(&["zeta", "odd", "0", "--method", "formula"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["volume_range"], false);
    assert_eq!(eulerkern(&["zeta", "odd", "0"]).status.code(), Some(2));
}

#[test]
fn failing_oracle_exits_one() {
    // two nodes on one panel cannot reach the quadrature tolerance
    let out = eulerkern(&["zeta", "odd", "1", "--panels", "1", "--nodes", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn mc_volume_is_reproducible() {
    let a = eulerkern(&["mc", "volume", "2", "--samples", "100", "--seed", "7", "--format", "csv"]);
    let b = eulerkern(&["mc", "volume", "2", "--samples", "100", "--seed", "7", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mc_volume_near_exact() {
    let (doc, _) = json(&["mc", "volume", "3", "--samples", "1000000", "--seed", "42"]);
    let row = &doc["results"][0];
    assert_eq!(row["reference_exact"], "1/4");
    assert!(row["z_score"].as_f64().unwrap().abs() < 4.0);
    for key in ["mean", "stderr", "ci95_low", "ci95_high"] {
        assert!(row[key].is_number(), "{key}");
    }
}

#[test]
fn mc_zeta_odd_reports_stderr() {
    let (doc, code) = json(&["mc", "zeta-odd", "1", "--samples", "2000000", "--seed", "1"]);
    assert_eq!(code, 0);
    let row = &doc["results"][0];
    assert!(row["stderr"].as_f64().unwrap() > 0.0);
    assert!(row["z_score"].as_f64().unwrap().abs() < 4.0);
    assert_eq!(row["clamped"], 0);
}

#[test]
fn csv_has_header_and_quoted_strings() {
    let text = stdout(&eulerkern(&["delta", "--max-n", "3", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "\"n\",\"delta\",\"value\",\"trace_route\",\"oracle\",\"abs_err\",\"check\"");
    assert!(lines.next().unwrap().starts_with("2,\"1/2\",0.5,\"PASS\""));
}

#[test]
fn format_default_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_eulerkern"))
        .args(["zeta", "even", "2"])
        .env("EULERKERN_FORMAT", "json")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["results"][0]["rational_part"], "1/90");
}
