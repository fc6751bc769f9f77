use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klein-volume"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn verify_default_passes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS ideal membership of alpha, 343 triples"));
    assert!(text.trim_end().ends_with("0 failed"));
}

#[test]
fn verify_coarse_settings_pass() {
    let o = run(&["verify", "--tol", "1e-2", "--accel", "none", "--max-terms", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_too_few_terms_names_the_failure() {
    let o = run(&["verify", "--max-terms", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL series x(1,2)") && l.contains("NoConvergence")));
}

#[test]
fn verify_json_lists_checks() {
    let doc = json(&run(&["verify", "--format", "json"]));
    assert_eq!(doc["passed"], true);
    assert!(doc["checks"].as_array().unwrap().len() >= 30);
}

#[test]
fn compute_final_matches_headline() {
    let o = run(&["compute", "final", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let v = doc["re"].as_f64().unwrap();
    assert!((v - 0.72270).abs() <= 1e-5);
    assert!(doc["error_bound"].as_f64().unwrap() <= 1e-5);
    assert_eq!(doc["headline"]["matches"], true);
    assert_eq!(doc["headline"]["mirror_matches"], false);
}

#[test]
fn compute_final_text() {
    let o = run(&["compute", "final"]);
    let text = stdout(&o);
    assert!(text.starts_with("final = 0.7227027"), "{text}");
    assert!(text.contains("matches"));
}

#[test]
fn compute_v_plus_vanishes() {
    let doc = json(&run(&["compute", "v_plus", "--format", "json"]));
    assert!(doc["distance_to_integer"].as_f64().unwrap() <= 1e-6);
}

#[test]
fn compute_swap_gives_shuffle_partner() {
    for target in ["x12", "x23", "x31"] {
        let a = json(&run(&["compute", target, "--format", "json"]));
        let b = json(&run(&["compute", target, "--swap", "--format", "json"]));
        let sum = a["re"].as_f64().unwrap() + b["re"].as_f64().unwrap();
        assert!((sum - 1.0).abs() <= 1e-7, "{target}: {sum}");
        assert_ne!(a["name"], b["name"]);
    }
}

#[test]
fn compute_i123_is_pure_imaginary() {
    let doc = json(&run(&["compute", "I123", "--format", "json"]));
    assert!(doc["re"].as_f64().unwrap().abs() < 1e-9);
    assert!((doc["im"].as_f64().unwrap() + 30.609_554_987_544_49).abs() < 1e-9);
}

#[test]
fn compute_csv_has_header_and_row() {
    let text = stdout(&run(&["compute", "x12", "--format", "csv"]));
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "name,re,im,error_bound,method");
    assert!(lines[1].starts_with("x12,0.549009449536"));
    assert_eq!(lines.len(), 2);
}

#[test]
fn unknown_target_is_usage_error() {
    let o = run(&["compute", "x99"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("possible values"));
}

#[test]
fn invalid_flags_are_usage_errors() {
    assert_eq!(run(&["verify", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--tol", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-terms", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--accel", "euler"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn report_is_deterministic() {
    let a = run(&["report"]);
    let b = run(&["report"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["report", "--format", "csv"]);
    let d = run(&["report", "--format", "csv"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn report_json_schema() {
    let doc = json(&run(&["report", "--format", "json"]));
    let periods = doc["periods"].as_array().unwrap();
    assert_eq!(periods.len(), 3);
    for row in periods {
        let row = row.as_array().unwrap();
        assert_eq!(row.len(), 6);
        for p in row {
            assert!(p["normalized"]["re"].is_f64());
            assert_eq!(p["method"], "closed-form");
            assert_eq!(p["exact"].as_array().unwrap().len(), 6);
        }
    }
    let iterated = doc["iterated"].as_array().unwrap();
    assert_eq!(iterated.len(), 3);
    assert!(iterated.iter().all(|r| r.as_array().unwrap().len() == 3
        && r.as_array().unwrap().iter().all(|c| c.as_array().unwrap().len() == 7)));
    assert_eq!(doc["x_values"].as_array().unwrap().len(), 3);
    assert_eq!(doc["I123"]["brute_force"]["bound"], "heuristic");
    for key in ["value_plus", "value_minus", "twice_value_minus"] {
        let r = doc["values"][key]["representative"].as_f64().unwrap();
        assert!((0.0..1.0).contains(&r), "{key}");
    }
    let budget = doc["error_budget"].as_f64().unwrap();
    assert!(doc["I123"]["value"]["re"].as_f64().unwrap().abs() <= budget);
}

#[test]
fn report_text_is_json() {
    let a = run(&["report"]);
    let b = run(&["report", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_csv_rows_carry_method_tags() {
    let text = stdout(&run(&["report", "--format", "csv"]));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["name", "re", "im", "error_bound", "method"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    // 18 + 18 periods, 63 iterated integrals, 9 x values, 2 I123 routes, 4 values
    assert_eq!(rows.len(), 114);
    let methods: std::collections::BTreeSet<_> = rows.iter().map(|r| r[4].to_string()).collect();
    for m in ["closed-form", "brute-force", "series", "oracle"] {
        assert!(methods.contains(m), "{m}");
    }
    assert!(rows.iter().all(|r| r[1].parse::<f64>().is_ok() && r[3].parse::<f64>().is_ok()));
}

#[test]
fn report_error_is_structured_json() {
    let o = run(&["report", "--max-terms", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json(&o);
    assert_eq!(doc["error"]["kind"], "NoConvergence");
    assert!(doc["error"]["message"].as_str().unwrap().contains("5 terms"));
}
