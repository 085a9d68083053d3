use std::process::{Command, Output};

fn chyp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chyp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_defaults_report_published_values() {
    let o = chyp(&["verify"]);
    let out = stdout(&o);
    assert!(out.contains("PASS published-values"), "{out}");
    assert!(out.contains("PASS conditions"));
    assert!(out.contains("PASS cake-counts"));
    // exit status is 0 exactly when every verdict passes
    let all_pass = out.contains("overall PASS");
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }));
    if !all_pass {
        assert!(stderr(&o).contains("FAIL "));
    }
}

#[test]
fn verify_json_is_stable() {
    let a = chyp(&["verify", "--format", "json"]);
    let b = chyp(&["verify", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["options"]["t"], 2.22);
    assert_eq!(v["conditions"]["backend"], "fast");
}

#[test]
fn verify_near_domain_edge_names_the_failing_condition() {
    let o = chyp(&["verify", "--t", "1.55"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("FAIL conditions: condition (4a)"), "{err}");
}

#[test]
fn verify_outside_domain_is_a_usage_error() {
    let o = chyp(&["verify", "--t", "1.4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("t > 3/2"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(chyp(&["verify", "--backend", "exact"]).status.code(), Some(2));
    assert_eq!(chyp(&["verify", "--tol-abs", "-1"]).status.code(), Some(2));
    assert_eq!(chyp(&["scan", "--lo", "2.3", "--hi", "2.2"]).status.code(), Some(2));
    assert_eq!(chyp(&["scan", "--steps", "0"]).status.code(), Some(2));
    assert_eq!(chyp(&["certify", "--lo", "2.3", "--hi", "2.3"]).status.code(), Some(2));
    assert_eq!(chyp(&["cake", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn scan_csv_over_published_range() {
    let o = chyp(&["scan", "--lo", "2.13", "--hi", "2.34", "--steps", "22"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 23);
    assert!(lines[0].starts_with("t,t1,t2,lhs3,"));
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));
}

#[test]
fn single_point_scan_matches_verify_csv() {
    let scan = chyp(&["scan", "--lo", "2.22", "--hi", "2.3", "--steps", "1"]);
    let verify = chyp(&["verify", "--format", "csv"]);
    assert_eq!(scan.stdout, verify.stdout);
}

#[test]
fn certify_writes_a_replayable_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.txt");
    let o = chyp(&[
        "certify",
        "--lo",
        "2.13",
        "--hi",
        "2.34",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let cert = chyp_core::numerics::Certificate::from_text(&text).unwrap();
    assert_eq!(cert.domain, (2.13, 2.34));
    cert.replay(&chyp_core::verification::condition_enclosures).unwrap();
    assert!(stdout(&o).contains("certificate written"));
}

#[test]
fn certify_below_domain_fails() {
    let o = chyp(&["certify", "--lo", "1.2", "--hi", "1.4", "--max-depth", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cake_audit() {
    let o = chyp(&["cake"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("edge_pairs 8"));
    assert!(out.contains("genus 3"));
    let j = chyp(&["cake", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["structure"]["edge_pairs"], 8);
    assert_eq!(v["identifications"].as_array().unwrap().len(), 8);
}
