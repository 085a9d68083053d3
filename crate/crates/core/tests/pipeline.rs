use chyp_core::numerics::{Backend, Certificate, ReplayError, DEFAULT_ZERO_TOL};
use chyp_core::verification::{
    certify_conditions, condition_enclosures, csv_header, scan, verify, write_csv,
    VerificationReport, VerifyOptions, CONDITION_IDS,
};

#[test]
fn default_failures_are_the_three_stated_identities() {
    let r = verify(&VerifyOptions::default()).unwrap();
    let failed: Vec<&str> = r.failures().map(|v| v.name.as_str()).collect();
    assert_eq!(failed, ["mirror-eigenvectors", "toledo", "ledger"]);
    assert!(!r.passed);
    // the corrected identities all hold
    assert!(r.mirror_eigen.corrected_passed(1e-9));
    assert!(r.toledo.as_ref().unwrap().self_consistent(1e-6));
}

#[test]
fn json_report_round_trips() {
    let r = verify(&VerifyOptions::default()).unwrap();
    let json = r.to_json();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back.to_json(), json);
    assert_eq!(back.verdicts, r.verdicts);
}

#[test]
fn off_published_parameter_skips_the_table() {
    let r = verify(&VerifyOptions {
        t: 2.3,
        ..VerifyOptions::default()
    })
    .unwrap();
    assert!(r.published.is_empty());
    assert!(r.conditions.all_positive());
    assert!(r.relations.passed(1e-9));
}

#[test]
fn tampered_certificates_are_rejected() {
    let cert = certify_conditions(2.2, 2.24, 20).unwrap();
    cert.replay(&condition_enclosures).unwrap();

    let text = cert.to_text();
    let parsed = Certificate::from_text(&text).unwrap();
    assert_eq!(parsed, cert);

    let mut gap = cert.clone();
    gap.leaves.remove(0);
    assert!(matches!(
        gap.replay(&condition_enclosures),
        Err(ReplayError::Coverage { .. })
    ));

    // stretching the domain past the certified range leaves it uncovered
    let mut wider = cert.clone();
    wider.domain.1 = 2.5;
    assert!(wider.replay(&condition_enclosures).is_err());

    let mut renamed = cert;
    renamed.leaves[0].condition = "nope".into();
    assert!(renamed.replay(&condition_enclosures).is_err());
}

#[test]
fn scan_csv_is_rectangular() {
    let rows = scan(2.0, 2.4, 9, Backend::Fast, DEFAULT_ZERO_TOL).unwrap();
    assert_eq!(rows.len(), 9);
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();

    let mut rdr = csv::Reader::from_reader(buf.as_slice());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, csv_header());
    for id in CONDITION_IDS {
        assert!(header.iter().any(|h| h == &format!("v{id}")), "{id}");
    }
    let records: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 9);
    assert!(records.iter().all(|r| r.len() == header.len()));

    // inside the certified window every condition holds, outside some fails
    let col = header.iter().position(|h| h == "all_positive").unwrap();
    let flags: Vec<&str> = records.iter().map(|r| r.get(col).unwrap()).collect();
    assert_eq!(flags[0], "false");
    assert_eq!(flags[4], "true");
}

#[test]
fn rigorous_point_enclosures_agree_with_fast_values() {
    let fast = verify(&VerifyOptions::default()).unwrap();
    let rig = verify(&VerifyOptions {
        backend: Backend::Rigorous,
        ..VerifyOptions::default()
    })
    .unwrap();
    assert_eq!(fast.conditions.all_positive(), rig.conditions.all_positive());
    assert!((fast.conditions.lhs8 - rig.conditions.lhs8).abs() < 1e-9 * fast.conditions.lhs8);
}
