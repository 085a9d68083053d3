//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 4, 5 and 10 fail on the computed data (the stated `R₃c₃`
//! scalar, `Arg q` and the sign of `τ` disagree with the construction).
//! They are reported as FAIL and listed in `KNOWN_FAILING`. The binary
//! exits nonzero if any other criterion fails, or if a known failure
//! starts passing.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chyp_core::build_configuration;
use chyp_core::cake::build_cake;
use chyp_core::construction::angles;
use chyp_core::numerics::{Interval, DEFAULT_ZERO_TOL};
use chyp_core::verification::{
    certify_conditions, check_relation, condition_enclosures, evaluate_conditions, grid, verify,
    CERTIFY_RANGE, DEFAULT_MAX_DEPTH, PUBLISHED_T,
};
use chyp_core::verification::{VerificationReport, VerifyOptions};
use chyp_core::TriangleConfiguration;
use common::*;

const KNOWN_FAILING: [u32; 3] = [4, 5, 10];
const TOL: f64 = 1e-9;
const TRIALS: usize = 1000;
const SEED: u64 = 0x5eed_2022;

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn published_report() -> VerificationReport {
    verify(&VerifyOptions::default()).expect("configuration at the published parameter")
}

/// Whether every condition holds with a rigorous point enclosure at `t`.
fn certified_at(t: f64) -> bool {
    let Ok(enc) = TriangleConfiguration::build(Interval::point(t)) else {
        return false;
    };
    evaluate_conditions(&enc, DEFAULT_ZERO_TOL).is_ok_and(|r| r.all_positive())
}

fn c1_published_table(r: &VerificationReport) -> Outcome {
    let bad: Vec<String> = r
        .published
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} printed {} computed {:.4}", c.label, c.printed, c.computed))
        .collect();
    let worst = r
        .published
        .iter()
        .map(|c| c.deviation / c.printed.abs().max(1.0))
        .fold(0.0, f64::max);
    outcome(
        r.published.len() == 14 && bad.is_empty(),
        if bad.is_empty() {
            format!("14 values, worst relative deviation {worst:.2e}")
        } else {
            bad.join("; ")
        },
    )
}

fn c2_group_relation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ts = vec![PUBLISHED_T];
    ts.extend((0..20).map(|_| rng.gen_range(CERTIFY_RANGE.0..=CERTIFY_RANGE.1)));
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for t in &ts {
        match build_configuration(*t) {
            Ok(cfg) => {
                let r = check_relation(&cfg);
                worst = worst.max(r.relation_residual).max(r.square_residual);
                if !r.passed(TOL) || r.square_scalar_residual > TOL {
                    bad.push(format!("t={t:.6}"));
                }
            }
            Err(e) => bad.push(format!("t={t:.6}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} parameters, worst residual {worst:.2e}{}", ts.len(), list(&bad)),
    )
}

fn c3_angle_sum() -> Outcome {
    let ts = grid(CERTIFY_RANGE.0, CERTIFY_RANGE.1, 50).unwrap();
    let mut used = 0;
    let mut worst: f64 = 0.0;
    for t in ts.into_iter().chain([PUBLISHED_T]) {
        if !certified_at(t) {
            continue;
        }
        let cfg = build_configuration(t).unwrap();
        match angles(&cfg.base) {
            Ok(b) => worst = worst.max((b.iter().sum::<f64>() - FRAC_PI_2).abs()),
            Err(_) => worst = f64::INFINITY,
        }
        used += 1;
    }
    outcome(
        used > 0 && worst < TOL,
        format!("{used} certified parameters, worst |Σβ − π/2| {worst:.2e}"),
    )
}

fn c4_toledo(r: &VerificationReport) -> Outcome {
    match &r.toledo {
        Some(t) => outcome(
            t.matches_published(r.options.tolerances.snap),
            format!(
                "tracked τ = {} (raw {:.9}), branches {} and {}, selected {:?}; expected −8/3 with rejected branch 40/3",
                t.tau,
                t.tau_raw,
                t.branch_candidates[0],
                t.branch_candidates[1],
                t.branch_selected.map(|s| s.to_string()),
            ),
        ),
        None => outcome(false, "tracking failed"),
    }
}

fn c5_euler_ledger(r: &VerificationReport) -> Outcome {
    let (Some(e), Some(l)) = (&r.euler, &r.ledger) else {
        return outcome(false, "side test or ledger unavailable");
    };
    let euler_ok = e.euler == 0 && e.divisible_by_eight && e.side > 0.0;
    outcome(
        euler_ok && l.passed(),
        format!(
            "e = {} (side {:.4}); genus 3: 2(χ+e) = {} vs 3τ = {}; genus 2: {} vs {}",
            e.euler, e.side, l.genus3.lhs, l.genus3.rhs, l.genus2.lhs, l.genus2.rhs
        ),
    )
}

fn c6_certification() -> Outcome {
    let start = Instant::now();
    match certify_conditions(CERTIFY_RANGE.0, CERTIFY_RANGE.1, DEFAULT_MAX_DEPTH) {
        Ok(cert) => {
            let replay = cert.replay(&condition_enclosures);
            let roundtrip = chyp_core::numerics::Certificate::from_text(&cert.to_text())
                .map(|c| c == cert)
                .unwrap_or(false);
            outcome(
                replay.is_ok() && roundtrip && cert.domain == CERTIFY_RANGE,
                format!(
                    "{} leaves over [{}, {}], min width {:.1e}, replay {}, {:.1} s",
                    cert.leaves.len(),
                    CERTIFY_RANGE.0,
                    CERTIFY_RANGE.1,
                    cert.min_leaf_width(),
                    if replay.is_ok() { "ok" } else { "failed" },
                    start.elapsed().as_secs_f64()
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

/// Runs `trial` until `TRIALS` inputs are accepted; returns the worst
/// residual.
fn suite(rng: &mut ChaCha8Rng, mut trial: impl FnMut(&mut ChaCha8Rng) -> Option<f64>) -> (usize, f64) {
    let mut accepted = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..50 * TRIALS {
        if accepted == TRIALS {
            break;
        }
        if let Some(r) = trial(rng) {
            accepted += 1;
            worst = worst.max(if r.is_nan() { f64::INFINITY } else { r });
        }
    }
    (accepted, worst)
}

fn c7_property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let form = |rng: &mut ChaCha8Rng| uniform(rng, FORM_LEN);
    let pt = |rng: &mut ChaCha8Rng| uniform(rng, POINT_LEN);
    let mut lines = Vec::new();
    let mut ok = true;
    let mut record = |name: &str, (n, worst): (usize, f64), tol: f64| {
        ok &= n == TRIALS && worst < tol;
        lines.push(format!("{name} {n}/{worst:.1e}"));
    };

    record(
        "trace",
        suite(&mut rng, |r| {
            let (f, a, b, c) = (form(r), pt(r), pt(r), pt(r));
            let s = [r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)];
            check_trace_identities(&f, s, [&a, &b, &c])
        }),
        TRACE_TOL,
    );
    record(
        "closed-forms",
        suite(&mut rng, |r| {
            let u: Vec<f64> = uniform(r, 4);
            check_spine_closed_forms([u[0], u[1], u[2], u[3]])
        }),
        RESIDUAL_TOL,
    );
    record(
        "loxodromic",
        suite(&mut rng, |r| {
            let (f, a, b, p) = (form(r), pt(r), pt(r), pt(r));
            check_loxodromic_roundtrip(&f, &a, &b, &p)
        }),
        RESIDUAL_TOL,
    );
    record(
        "closest-point",
        suite(&mut rng, |r| {
            let (f, a, b, p) = (form(r), pt(r), pt(r), pt(r));
            check_closest_point(&f, &a, &b, &p).map(|(s, e)| s.max(e))
        }),
        RESIDUAL_TOL,
    );
    record(
        "reflection",
        suite(&mut rng, |r| {
            let (f, p) = (form(r), pt(r));
            check_reflection(&f, r.gen_range(-1.0..1.0), &p)
        }),
        RESIDUAL_TOL,
    );
    record(
        "tance",
        suite(&mut rng, |r| {
            let (f, x, y) = (form(r), pt(r), pt(r));
            let (q1, q2, q3) = (pt(r), pt(r), pt(r));
            let s: Vec<f64> = uniform(r, 5);
            check_tance_invariance(&f, &x, &y, [&q1, &q2, &q3], [s[0], s[1], s[2], s[3], s[4]])
        }),
        RESIDUAL_TOL,
    );
    outcome(ok, format!("trials/worst: {}", lines.join(", ")))
}

/// Whether the construction's own preconditions hold with a rigorous point
/// enclosure at `t`.
fn preconditions_at(t: f64) -> bool {
    TriangleConfiguration::build(Interval::point(t)).is_ok()
}

fn c8_construction_invariants() -> Outcome {
    let (lo, hi) = (1.6, 3.6);
    let mut used = 0;
    let mut bad = Vec::new();
    let mut worst = [0.0f64; 5];
    for t in grid(lo, hi, 50).unwrap() {
        if !preconditions_at(t) {
            continue;
        }
        let cfg = match build_configuration(t) {
            Ok(c) => c,
            Err(e) => {
                bad.push(format!("t={t:.4}: {e}"));
                continue;
            }
        };
        used += 1;
        let inv = cfg.base.invariants();
        let p = &cfg.base.params;
        let row = [
            inv.equations,
            inv.middle_norms,
            inv.w3_isotropy,
            inv.twisted_trace,
            cfg.mirror.gram_conjugacy_residual,
        ];
        for (w, v) in worst.iter_mut().zip(row) {
            *w = w.max(v);
        }
        if inv.equations >= 1e-11 || row[1..].iter().any(|&v| !(v < TOL)) || !(p.t2 > p.t1) {
            bad.push(format!("t={t:.4}"));
        }
    }
    outcome(
        used >= 10 && bad.is_empty(),
        format!(
            "{used}/50 grid points in [{lo}, {hi}]; worst equations {:.1e}, ⟨m,m⟩+1 {:.1e}, ⟨w₃,w₃⟩ {:.1e}, trace {:.1e}, conjugacy {:.1e}{}",
            worst[0],
            worst[1],
            worst[2],
            worst[3],
            worst[4],
            list(&bad)
        ),
    )
}

fn c9_cake(r: &VerificationReport) -> Outcome {
    let cake = &r.cake;
    let s = match build_cake() {
        Ok(s) => s,
        Err(e) => return outcome(false, e.to_string()),
    };
    let counts = s.matches_expected_counts() && cake.structure.matches_expected_counts();
    let tables_ok = cake.mapping_tables.iter().all(|m| m.passed());
    let control_false = !cake.negative_control.observed && cake.negative_control.passed();
    let idents_ok = cake.identifications.len() == 8 && cake.identifications.iter().all(|i| i.passed);
    let h5 = &cake.h5;
    let h5_ok = h5.passed && h5.product_theta_residual < TOL;
    outcome(
        counts && tables_ok && control_false && idents_ok && h5_ok,
        format!(
            "{} pairs, {} cycles, χ = {}, genus {:?}; tables {}/{}; control {}; identifications {}/{}; H5 scalar {:.4}{:+.4}i",
            s.edge_pairs,
            s.vertex_cycles.len(),
            s.euler_characteristic,
            s.genus,
            cake.mapping_tables.iter().filter(|m| m.passed()).count(),
            cake.mapping_tables.len(),
            if cake.negative_control.observed { "true" } else { "false" },
            cake.identifications.iter().filter(|i| i.passed).count(),
            cake.identifications.len(),
            h5.product_scalar.re,
            h5.product_scalar.im,
        ),
    )
}

fn c10_mirror_eigenvectors(r: &VerificationReport) -> Outcome {
    let c = &r.mirror_eigen;
    outcome(
        c.stated_passed(TOL),
        format!(
            "R₃c₃ vs −ϑ⁻²c₃ {:.2e} (vs −ϑ²c₃ {:.2e}); R₃d₁ {:.2e}; Arg q mod π = {:.6} (π/6 off by {:.2e}, 5π/6 off by {:.2e}); distinct {:?}",
            c.r3c3_stated,
            c.r3c3_corrected,
            c.r3d1_stated,
            c.q_arg_mod_pi,
            c.q_arg_stated,
            c.q_arg_corrected,
            c.distinct_geodesics,
        ),
    )
}

fn list(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join(", "))
    }
}

fn main() -> ExitCode {
    let report = published_report();
    let criteria: Vec<Criterion> = vec![
        (1, "published table", Box::new(|| c1_published_table(&report))),
        (2, "group relation", Box::new(c2_group_relation)),
        (3, "angle sum", Box::new(c3_angle_sum)),
        (4, "toledo invariant", Box::new(|| c4_toledo(&report))),
        (5, "euler number and ledger", Box::new(|| c5_euler_ledger(&report))),
        (6, "interval certification", Box::new(c6_certification)),
        (7, "identity property suites", Box::new(c7_property_suites)),
        (8, "construction invariants", Box::new(c8_construction_invariants)),
        (9, "cake audit", Box::new(|| c9_cake(&report))),
        (10, "mirror eigenvectors", Box::new(|| c10_mirror_eigenvectors(&report))),
    ];

    let mut unexpected = Vec::new();
    for (id, name, run) in &criteria {
        let o = run();
        let known = KNOWN_FAILING.contains(id);
        println!(
            "criterion {id:>2} {}: {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if o.passed == known {
            unexpected.push(*id);
        }
    }
    let passed = criteria.len() - KNOWN_FAILING.len();
    if unexpected.is_empty() {
        println!("acceptance: {passed}/10 PASS, known failures {KNOWN_FAILING:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
