use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::conditions::{evaluate_conditions, ConditionReport};
use super::mirror_eigen::{check_mirror_eigenvectors, MirrorEigenReport};
use super::euler::{euler_side_test, EulerReport};
use super::ledger::{invariant_ledger, rational_to_f64, InvariantLedger};
use super::relations::{check_relation, RelationReport};
use super::toledo::{toledo, ToledoReport, TOLEDO_SAMPLES};
use super::VerificationError;
use crate::cake::{
    build_cake, c1_angle_cycle, cross_check, h5_presentation_check, negative_control,
    verify_identifications, verify_mapping_tables, AngleCycle, CakeStructure, CrossCheck, H5Check,
    IdentificationCheck, MappingCheck,
};
use crate::construction::{
    angles, build_configuration, ConfigInvariants, MirroredConfiguration, TriangleConfiguration,
};
use crate::numerics::{Backend, Interval, DEFAULT_ZERO_TOL};

/// Version of the serialized report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Parameter of the published numeric table.
pub const PUBLISHED_T: f64 = 2.22;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Relative tolerance against printed two-decimal values.
    pub published_rel: f64,
    /// Absolute tolerance for matrix and vector residuals.
    pub residual_abs: f64,
    /// Values with magnitude below this are treated as zero.
    pub zero_tol: f64,
    /// Maximum distance of the tracked Toledo value from its snapped value.
    pub snap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            published_rel: 0.02,
            residual_abs: 1e-9,
            zero_tol: DEFAULT_ZERO_TOL,
            snap: 1e-6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub t: f64,
    pub backend: Backend,
    pub tolerances: Tolerances,
    pub toledo_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            t: PUBLISHED_T,
            backend: Backend::Fast,
            tolerances: Tolerances::default(),
            toledo_samples: TOLEDO_SAMPLES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterSection {
    pub t: f64,
    pub t1: f64,
    pub t2: f64,
}

/// A computed value against its printed two-decimal counterpart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PublishedCheck {
    pub label: String,
    pub printed: f64,
    pub computed: f64,
    pub deviation: f64,
    pub passed: bool,
}

impl PublishedCheck {
    pub fn relative(label: &str, printed: f64, computed: f64, rel: f64) -> Self {
        let deviation = (computed - printed).abs();
        PublishedCheck {
            label: label.to_string(),
            printed,
            computed,
            deviation,
            passed: deviation <= rel * printed.abs().max(1.0),
        }
    }

    /// Equality after rounding to two decimals.
    pub fn rounded(label: &str, printed: f64, computed: f64) -> Self {
        let deviation = (computed - printed).abs();
        PublishedCheck {
            label: label.to_string(),
            printed,
            computed,
            deviation,
            passed: ((computed * 100.0).round() - (printed * 100.0).round()).abs() < 0.5,
        }
    }
}

/// The printed table, compared with the computed condition values.
pub fn published_checks(
    params: &ParameterSection,
    c: &ConditionReport,
    rel: f64,
) -> Vec<PublishedCheck> {
    let p = |label, printed, computed| PublishedCheck::relative(label, printed, computed, rel);
    vec![
        PublishedCheck::rounded("t1", 2.23, params.t1),
        PublishedCheck::rounded("t2", 3.22, params.t2),
        p("lhs3", 4.33, c.lhs3),
        p("lhs4a", 1.44, c.lhs4[0]),
        p("lhs4b", 1.56, c.lhs4[1]),
        p("lhs5", 1.86, c.lhs5),
        p("u", 1.43, c.u),
        p("pairing_re", -7.63, c.pairing.re),
        p("pairing_im", -4.41, c.pairing.im),
        p("side", 3.68, c.side),
        p("lhs7a", 13.11, c.lhs7[0]),
        p("lhs7b", 29.62, c.lhs7[1]),
        p("lhs7c", 31.05, c.lhs7[2]),
        p("lhs8", 248.24, c.lhs8),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleSection {
    pub betas: [f64; 3],
    pub sum: f64,
    /// `|β₁ + β₂ + β₃ − π/2|`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MirrorSection {
    pub r: f64,
    pub decomposition_residual: f64,
    pub stationarity_residual: f64,
    pub gram_conjugacy_residual: f64,
    pub r3_square_residual: f64,
    pub r3_form_residual: f64,
}

impl MirrorSection {
    fn max_residual(&self) -> f64 {
        self.decomposition_residual
            .max(self.stationarity_residual.abs())
            .max(self.gram_conjugacy_residual)
            .max(self.r3_square_residual)
            .max(self.r3_form_residual)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CakeSection {
    pub structure: CakeStructure,
    pub mapping_tables: Vec<MappingCheck>,
    pub negative_control: MappingCheck,
    pub identifications: Vec<IdentificationCheck>,
    pub h5: H5Check,
    pub cross_check: CrossCheck,
    pub angle_cycle: Option<AngleCycle>,
}

/// A named pass/fail line of the report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Everything `verify` computes, in a fixed order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub options: VerifyOptions,
    pub parameters: ParameterSection,
    pub conditions: ConditionReport,
    /// Empty unless `t` is the published parameter.
    pub published: Vec<PublishedCheck>,
    pub invariants: ConfigInvariants,
    pub mirror: MirrorSection,
    pub relations: RelationReport,
    pub mirror_eigen: MirrorEigenReport,
    pub angles: Option<AngleSection>,
    pub toledo: Option<ToledoReport>,
    pub euler: Option<EulerReport>,
    pub ledger: Option<InvariantLedger>,
    pub cake: CakeSection,
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
}

fn cake_section(cfg: &MirroredConfiguration) -> Result<CakeSection, VerificationError> {
    let structure = build_cake()?;
    let cross = cross_check(&structure, cfg);
    Ok(CakeSection {
        mapping_tables: verify_mapping_tables(cfg),
        negative_control: negative_control(cfg),
        identifications: verify_identifications(cfg),
        h5: h5_presentation_check(cfg),
        cross_check: cross,
        angle_cycle: c1_angle_cycle(cfg).ok(),
        structure,
    })
}

fn conditions_for(
    cfg: &MirroredConfiguration,
    backend: Backend,
    zero_tol: f64,
) -> Result<ConditionReport, VerificationError> {
    Ok(match backend {
        Backend::Fast => evaluate_conditions(&cfg.base, zero_tol)?,
        Backend::Rigorous => {
            let enc = TriangleConfiguration::build(Interval::point(cfg.t()))?;
            evaluate_conditions(&enc, zero_tol)?
        }
    })
}

/// Runs the full pipeline at one parameter.
///
/// Fails only when the configuration cannot be built; every later check is
/// recorded as a verdict.
pub fn verify(options: &VerifyOptions) -> Result<VerificationReport, VerificationError> {
    let tol = options.tolerances;
    let cfg = build_configuration(options.t)?;
    let base = &cfg.base;
    let parameters = ParameterSection {
        t: base.params.t,
        t1: base.params.t1,
        t2: base.params.t2,
    };
    let conditions = conditions_for(&cfg, options.backend, tol.zero_tol)?;
    let published = if options.t == PUBLISHED_T {
        published_checks(&parameters, &conditions, tol.published_rel)
    } else {
        Vec::new()
    };
    let invariants = base.invariants();
    let m = &cfg.mirror;
    let mirror = MirrorSection {
        r: m.r,
        decomposition_residual: m.decomposition_residual,
        stationarity_residual: m.stationarity_residual,
        gram_conjugacy_residual: m.gram_conjugacy_residual,
        r3_square_residual: m.r3_square_residual,
        r3_form_residual: m.r3_form_residual,
    };
    let relations = check_relation(&cfg);
    let mirror_eigen = check_mirror_eigenvectors(&cfg)?;
    let angle_section = angles(base).ok().map(|betas| {
        let sum = betas.iter().sum::<f64>();
        AngleSection {
            betas,
            sum,
            residual: (sum - FRAC_PI_2).abs(),
        }
    });
    let toledo_result = toledo(&cfg, options.toledo_samples);
    let side_value = match options.backend {
        Backend::Fast => euler_side_test(conditions.side, tol.zero_tol),
        Backend::Rigorous => {
            let v = conditions
                .verdicts
                .iter()
                .find(|v| v.id == "6c")
                .expect("side condition present");
            euler_side_test(Interval::new(v.value - v.radius, v.value + v.radius), tol.zero_tol)
        }
    };
    let cake = cake_section(&cfg)?;
    let ledger = match (&toledo_result, &side_value) {
        (Ok(tr), Ok(er)) => Some(invariant_ledger(
            cake.structure.euler_characteristic,
            er.euler,
            tr.tau,
            angle_section.map_or(f64::NAN, |a| a.sum),
            relations.relation_residual,
        )),
        _ => None,
    };

    let mut verdicts = Vec::new();
    let inv_max = [
        invariants.equations,
        invariants.middle_norms,
        invariants.spine_images,
        invariants.w3_isotropy,
        invariants.twisted_trace,
        invariants.r0_c1,
        mirror.max_residual(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    verdicts.push(Verdict::new(
        "construction",
        inv_max <= tol.residual_abs,
        format!("max residual {inv_max:.3e}"),
    ));
    verdicts.push(Verdict::new(
        "conditions",
        conditions.all_positive(),
        match conditions.first_failure() {
            Some(f) => format!("condition ({}) is {}: {}", f.id, f.verdict.as_str(), f.description),
            None => "all eleven quantities certified positive".to_string(),
        },
    ));
    if !published.is_empty() {
        let bad: Vec<&str> = published
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.label.as_str())
            .collect();
        verdicts.push(Verdict::new(
            "published-values",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{} values within tolerance", published.len())
            } else {
                format!("mismatch: {}", bad.join(", "))
            },
        ));
    }
    verdicts.push(Verdict::new(
        "group-relation",
        relations.passed(tol.residual_abs),
        format!(
            "residual {:.3e}, square residual {:.3e}",
            relations.relation_residual, relations.square_residual
        ),
    ));
    verdicts.push(match &angle_section {
        Some(a) => Verdict::new(
            "angle-sum",
            a.residual <= tol.residual_abs,
            format!("sum {:.12}, residual {:.3e}", a.sum, a.residual),
        ),
        None => Verdict::new("angle-sum", false, "angles undefined"),
    });
    verdicts.push(Verdict::new(
        "mirror-eigenvectors",
        mirror_eigen.stated_passed(tol.residual_abs),
        format!(
            "R3c3 = ({:.6}, {:.6})·c3; Arg q mod π = {:.9}",
            mirror_eigen.r3c3_scalar.re, mirror_eigen.r3c3_scalar.im, mirror_eigen.q_arg_mod_pi
        ),
    ));
    verdicts.push(match &toledo_result {
        Ok(tr) => Verdict::new(
            "toledo",
            tr.matches_published(tol.snap),
            format!(
                "tau = {} (tracked {:.9}), candidates {} and {}",
                tr.tau, tr.tau_raw, tr.branch_candidates[0], tr.branch_candidates[1]
            ),
        ),
        Err(e) => Verdict::new("toledo", false, e.to_string()),
    });
    verdicts.push(match &side_value {
        Ok(er) => Verdict::new(
            "euler",
            er.euler == 0 && er.divisible_by_eight,
            format!("side {:.6} gives e = {}", er.side, er.euler),
        ),
        Err(e) => Verdict::new("euler", false, e.to_string()),
    });
    verdicts.push(match &ledger {
        Some(l) => Verdict::new(
            "ledger",
            l.passed(),
            format!(
                "genus 3: 2(chi+e) = {}, 3tau = {}; genus 2: 2(chi+e) = {}, 3tau = {}",
                l.genus3.lhs, l.genus3.rhs, l.genus2.lhs, l.genus2.rhs
            ),
        ),
        None => Verdict::new("ledger", false, "toledo or euler unavailable"),
    });
    let tables_ok = cake.mapping_tables.iter().all(MappingCheck::passed);
    verdicts.push(Verdict::new(
        "mapping-tables",
        tables_ok && cake.negative_control.passed(),
        format!(
            "{}/{} statements, negative control observed {}",
            cake.mapping_tables.iter().filter(|c| c.passed()).count(),
            cake.mapping_tables.len(),
            cake.negative_control.observed
        ),
    ));
    verdicts.push(Verdict::new(
        "identifications",
        cake.identifications.iter().all(|c| c.passed),
        format!(
            "{}/{} pairings",
            cake.identifications.iter().filter(|c| c.passed).count(),
            cake.identifications.len()
        ),
    ));
    verdicts.push(Verdict::new(
        "h5-presentation",
        cake.h5.passed,
        format!(
            "product scalar ({:.6}, {:.6})",
            cake.h5.product_scalar.re, cake.h5.product_scalar.im
        ),
    ));
    let s = &cake.structure;
    verdicts.push(Verdict::new(
        "cake-counts",
        s.matches_expected_counts(),
        format!(
            "{} vertex cycles, {} edge pairs, chi {}, genus {}",
            s.vertex_cycles.len(),
            s.edge_pairs,
            s.euler_characteristic,
            s.genus.map_or("-".to_string(), |g| g.to_string())
        ),
    ));
    verdicts.push(Verdict::new(
        "cake-cross-check",
        cake.cross_check.passed(),
        format!("{} mismatches", cake.cross_check.mismatches.len()),
    ));
    verdicts.push(match &cake.angle_cycle {
        Some(a) => Verdict::new(
            "c1-angle-cycle",
            a.residual <= tol.residual_abs,
            format!("total {:.12}", a.total),
        ),
        None => Verdict::new("c1-angle-cycle", false, "angles undefined"),
    });

    let passed = verdicts.iter().all(|v| v.passed);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        options: *options,
        parameters,
        conditions,
        published,
        invariants,
        mirror,
        relations,
        mirror_eigen,
        angles: angle_section,
        toledo: toledo_result.ok(),
        euler: side_value.ok(),
        ledger,
        cake,
        verdicts,
        passed,
    })
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering: one `key value` pair per line, grouped into
    /// bracketed sections in a fixed order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let o = &self.options;
        let tl = &o.tolerances;
        let _ = writeln!(s, "[header]");
        let _ = writeln!(s, "schema_version {}", self.schema_version);
        let _ = writeln!(s, "command verify");
        let _ = writeln!(s, "t {}", o.t);
        let _ = writeln!(s, "backend {}", o.backend.as_str());
        let _ = writeln!(s, "toledo_samples {}", o.toledo_samples);

        let p = &self.parameters;
        let _ = writeln!(s, "\n[parameters]");
        let _ = writeln!(s, "t {:.12}\nt1 {:.12}\nt2 {:.12}", p.t, p.t1, p.t2);

        let c = &self.conditions;
        let _ = writeln!(s, "\n[conditions]");
        let _ = writeln!(s, "lhs3 {:.6}", c.lhs3);
        let _ = writeln!(s, "lhs4 {:.6} {:.6}", c.lhs4[0], c.lhs4[1]);
        let _ = writeln!(s, "lhs5 {:.6}", c.lhs5);
        let _ = writeln!(s, "lhs6 {:.6} ({:.6} {:+.6}i) {:.6}", c.u, c.pairing.re, c.pairing.im, c.side);
        let _ = writeln!(s, "lhs7 {:.6} {:.6} {:.6}", c.lhs7[0], c.lhs7[1], c.lhs7[2]);
        let _ = writeln!(s, "lhs8 {:.6}", c.lhs8);
        for v in &c.verdicts {
            let _ = writeln!(
                s,
                "condition {:<3} {:<20} value {:.6e} radius {:.3e}",
                v.id,
                v.verdict.as_str(),
                v.value,
                v.radius
            );
        }

        if !self.published.is_empty() {
            let _ = writeln!(s, "\n[published]");
            for pc in &self.published {
                let _ = writeln!(
                    s,
                    "{:<11} printed {:>8.2} computed {:>12.6} {}",
                    pc.label,
                    pc.printed,
                    pc.computed,
                    if pc.passed { "ok" } else { "MISMATCH" }
                );
            }
        }

        let i = &self.invariants;
        let m = &self.mirror;
        let _ = writeln!(s, "\n[invariants]");
        let _ = writeln!(s, "equations {:.3e}", i.equations);
        let _ = writeln!(s, "middle_norms {:.3e}", i.middle_norms);
        let _ = writeln!(s, "spine_images {:.3e}", i.spine_images);
        let _ = writeln!(s, "w3_isotropy {:.3e}", i.w3_isotropy);
        let _ = writeln!(s, "twisted_trace {:.3e}", i.twisted_trace);
        let _ = writeln!(s, "r0_c1 {:.3e}", i.r0_c1);
        let _ = writeln!(s, "mirror_eigenvalue {:.12}", m.r);
        let _ = writeln!(s, "mirror_decomposition {:.3e}", m.decomposition_residual);
        let _ = writeln!(s, "mirror_stationarity {:.3e}", m.stationarity_residual);
        let _ = writeln!(s, "gram_conjugacy {:.3e}", m.gram_conjugacy_residual);
        let _ = writeln!(s, "r3_square {:.3e}", m.r3_square_residual);
        let _ = writeln!(s, "r3_form {:.3e}", m.r3_form_residual);

        let r = &self.relations;
        let _ = writeln!(s, "\n[relations]");
        let _ = writeln!(s, "linear {}", r.linear);
        let _ = writeln!(s, "relation_residual {:.3e}", r.relation_residual);
        let _ = writeln!(s, "square_scalar {:.12} {:+.12}i", r.square_scalar.re, r.square_scalar.im);
        let _ = writeln!(s, "square_residual {:.3e}", r.square_residual);

        let k = &self.mirror_eigen;
        let _ = writeln!(s, "\n[mirror-eigenvectors]");
        let _ = writeln!(s, "r3c3_scalar {:.12} {:+.12}i", k.r3c3_scalar.re, k.r3c3_scalar.im);
        let _ = writeln!(s, "r3c3_vs_minus_theta_inv2 {:.3e}", k.r3c3_stated);
        let _ = writeln!(s, "r3c3_vs_minus_theta2 {:.3e}", k.r3c3_corrected);
        let _ = writeln!(s, "r3d1_vs_minus_theta_inv2 {:.3e}", k.r3d1_stated);
        let _ = writeln!(s, "r3c1 {:.3e}", k.r3c1);
        let _ = writeln!(s, "q {:.9} {:+.9}i", k.q.re, k.q.im);
        let _ = writeln!(s, "arg_q_mod_pi {:.12}", k.q_arg_mod_pi);
        let _ = writeln!(s, "arg_q_vs_pi_6 {:.3e}", k.q_arg_stated);
        let _ = writeln!(s, "arg_q_vs_5pi_6 {:.3e}", k.q_arg_corrected);
        let _ = writeln!(s, "distinct_geodesics {:?}", k.distinct_geodesics);

        let _ = writeln!(s, "\n[angles]");
        match &self.angles {
            Some(a) => {
                let _ = writeln!(s, "betas {:.12} {:.12} {:.12}", a.betas[0], a.betas[1], a.betas[2]);
                let _ = writeln!(s, "sum {:.12}\nresidual {:.3e}", a.sum, a.residual);
            }
            None => {
                let _ = writeln!(s, "unavailable");
            }
        }

        let _ = writeln!(s, "\n[toledo]");
        match &self.toledo {
            Some(t) => {
                let _ = writeln!(s, "tau {}", t.tau);
                let _ = writeln!(s, "tau_tracked {:.12}", t.tau_raw);
                let _ = writeln!(s, "snap_deviation {:.3e}", t.snap_deviation);
                let _ = writeln!(s, "refinement_change {:.3e}", t.refinement_change);
                let _ = writeln!(s, "end_argument {:.12}", t.end_argument);
                let _ = writeln!(
                    s,
                    "branch_candidates {} {}",
                    t.branch_candidates[0], t.branch_candidates[1]
                );
                let _ = writeln!(
                    s,
                    "branch_selected {}",
                    t.branch_selected.map_or("none".to_string(), |x| x.to_string())
                );
                let _ = writeln!(s, "other_sides {:.3e} {:.3e}", t.other_sides[0], t.other_sides[1]);
            }
            None => {
                let _ = writeln!(s, "unavailable");
            }
        }

        let _ = writeln!(s, "\n[euler]");
        match &self.euler {
            Some(e) => {
                let _ = writeln!(s, "side {:.12}\nverdict {}\neuler {}", e.side, e.verdict.as_str(), e.euler);
            }
            None => {
                let _ = writeln!(s, "unavailable");
            }
        }

        let _ = writeln!(s, "\n[ledger]");
        match &self.ledger {
            Some(l) => {
                for e in [&l.genus3, &l.genus2] {
                    let _ = writeln!(
                        s,
                        "genus {} chi {} euler {} tau {} ({:.6}) 2(chi+e) {} 3tau {} {}",
                        e.genus,
                        e.chi,
                        e.euler,
                        e.tau,
                        rational_to_f64(e.tau),
                        e.lhs,
                        e.rhs,
                        if e.relation_holds { "holds" } else { "VIOLATED" }
                    );
                }
            }
            None => {
                let _ = writeln!(s, "unavailable");
            }
        }

        let ck = &self.cake;
        let _ = writeln!(s, "\n[cake]");
        let _ = writeln!(
            s,
            "mapping_tables {}/{}",
            ck.mapping_tables.iter().filter(|c| c.passed()).count(),
            ck.mapping_tables.len()
        );
        let _ = writeln!(
            s,
            "negative_control {} observed {}",
            ck.negative_control.statement, ck.negative_control.observed
        );
        for id in &ck.identifications {
            let _ = writeln!(
                s,
                "{} {} {} -> {} residual {:.3e} {}",
                id.name,
                id.notation,
                id.source,
                id.target,
                id.endpoint_residuals[0].max(id.endpoint_residuals[1]),
                if id.passed { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            s,
            "h5_product_scalar {:.12} {:+.12}i",
            ck.h5.product_scalar.re, ck.h5.product_scalar.im
        );
        let st = &ck.structure;
        let _ = writeln!(s, "vertex_cycles {}", st.vertex_cycles.len());
        let _ = writeln!(s, "edge_pairs {}", st.edge_pairs);
        let _ = writeln!(s, "euler_characteristic {}", st.euler_characteristic);
        let _ = writeln!(s, "genus {}", st.genus.map_or("-".to_string(), |g| g.to_string()));
        let _ = writeln!(s, "cross_check_mismatches {}", ck.cross_check.mismatches.len());
        if let Some(a) = &ck.angle_cycle {
            let _ = writeln!(s, "c1_angle_total {:.12}", a.total);
        }

        let _ = writeln!(s, "\n[tolerances]");
        let _ = writeln!(s, "published_rel {}", tl.published_rel);
        let _ = writeln!(s, "residual_abs {:e}", tl.residual_abs);
        let _ = writeln!(s, "zero_tol {:e}", tl.zero_tol);
        let _ = writeln!(s, "snap {:e}", tl.snap);

        let _ = writeln!(s, "\n[backend]");
        let _ = writeln!(s, "{}", self.conditions.backend.as_str());

        let _ = writeln!(s, "\n[verdicts]");
        for v in &self.verdicts {
            let _ = writeln!(
                s,
                "{} {:<20} {}",
                if v.passed { "PASS" } else { "FAIL" },
                v.name,
                v.detail
            );
        }
        let _ = writeln!(s, "overall {}", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}
