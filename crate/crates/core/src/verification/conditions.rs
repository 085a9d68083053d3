use serde::{Deserialize, Serialize};

use crate::construction::{angle_arguments, TriangleConfiguration};
use crate::hermitian::HermitianError;
use crate::numerics::{
    certified_sign_with_tol, Backend, Complex, ConditionSpec, Real, RequiredSign, SignVerdict, C64,
};

/// Left-hand sides of conditions (3)–(8), in the exact normalisation of
/// their printed form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionValues<R> {
    /// `t² + t₁² + t₂² − t t₁ t₂`.
    pub lhs3: R,
    /// `4tt₁t₂ − t² − 4t₁² − 4t₂² + 4` and `4tt₁t₂ − 4t² − t₁² − 4t₂² + 4`.
    pub lhs4: [R; 2],
    /// `√3(1 + (lhs₃ − 1)/((t+1)(t₁+1)(t₂+1)))`.
    pub lhs5: R,
    /// `u = ta(c₃,d₃)`.
    pub u: R,
    /// `⟨R(m₃)w₃, R₁R₂w₃⟩`.
    pub pairing: Complex<R>,
    /// `Im(⟨b₂,f₁⟩⟨f₁,e₂⟩/⟨b₂,e₂⟩)` with `f₁ = R(q₁)R(q₃)w₃`.
    pub side: R,
    /// Real parts of the three angle arguments.
    pub lhs7: [R; 3],
    /// `Re(ϑ̄⟨p₂,c₁⟩⟨c₁,p₃⟩⟨p₃,c₂⟩⟨c₂,p₁⟩)`.
    pub lhs8: R,
}

/// Identifiers of the certified quantities, in order.
pub const CONDITION_IDS: [&str; 11] = [
    "3", "4a", "4b", "5", "6a", "6b", "6c", "7a", "7b", "7c", "8",
];

/// What each certified quantity is, for reports.
pub fn condition_description(id: &str) -> &'static str {
    match id {
        "3" => "t² + t₁² + t₂² − t t₁ t₂ − 1 > 0",
        "4a" => "4tt₁t₂ − t² − 4t₁² − 4t₂² + 4 > 0",
        "4b" => "4tt₁t₂ − 4t² − t₁² − 4t₂² + 4 > 0",
        "5" => "2 − √3(1 + (lhs₃ − 1)/((t+1)(t₁+1)(t₂+1))) > 0",
        "6a" => "u − 1 > 0",
        "6b" => "|⟨R(m₃)w₃, R₁R₂w₃⟩|² > 0",
        "6c" => "Im(⟨b₂,f₁⟩⟨f₁,e₂⟩/⟨b₂,e₂⟩) > 0",
        "7a" => "Re(⟨p₂,c₁⟩⟨c₁,p₃⟩) > 0",
        "7b" => "Re(ϑ̄⟨p₃,c₂⟩⟨c₂,p₁⟩) > 0",
        "7c" => "Re(ϑ̄⟨p₁,c₃⟩⟨c₃,p₂⟩) > 0",
        "8" => "Re(ϑ̄⟨p₂,c₁⟩⟨c₁,p₃⟩⟨p₃,c₂⟩⟨c₂,p₁⟩) > 0",
        _ => "unknown condition",
    }
}

pub fn condition_specs() -> Vec<ConditionSpec> {
    CONDITION_IDS
        .iter()
        .map(|id| ConditionSpec::new(*id, RequiredSign::Positive))
        .collect()
}

impl<R: Real> ConditionValues<R> {
    pub fn compute(cfg: &TriangleConfiguration<R>) -> Result<Self, HermitianError> {
        let p = &cfg.params;
        let (t, t1, t2) = (p.t, p.t1, p.t2);
        let one = R::one();
        let four = R::from_f64(4.0);
        let g = &cfg.gram;

        let lhs3 = p.condition3_lhs();
        let ttt = four * t * t1 * t2;
        let lhs4 = [
            ttt - t * t - four * t1 * t1 - four * t2 * t2 + four,
            ttt - four * t * t - t1 * t1 - four * t2 * t2 + four,
        ];
        let sqrt3 = R::from_f64(3.0).sqrt()?;
        let lhs5 = sqrt3 * (one + (lhs3 - one) / ((t + one) * (t1 + one) * (t2 + one)));

        let rm3 = g.reflection(&cfg.m3)?;
        let pairing = g.inner(
            &rm3.apply(&cfg.w3),
            &cfg.r1.compose(&cfg.r2).apply(&cfg.w3),
        );
        let f1 = g
            .reflection(&cfg.q1)?
            .compose(&g.reflection(&cfg.q3)?)
            .apply(&cfg.w3);
        let side = (g.inner(&cfg.b2, &f1) * g.inner(&f1, &cfg.e2) / g.inner(&cfg.b2, &cfg.e2)).im;

        let args = angle_arguments(cfg);
        let lhs7 = [args[0].re, args[1].re, args[2].re];
        let prod8 = cfg.theta.conj()
            * g.inner(&cfg.p2, &cfg.c1)
            * g.inner(&cfg.c1, &cfg.p3)
            * g.inner(&cfg.p3, &cfg.c2)
            * g.inner(&cfg.c2, &cfg.p1);

        Ok(ConditionValues {
            lhs3,
            lhs4,
            lhs5,
            u: cfg.u,
            pairing,
            side,
            lhs7,
            lhs8: prod8.re,
        })
    }

    /// The eleven quantities whose positivity is conditions (3)–(8), in
    /// [`CONDITION_IDS`] order.
    pub fn quantities(&self) -> [R; 11] {
        let one = R::one();
        [
            self.lhs3 - one,
            self.lhs4[0],
            self.lhs4[1],
            R::from_f64(2.0) - self.lhs5,
            self.u - one,
            self.pairing.norm_sqr(),
            self.side,
            self.lhs7[0],
            self.lhs7[1],
            self.lhs7[2],
            self.lhs8,
        ]
    }
}

/// One certified quantity with its sign decision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub id: String,
    pub description: String,
    /// Point value, or enclosure midpoint.
    pub value: f64,
    /// Enclosure half-width (zero for the fast backend).
    pub radius: f64,
    pub verdict: SignVerdict,
}

impl ConditionVerdict {
    pub fn passed(&self) -> bool {
        self.verdict == SignVerdict::Positive
    }
}

/// Condition values with per-condition sign verdicts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub lhs3: f64,
    pub lhs4: [f64; 2],
    pub lhs5: f64,
    pub u: f64,
    pub pairing: C64,
    pub side: f64,
    pub lhs7: [f64; 3],
    pub lhs8: f64,
    pub verdicts: Vec<ConditionVerdict>,
    pub backend: Backend,
}

impl ConditionReport {
    pub fn from_values<R: Real>(values: &ConditionValues<R>, zero_tol: f64) -> Self {
        let verdicts = CONDITION_IDS
            .iter()
            .zip(values.quantities())
            .map(|(id, q)| ConditionVerdict {
                id: id.to_string(),
                description: condition_description(id).to_string(),
                value: q.mid(),
                radius: q.rad(),
                verdict: certified_sign_with_tol(q, zero_tol),
            })
            .collect();
        ConditionReport {
            lhs3: values.lhs3.mid(),
            lhs4: values.lhs4.map(Real::mid),
            lhs5: values.lhs5.mid(),
            u: values.u.mid(),
            pairing: values.pairing.mid(),
            side: values.side.mid(),
            lhs7: values.lhs7.map(Real::mid),
            lhs8: values.lhs8.mid(),
            verdicts,
            backend: R::BACKEND,
        }
    }

    pub fn all_positive(&self) -> bool {
        self.verdicts.iter().all(ConditionVerdict::passed)
    }

    /// First condition (in order) that is not certified positive.
    pub fn first_failure(&self) -> Option<&ConditionVerdict> {
        self.verdicts.iter().find(|v| !v.passed())
    }
}

/// Evaluates conditions (3)–(8) on a configuration of either backend.
pub fn evaluate_conditions<R: Real>(
    cfg: &TriangleConfiguration<R>,
    zero_tol: f64,
) -> Result<ConditionReport, HermitianError> {
    Ok(ConditionReport::from_values(
        &ConditionValues::compute(cfg)?,
        zero_tol,
    ))
}
