use serde::{Deserialize, Serialize};

use super::gram::GramContext;
use super::vector::Vec64;
use super::HermitianError;
use crate::numerics::C64;

/// Absolute differences between the closed-form pairing and trace formulas
/// for reflections and the directly computed values.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceResiduals {
    /// `⟨R(x₂)x₁,x₁⟩` against `(2 ta(x₁,x₂) − 1)⟨x₁,x₁⟩`.
    pub pairing: f64,
    /// `tr R(x₂)R(x₁)` against `4 ta(x₁,x₂) − 1`.
    pub pair_trace: f64,
    /// `tr R(x₃)R(x₂)R(x₁)` against
    /// `8⟨x₁,x₂⟩⟨x₂,x₃⟩⟨x₃,x₁⟩/(⟨x₁,x₁⟩⟨x₂,x₂⟩⟨x₃,x₃⟩) − 4ta₁₂ − 4ta₂₃ − 4ta₃₁ + 3`.
    pub triple_trace: f64,
}

impl TraceResiduals {
    pub fn max(&self) -> f64 {
        self.pairing.max(self.pair_trace).max(self.triple_trace)
    }
}

pub fn trace_identities_check(
    gram: &GramContext<f64>,
    x1: &Vec64,
    x2: &Vec64,
    x3: &Vec64,
) -> Result<TraceResiduals, HermitianError> {
    let r1 = gram.reflection(x1)?;
    let r2 = gram.reflection(x2)?;
    let r3 = gram.reflection(x3)?;
    let ta12 = gram.tance(x1, x2)?;
    let ta23 = gram.tance(x2, x3)?;
    let ta31 = gram.tance(x3, x1)?;
    let n1 = gram.norm(x1);

    let lhs = gram.inner(&r2.apply(x1), x1);
    let pairing = lhs.dist_max(C64::from_f64((2.0 * ta12 - 1.0) * n1, 0.0));

    let tr2 = r2.compose(&r1).trace();
    let pair_trace = tr2.dist_max(C64::from_f64(4.0 * ta12 - 1.0, 0.0));

    let tr3 = r3.compose(&r2).compose(&r1).trace();
    let cyc = gram.inner(x1, x2) * gram.inner(x2, x3) * gram.inner(x3, x1);
    let norms = n1 * gram.norm(x2) * gram.norm(x3);
    let formula = cyc.scale(8.0 / norms)
        - C64::from_f64(4.0 * (ta12 + ta23 + ta31) - 3.0, 0.0);
    let triple_trace = tr3.dist_max(formula);

    Ok(TraceResiduals {
        pairing,
        pair_trace,
        triple_trace,
    })
}

/// Closed form of `Re(⟨p₁,m₂⟩⟨m₁,m₁⟩ / (⟨m₁,m₂⟩⟨p₁,m₁⟩))` for the Gram
/// shape `[[1,t₁,t],[t₁,1,t₂λ̄],[t,t₂λ,1]]` with `m₁ ∝ p₁ − p₂`,
/// `m₂ ∝ λp₂ − p₃`.
pub fn spine_pairing_real_part(t: f64, t1: f64, t2: f64, lambda: C64) -> f64 {
    let re = lambda.re;
    let num = t * t - t * t1 + t1 * t1 - (t2 - 1.0).powi(2) + t * t1 * (1.0 - 2.0 * re);
    let s = t1 + t2 - 1.0;
    let den = s * s + t * t - 2.0 * t * s * re;
    1.0 + num / den
}

/// Closed form of `tr R(m₂)R(m₁)R(p₁)` for the same Gram shape.
pub fn spine_triple_trace(t: f64, t1: f64, t2: f64, lambda: C64) -> C64 {
    let re = lambda.re;
    let a = (lambda.conj() - C64::one()).scale(2.0 * t);
    let b = (2.0 * t * t1 - t - t1 + 1.0 - 2.0 * t2) / (t1 - 1.0);
    let c = (t * t - t * t1 + t1 * t1 - (t2 - 1.0).powi(2)
        + t * (t1 + t2 - 1.0) * (1.0 - 2.0 * re))
        / ((t1 - 1.0) * (t2 - 1.0));
    a + C64::from_f64(b - c, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda_gram(t: f64, t1: f64, t2: f64, lambda: C64) -> GramContext<f64> {
        GramContext::new_unchecked([
            [C64::one(), C64::new(t1, 0.0), C64::new(t, 0.0)],
            [C64::new(t1, 0.0), C64::one(), lambda.conj().scale(t2)],
            [C64::new(t, 0.0), lambda.scale(t2), C64::one()],
        ])
    }

    #[test]
    fn equal_arguments_give_reflection_trace() {
        let g = lambda_gram(2.22, 2.23, 3.22, C64::theta().unwrap());
        let x = Vec64::basis(0);
        let res = trace_identities_check(&g, &x, &x, &x).unwrap();
        assert!(res.max() < 1e-12);
        let r = g.reflection(&x).unwrap();
        // eigenvalues 1, −1, −1
        assert!((r.compose(&r).compose(&r).trace().re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn spine_closed_forms_match_direct_values() {
        let (t, t1, t2) = (2.5, 1.9, 2.7);
        for phi in [0.3, 1.0, 2.0, -1.2] {
            let lambda = C64::from_polar(1.0, phi);
            let g = lambda_gram(t, t1, t2, lambda);
            let p1 = Vec64::basis(0);
            let p2 = Vec64::basis(1);
            let p3 = Vec64::basis(2);
            let m1 = (p1 - p2).scale_real(1.0 / (2.0 * (t1 - 1.0)).sqrt());
            let m2 = (p2.scale(lambda) - p3).scale_real(1.0 / (2.0 * (t2 - 1.0)).sqrt());
            let direct = (g.inner(&p1, &m2) * C64::from_f64(g.norm(&m1), 0.0)
                / (g.inner(&m1, &m2) * g.inner(&p1, &m1)))
            .re;
            assert!((direct - spine_pairing_real_part(t, t1, t2, lambda)).abs() < 1e-9);
            let tr = g
                .reflection(&m2)
                .unwrap()
                .compose(&g.reflection(&m1).unwrap())
                .compose(&g.reflection(&p1).unwrap())
                .trace();
            assert!(tr.dist_max(spine_triple_trace(t, t1, t2, lambda)) < 1e-9);
        }
    }
}
