use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::hermitian::GramContext;
use crate::numerics::{Complex, Real, SignVerdict, DEFAULT_ZERO_TOL};

/// The triple `(t, t₁, t₂)` solving
/// `t² − t t₁ + t₁² − (t₂−1)² = 0` and `2t t₁ − t − t₁ + 1 − 2t₂ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterTriple<R> {
    pub t: R,
    pub t1: R,
    pub t2: R,
}

/// `f(x) = (2t+1)(2t−3)x² − 2(2t+1)(t−1)x − (3t+1)(t−1)`, whose larger root
/// is `t₁`.
pub fn t1_quadratic<R: Real>(t: R, x: R) -> R {
    let one = R::one();
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    let a = (two * t + one) * (two * t - three);
    let b = two * (two * t + one) * (t - one);
    let c = (three * t + one) * (t - one);
    a * x * x - b * x - c
}

pub(crate) fn require_positive<R: Real>(x: R, quantity: &str) -> Result<bool, ConstructionError> {
    match x.sign_with_tol(DEFAULT_ZERO_TOL) {
        SignVerdict::Positive => Ok(true),
        SignVerdict::Negative | SignVerdict::Zero => Ok(false),
        SignVerdict::Indeterminate => Err(ConstructionError::Undecided {
            quantity: quantity.to_string(),
        }),
    }
}

/// `t₁` from the closed form and `t₂ = (2t t₁ − t − t₁ + 1)/2`.
pub fn solve_parameters<R: Real>(t: R) -> Result<ParameterTriple<R>, ConstructionError> {
    let one = R::one();
    let two = R::from_f64(2.0);
    let three = R::from_f64(3.0);
    if !require_positive(two * t - three, "t − 3/2")? {
        return Err(ConstructionError::ParameterOutOfDomain { t: t.mid() });
    }
    let d = two * t - three;
    let radicand = (two * t * t - two * t - one) * (t - one) / (two * t + one);
    let t1 = (t - one) / d + two / d * radicand.sqrt()?;
    let t2 = (two * t * t1 - t - t1 + one) / two;
    Ok(ParameterTriple { t, t1, t2 })
}

impl<R: Real> ParameterTriple<R> {
    /// Left-hand sides of the two defining equations.
    pub fn equation_residuals(&self) -> [R; 2] {
        let (t, t1, t2) = (self.t, self.t1, self.t2);
        let one = R::one();
        let two = R::from_f64(2.0);
        [
            t * t - t * t1 + t1 * t1 - (t2 - one) * (t2 - one),
            two * t * t1 - t - t1 + one - two * t2,
        ]
    }

    /// `t² + t₁² + t₂² − t t₁ t₂`, the left-hand side of condition (3);
    /// `det G = 1 − lhs`.
    pub fn condition3_lhs(&self) -> R {
        let (t, t1, t2) = (self.t, self.t1, self.t2);
        t * t + t1 * t1 + t2 * t2 - t * t1 * t2
    }
}

impl ParameterTriple<f64> {
    /// Largest relative residual of the defining equations.
    pub fn max_relative_residual(&self) -> f64 {
        let scale = self.t2 * self.t2;
        let [a, b] = self.equation_residuals();
        (a.abs() / scale).max(b.abs() / (2.0 * self.t * self.t1))
    }
}

/// Gram matrix `[[1, t₁, t], [t₁, 1, t₂ϑ̄], [t, t₂ϑ, 1]]`. Requires
/// condition (3) so that the form has signature (2,1).
pub fn build_gram<R: Real>(p: &ParameterTriple<R>) -> Result<GramContext<R>, ConstructionError> {
    let lhs = p.condition3_lhs();
    if !require_positive(lhs - R::one(), "condition (3)")? {
        return Err(ConstructionError::Condition3 { lhs: lhs.mid() });
    }
    let theta = Complex::<R>::theta()?;
    let one = Complex::one();
    let t = Complex::from_real(p.t);
    let t1 = Complex::from_real(p.t1);
    Ok(GramContext::new_unchecked([
        [one, t1, t],
        [t1, one, theta.conj().scale(p.t2)],
        [t, theta.scale(p.t2), one],
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Interval;

    #[test]
    fn published_parameters() {
        let p = solve_parameters(2.22).unwrap();
        assert!((p.t1 - 2.23).abs() < 0.005);
        assert!((p.t2 - 3.22).abs() < 0.005);
        assert!(p.max_relative_residual() < 1e-14);
        assert!(p.t2 > p.t1);
    }

    #[test]
    fn quadratic_values() {
        for t in [1.6, 2.0, 2.22, 3.5] {
            let p = solve_parameters(t).unwrap();
            assert!((t1_quadratic(t, 1.0) + 3.0 * t * t).abs() < 1e-12);
            assert!(t1_quadratic(t, p.t1).abs() < 1e-11 * t * t);
        }
    }

    #[test]
    fn rejects_small_t() {
        assert!(matches!(
            solve_parameters(1.5),
            Err(ConstructionError::ParameterOutOfDomain { .. })
        ));
        assert!(matches!(
            solve_parameters(1.2),
            Err(ConstructionError::ParameterOutOfDomain { .. })
        ));
    }

    #[test]
    fn gram_determinant_matches_condition3() {
        let p = solve_parameters(2.22).unwrap();
        let g = build_gram(&p).unwrap();
        assert!((g.det() - (1.0 - p.condition3_lhs())).abs() < 1e-12);
        assert!((p.condition3_lhs() - 4.33).abs() < 0.02 * 4.33);
        g.validate().unwrap();
    }

    #[test]
    fn enclosure_contains_point_value() {
        let x = 2.22;
        let p = solve_parameters(x).unwrap();
        let q = solve_parameters(Interval::point(x)).unwrap();
        assert!(q.t1.contains(p.t1) && q.t2.contains(p.t2));
        assert!(q.t1.width() < 1e-13);
    }

    #[test]
    fn enclosure_straddling_domain_edge_is_undecided() {
        let err = solve_parameters(Interval::new(1.4, 1.6)).unwrap_err();
        assert!(err.is_refinable());
    }
}
