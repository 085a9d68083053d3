use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cake::{realize_word, Letter, Word};
use crate::construction::MirroredConfiguration;
use crate::hermitian::{matrix, Isometry};
use crate::numerics::C64;

/// The group relation and its projective square.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    /// `R₃R₁R₂R₃R₂R₁R₀` is linear (two antilinear letters).
    pub linear: bool,
    /// `max |R₃R₁R₂R₃R₂R₁R₀ − ϑ⁻²·Id|`.
    pub relation_residual: f64,
    /// The scalar `c` nearest to `R₃R₁R₂R₃R₂R₁R₀`.
    pub relation_scalar: C64,
    /// The scalar nearest to `(R₃R₁R₂R₃R₂R₁)²`.
    pub square_scalar: C64,
    /// Distance of `(R₃R₁R₂R₃R₂R₁)²` from the nearest scalar matrix.
    pub square_scalar_residual: f64,
    /// `max |(R₃R₁R₂R₃R₂R₁)² − ϑ²·Id|`.
    pub square_residual: f64,
    /// `|c − 1|` for the square's scalar; nonzero means the relation does
    /// not lift to `SU`.
    pub square_distance_from_one: f64,
}

pub fn theta_pow(k: i32) -> C64 {
    C64::from_polar(1.0, k as f64 * PI / 3.0)
}

pub fn relation_word() -> Word {
    use Letter::*;
    Word::new(vec![R3, R1, R2, R3, R2, R1, R0])
}

pub fn check_relation(cfg: &MirroredConfiguration) -> RelationReport {
    use Letter::*;
    let gens = cfg.generators();
    let rel = realize_word(&relation_word(), &gens);
    let half = realize_word(&Word::new(vec![R3, R1, R2, R3, R2, R1]), &gens);
    let sq = half.compose(&half);

    let relation_residual = rel.distance(&Isometry::scalar(theta_pow(-2)));
    let square_residual = sq.distance(&Isometry::scalar(theta_pow(2)));
    let square_scalar = matrix::trace(&sq.m).scale(1.0 / 3.0);
    RelationReport {
        linear: !rel.antilinear,
        relation_residual,
        relation_scalar: matrix::trace(&rel.m).scale(1.0 / 3.0),
        square_scalar,
        square_scalar_residual: sq.scalar_residual(),
        square_residual,
        square_distance_from_one: square_scalar.dist_max(C64::one()),
    }
}

impl RelationReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.linear
            && self.relation_residual <= tol
            && self.square_residual <= tol
            && self.square_distance_from_one > 0.5
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build_configuration;

    #[test]
    fn relation_at_published_parameter() {
        let cfg = build_configuration(2.22).unwrap();
        let r = check_relation(&cfg);
        assert!(r.linear);
        assert!(r.relation_residual < 1e-9, "{}", r.relation_residual);
        assert!(r.square_residual < 1e-9);
        assert!(r.square_scalar.dist_max(theta_pow(2)) < 1e-9);
        assert!(r.passed(1e-9));
    }

    #[test]
    fn theta_powers() {
        assert!(theta_pow(6).dist_max(C64::one()) < 1e-15);
        assert!((theta_pow(1) * theta_pow(-1)).dist_max(C64::one()) < 1e-15);
        // ϑ² = ϑ − 1
        assert!(theta_pow(2).dist_max(theta_pow(1) - C64::one()) < 1e-15);
    }
}
