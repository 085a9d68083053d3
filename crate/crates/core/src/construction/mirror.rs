use serde::{Deserialize, Serialize};

use super::config::TriangleConfiguration;
use super::ConstructionError;
use crate::hermitian::{
    loxodromic_decompose, matrix, stationarity_residual, AxisMode, GramContext, Iso64, Isometry,
    Vec64,
};
use crate::numerics::C64;

/// Tolerance for the mirror construction's self-checks.
pub const MIRROR_TOL: f64 = 1e-9;

/// The decomposition `ϑ²R₂R₁R₀ = R(m′₂)R(m′₁)` and the real reflection
/// `R₃` it yields.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MirrorData {
    /// `tr(ϑ²R₂R₁R₀)`, which should equal `2t`.
    pub twisted_trace: C64,
    /// Eigenvalue `r > 1` of `ϑ²R₂R₁R₀`.
    pub r: f64,
    pub m1p: Vec64,
    pub m2p: Vec64,
    /// `p′₂ = −R(m′₁)p₁`.
    pub p2p: Vec64,
    /// The antilinear map `a p₁ + b p₂ + c p₃ ↦ ā p₁ + b̄ p′₂ + c̄ p₃`.
    pub r3: Iso64,
    /// `|R(m′₂)R(m′₁) − ϑ²R₂R₁R₀|`.
    pub decomposition_residual: f64,
    /// `Re(⟨p₁,m′₂⟩⟨m′₁,m′₁⟩ / (⟨m′₁,m′₂⟩⟨p₁,m′₁⟩)) − 1`.
    pub stationarity_residual: f64,
    /// `|Gram(p₁,p′₂,p₃) − conj Gram(p₁,p₂,p₃)|`.
    pub gram_conjugacy_residual: f64,
    /// `|R₃∘R₃ − Id|`.
    pub r3_square_residual: f64,
    /// Form-preservation residual of `R₃` (antilinear).
    pub r3_form_residual: f64,
}

fn gram_of(gram: &GramContext<f64>, vs: [&Vec64; 3]) -> matrix::Mat3<f64> {
    let mut out = [[C64::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = gram.inner(vs[i], vs[j]);
        }
    }
    out
}

fn check(check: &str, residual: f64) -> Result<(), ConstructionError> {
    if residual <= MIRROR_TOL {
        Ok(())
    } else {
        Err(ConstructionError::Residual {
            check: check.to_string(),
            residual,
        })
    }
}

/// Decomposes `ϑ²R₂R₁R₀` at the axis point closest to `C₁` and builds the
/// real reflection `R₃` from the conjugate Gram matrices.
pub fn mirror_construction(
    cfg: &TriangleConfiguration<f64>,
) -> Result<MirrorData, ConstructionError> {
    let g = &cfg.gram;
    let twisted = cfg.twisted_product();
    let dec = loxodromic_decompose(g, &twisted, AxisMode::ClosestTo(cfg.p1))?;
    let (m1p, m2p) = (dec.g, dec.g_prime);
    let p2p = -g.reflection(&m1p)?.apply(&cfg.p1);

    let gram_conjugacy_residual = matrix::max_dist(
        &gram_of(g, [&cfg.p1, &p2p, &cfg.p3]),
        &matrix::conj(g.matrix()),
    );
    check("Gram conjugacy", gram_conjugacy_residual)?;

    let mut columns = [[C64::zero(); 3]; 3];
    for i in 0..3 {
        columns[i][0] = cfg.p1.coords[i];
        columns[i][1] = p2p.coords[i];
        columns[i][2] = cfg.p3.coords[i];
    }
    let r3 = Isometry::antilinear(columns);
    let r3_square_residual = r3.compose(&r3).distance(&Isometry::identity());
    check("R₃²", r3_square_residual)?;
    let r3_form_residual = r3.form_residual(g);
    check("R₃ form", r3_form_residual)?;

    let stationarity = stationarity_residual(g, &cfg.p1, &m1p, &m2p);
    Ok(MirrorData {
        twisted_trace: twisted.trace(),
        r: dec.r,
        m1p,
        m2p,
        p2p,
        r3,
        decomposition_residual: dec.residual,
        stationarity_residual: stationarity,
        gram_conjugacy_residual,
        r3_square_residual,
        r3_form_residual,
    })
}

/// A configuration together with its mirror data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MirroredConfiguration {
    pub base: TriangleConfiguration<f64>,
    pub mirror: MirrorData,
}

impl MirroredConfiguration {
    pub fn t(&self) -> f64 {
        self.base.params.t
    }

    pub fn gram(&self) -> &GramContext<f64> {
        &self.base.gram
    }

    /// The reflections `R₀, R₁, R₂, R₃`.
    pub fn generators(&self) -> [Iso64; 4] {
        [self.base.r0, self.base.r1, self.base.r2, self.mirror.r3]
    }
}

/// Full point-backend construction: base configuration plus mirror data.
pub fn build_configuration(t: f64) -> Result<MirroredConfiguration, ConstructionError> {
    let base = TriangleConfiguration::build(t)?;
    let mirror = mirror_construction(&base)?;
    Ok(MirroredConfiguration { base, mirror })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_at_published_parameter() {
        let cfg = build_configuration(2.22).unwrap();
        let m = &cfg.mirror;
        assert!(m.twisted_trace.dist_max(C64::from_f64(4.44, 0.0)) < 1e-9);
        assert!(m.decomposition_residual < 1e-10);
        assert!(m.stationarity_residual.abs() < 1e-9);
        assert!(m.gram_conjugacy_residual < 1e-9);
        assert!(m.r3.antilinear);
        assert!((cfg.gram().norm(&m.m1p) + 1.0).abs() < 1e-9);
    }

    #[test]
    fn r3_fixes_real_points() {
        let cfg = build_configuration(2.22).unwrap();
        let c1 = cfg.base.c1;
        assert!(cfg.mirror.r3.apply(&c1).dist_max(&c1) < 1e-12);
        assert!(cfg.mirror.r3.apply(&cfg.base.p2).dist_max(&cfg.mirror.p2p) < 1e-12);
    }
}
