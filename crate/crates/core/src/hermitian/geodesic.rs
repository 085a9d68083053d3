use serde::{Deserialize, Serialize};

use super::gram::GramContext;
use super::vector::Vec64;
use super::HermitianError;
use crate::numerics::C64;

/// A geodesic `G[v₁,v₂]` given by isotropic vertices with
/// `⟨v₁,v₂⟩ = −1/2`, so that `g(x) = x·v₁ + x⁻¹·v₂` satisfies
/// `⟨g(x),g(x)⟩ = −1` for every `x > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeodesicParam {
    pub v1: Vec64,
    pub v2: Vec64,
}

impl GeodesicParam {
    /// Builds the parametrisation from two isotropic vectors, rescaling `v₂`
    /// so that `⟨v₁,v₂⟩ = −1/2`.
    pub fn from_vertices(
        gram: &GramContext<f64>,
        v1: Vec64,
        v2: Vec64,
    ) -> Result<Self, HermitianError> {
        let k = gram.inner(&v1, &v2);
        if k.abs() <= 1e-14 * v1.coord_norm() * v2.coord_norm() {
            return Err(HermitianError::CoincidentPoints);
        }
        // ⟨v₁, s·v₂⟩ = conj(s)·k
        let v2 = v2.scale((C64::from_f64(-0.5, 0.0) / k).conj());
        Ok(GeodesicParam { v1, v2 })
    }

    pub fn point(&self, x: f64) -> Vec64 {
        self.v1.scale_real(x) + self.v2.scale_real(1.0 / x)
    }

    /// The `x > 0` with `v ∝ g(x)`, if `v` lies on the geodesic.
    ///
    /// Writing `v = α·v₁ + β·v₂` gives `α = −2⟨v,v₂⟩`, `β = −2⟨v,v₁⟩`; the
    /// point lies on the geodesic when `α/β` is a positive real.
    pub fn parameter_of(&self, gram: &GramContext<f64>, v: &Vec64) -> Option<f64> {
        let alpha = gram.inner(v, &self.v2).scale(-2.0);
        let beta = gram.inner(v, &self.v1).scale(-2.0);
        if beta.abs() == 0.0 {
            return None;
        }
        let ratio = alpha / beta;
        if ratio.re <= 0.0 || ratio.im.abs() > 1e-8 * ratio.abs() {
            return None;
        }
        let x = ratio.abs().sqrt();
        self.point(x).projectively_equal(v).then_some(x)
    }

    /// The same geodesic traversed in the opposite direction (`x ↦ 1/x`).
    pub fn reversed(&self) -> Self {
        GeodesicParam {
            v1: self.v2,
            v2: self.v1,
        }
    }
}

/// The geodesic through the nonpositive points `a`, `b`, oriented so that
/// `a = g(x_a)` and `b = g(x_b)` projectively with `x_a < x_b`.
///
/// Returns the parametrisation together with `(x_a, x_b)`. An isotropic
/// endpoint gets the parameter `0` or `∞`.
pub fn geodesic_through(
    gram: &GramContext<f64>,
    a: &Vec64,
    b: &Vec64,
) -> Result<(GeodesicParam, f64, f64), HermitianError> {
    if a.projectively_equal(b) {
        return Err(HermitianError::CoincidentPoints);
    }
    let k = gram.inner(a, b);
    let scale = gram.norm_scale(a).sqrt() * gram.norm_scale(b).sqrt();
    if k.abs() <= 1e-12 * scale {
        return Err(HermitianError::NoRealGeodesic);
    }
    // rotate b so that ⟨a,b⟩ is real negative: ⟨a, s·b⟩ = conj(s)·k
    let b = b.scale(-k.scale(1.0 / k.abs()));
    let big_a = gram.norm(a);
    let big_b = gram.norm(&b);
    let big_k = gram.inner(a, &b).re;
    let tol = super::gram::ISOTROPIC_TOL;
    if big_a > tol * gram.norm_scale(a) || big_b > tol * gram.norm_scale(&b) {
        return Err(HermitianError::NoRealGeodesic);
    }
    let disc = big_k * big_k - big_a * big_b;
    if disc <= 1e-12 * big_k * big_k {
        return Err(HermitianError::NoRealGeodesic);
    }
    let d = disc.sqrt();
    let a_iso = big_a.abs() <= tol * gram.norm_scale(a);
    let b_iso = big_b.abs() <= tol * gram.norm_scale(&b);
    // isotropic directions α·a + β·b of the real form [[A,K],[K,B]]
    let (v1, v2) = if a_iso && b_iso {
        (*a, b)
    } else if big_a.abs() >= big_b.abs() {
        (
            a.scale_real(-big_k - d) + b.scale_real(big_a),
            a.scale_real(-big_k + d) + b.scale_real(big_a),
        )
    } else {
        (
            a.scale_real(big_b) + b.scale_real(-big_k + d),
            a.scale_real(big_b) + b.scale_real(-big_k - d),
        )
    };
    let geo = GeodesicParam::from_vertices(gram, v1, v2)?;
    let xa = endpoint_parameter(gram, &geo, a);
    let xb = endpoint_parameter(gram, &geo, &b);
    if xa < xb {
        Ok((geo, xa, xb))
    } else {
        Ok((geo.reversed(), 1.0 / xa, 1.0 / xb))
    }
}

/// `√(α/β)` for `v = α·v₁ + β·v₂` in the real span of the vertices.
fn endpoint_parameter(gram: &GramContext<f64>, geo: &GeodesicParam, v: &Vec64) -> f64 {
    let alpha = gram.inner(v, &geo.v2).scale(-2.0).abs();
    let beta = gram.inner(v, &geo.v1).scale(-2.0).abs();
    (alpha / beta).sqrt()
}

/// Point of a geodesic closest to the complex geodesic polar to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosestPoint {
    /// The closest point `g(x*)`.
    pub point: Vec64,
    /// The parameter `x* = √|z|` in the renormalised geodesic.
    pub x: f64,
    /// The geodesic rescaled so that `⟨p,v₁⟩ = 1` (and `⟨v₁,v₂⟩ = −1/2`).
    pub geodesic: GeodesicParam,
    /// `z = ⟨p,v₂⟩` in that normalisation.
    pub z: C64,
}

/// Closest point of the geodesic to the complex geodesic polar to the
/// positive vector `p`.
///
/// With `⟨p,v₁⟩ = 1`, `⟨v₁,v₂⟩ = −1/2` and `z = ⟨p,v₂⟩`, the function
/// `ta(g(x),p)` equals `−(x² + 2 Re z + |z|²x⁻²)/⟨p,p⟩`, minimised at
/// `x = √|z|`.
pub fn closest_point_on_geodesic(
    gram: &GramContext<f64>,
    geo: &GeodesicParam,
    p: &Vec64,
) -> Result<ClosestPoint, HermitianError> {
    // vertex not orthogonal to p goes first
    let (mut v1, mut v2) = (geo.v1, geo.v2);
    let k1 = gram.inner(p, &v1);
    let k2 = gram.inner(p, &v2);
    if k1.abs() < k2.abs() {
        std::mem::swap(&mut v1, &mut v2);
    }
    let k1 = gram.inner(p, &v1);
    if k1.abs() <= 1e-14 * v1.coord_norm() {
        return Err(HermitianError::RealityHypothesis);
    }
    // ⟨p, s·v₁⟩ = conj(s)·k₁ = 1
    let s = (C64::one() / k1).conj();
    let v1 = v1.scale(s);
    let k = gram.inner(&v1, &v2);
    let v2 = v2.scale((C64::from_f64(-0.5, 0.0) / k).conj());
    let normalized = GeodesicParam { v1, v2 };
    let z = gram.inner(p, &v2);
    if z.abs() <= 1e-14 || z.im.abs() <= 1e-12 * z.abs() {
        // z real: the pairing ratio of any two geodesic points is real
        return Err(HermitianError::RealityHypothesis);
    }
    let x = z.abs().sqrt();
    Ok(ClosestPoint {
        point: normalized.point(x),
        x,
        geodesic: normalized,
        z,
    })
}

/// `Re(⟨p,g′⟩⟨y,y⟩ / (⟨y,g′⟩⟨p,y⟩)) − 1`, which vanishes exactly when `y`
/// is the point of the geodesic closest to the complex geodesic polar to
/// `p` (for any other point `g′` of the geodesic).
pub fn stationarity_residual(gram: &GramContext<f64>, p: &Vec64, y: &Vec64, other: &Vec64) -> f64 {
    let num = gram.inner(p, other) * C64::from_f64(gram.norm(y), 0.0);
    let den = gram.inner(y, other) * gram.inner(p, y);
    (num / den).re - 1.0
}
