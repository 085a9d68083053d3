use serde::{Deserialize, Serialize};

use super::geodesic::{closest_point_on_geodesic, GeodesicParam};
use super::gram::GramContext;
use super::isometry::Iso64;
use super::matrix;
use super::vector::Vec64;
use super::HermitianError;
use crate::numerics::C64;

/// Tolerance on `R(g′)∘R(g) − I`, relative to the largest entry of `I`.
pub const DECOMPOSITION_TOL: f64 = 1e-9;

/// How to pick the first reflection point on the axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AxisMode {
    /// The axis point closest to the complex geodesic polar to `p`.
    ClosestTo(Vec64),
    /// A given point of the axis.
    AtPoint(Vec64),
}

/// `I = R(g′)∘R(g)` with `g, g′` on the axis of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoxodromicDecomposition {
    pub g: Vec64,
    pub g_prime: Vec64,
    /// The eigenvalue `r > 1` with `tr I = 1 + r + r⁻¹`.
    pub r: f64,
    /// Axis with `v₁` the `r`-eigenvector and `v₂` the `r⁻¹`-eigenvector.
    pub axis: GeodesicParam,
    /// Eigenvector for the eigenvalue 1 (polar to the complex geodesic
    /// containing the axis).
    pub polar: Vec64,
    pub residual: f64,
}

/// Kernel vector of the rank-2 matrix `m − λ·Id`, taken as the adjugate
/// column of largest norm.
fn eigenvector(m: &matrix::Mat3<f64>, lambda: f64) -> Result<Vec64, HermitianError> {
    let shifted = matrix::sub(m, &matrix::scalar(C64::from_f64(lambda, 0.0)));
    let adj = matrix::adjugate(&shifted);
    let mut best = (0.0, 0);
    for j in 0..3 {
        let norm: f64 = (0..3).map(|i| adj[i][j].norm_sqr()).sum();
        if norm > best.0 {
            best = (norm, j);
        }
    }
    let scale = matrix::max_abs(&shifted).max(1.0);
    if best.0.sqrt() <= 1e-10 * scale * scale {
        return Err(HermitianError::DegenerateEigenspace { eigenvalue: lambda });
    }
    let j = best.1;
    Ok(Vec64::new([adj[0][j], adj[1][j], adj[2][j]]))
}

/// Writes a loxodromic `I ∈ SU V` as a product of two point reflections on
/// its axis.
///
/// Requires `tr I` real and greater than 3. The eigenvalues are `1, r, r⁻¹`
/// with `tr I = 1 + r + r⁻¹`; the eigenvectors for `r`, `r⁻¹` are the axis
/// vertices. For `g = α v₁ + α⁻¹ v₂` the second point is
/// `g′ = α√r v₁ + (α√r)⁻¹ v₂`.
pub fn loxodromic_decompose(
    gram: &GramContext<f64>,
    iso: &Iso64,
    mode: AxisMode,
) -> Result<LoxodromicDecomposition, HermitianError> {
    let tr = iso.trace();
    if iso.antilinear || tr.im.abs() > 1e-9 * tr.abs().max(1.0) || tr.re <= 3.0 {
        return Err(HermitianError::TraceNotLoxodromic {
            re: tr.re,
            im: tr.im,
        });
    }
    let s = tr.re - 1.0;
    let r = (s + (s * s - 4.0).sqrt()) / 2.0;
    let v1 = eigenvector(&iso.m, r)?;
    let v2 = eigenvector(&iso.m, 1.0 / r)?;
    let polar = eigenvector(&iso.m, 1.0)?;
    let axis = GeodesicParam::from_vertices(gram, v1, v2)?;
    let sr = r.sqrt();

    let (g, g_prime) = match mode {
        AxisMode::ClosestTo(p) => {
            let cp = closest_point_on_geodesic(gram, &axis, &p)?;
            // the renormalised geodesic may list the vertices the other way round
            let step = if cp.geodesic.v1.projectively_equal(&axis.v1) { sr } else { 1.0 / sr };
            (cp.point, cp.geodesic.point(cp.x * step))
        }
        AxisMode::AtPoint(g) => {
            // g = α v₁ + β v₂ with α·conj(β) > 0 when g is on the axis
            let alpha = gram.inner(&g, &axis.v2).scale(-2.0);
            let beta = gram.inner(&g, &axis.v1).scale(-2.0);
            let rho = alpha * beta.conj();
            if rho.re <= 0.0 || rho.im.abs() > 1e-8 * rho.abs() {
                return Err(HermitianError::NotOnAxis);
            }
            let w1 = axis.v1.scale(alpha);
            let w2 = axis.v2.scale(beta);
            if !(w1 + w2).projectively_equal(&g) {
                return Err(HermitianError::NotOnAxis);
            }
            (g, w1.scale_real(sr) + w2.scale_real(1.0 / sr))
        }
    };

    let product = gram.reflection(&g_prime)?.compose(&gram.reflection(&g)?);
    let residual = product.distance(iso) / matrix::max_abs(&iso.m).max(1.0);
    if residual > DECOMPOSITION_TOL {
        return Err(HermitianError::Residual { residual });
    }
    Ok(LoxodromicDecomposition {
        g,
        g_prime,
        r,
        axis,
        polar,
        residual,
    })
}
