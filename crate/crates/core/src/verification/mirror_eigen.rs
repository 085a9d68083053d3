use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::relations::theta_pow;
use crate::construction::MirroredConfiguration;
use crate::hermitian::{geodesic_through, HermitianError, Vec64};
use crate::numerics::C64;

/// Residuals of the assertions about `c₃`, `d₁`, the product `q` and the
/// geodesics `Sᵢ`, `Tᵢ`.
///
/// Both the stated scalars (`−ϑ⁻²` for `R₃c₃` and `R₃d₁`, `Arg q ≡ π/6`)
/// and the values forced by the group relation (`−ϑ²` for `R₃c₃`,
/// `Arg q ≡ 5π/6`) are reported.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MirrorEigenReport {
    /// `|R₃c₃ + ϑ⁻²c₃| / max(1, |c₃|)`.
    pub r3c3_stated: f64,
    /// `|R₃c₃ + ϑ²c₃| / max(1, |c₃|)`.
    pub r3c3_corrected: f64,
    /// `|R₃d₁ + ϑ⁻²d₁| / max(1, |d₁|)`.
    pub r3d1_stated: f64,
    /// `|R₃c₁ − c₁|`.
    pub r3c1: f64,
    /// The scalar `λ` with `R₃c₃ = λc₃`.
    pub r3c3_scalar: C64,
    /// `q = ⟨c₁,c₃⟩⟨c₃,c₂⟩/⟨c₁,c₂⟩`.
    pub q: C64,
    /// `Arg q` reduced to `[0, π)`.
    pub q_arg_mod_pi: f64,
    /// Distance of `Arg q mod π` from `π/6`.
    pub q_arg_stated: f64,
    /// Distance of `Arg q mod π` from `5π/6`.
    pub q_arg_corrected: f64,
    /// `|Im⟨c₁,c₂⟩| / |⟨c₁,c₂⟩|` and `|Im⟨c₃,c₂⟩| / |⟨c₃,c₂⟩|`.
    pub real_products: [f64; 2],
    /// `p₂`-coefficient of `R₂R₁c₁` and its closed form.
    pub p2_coefficient: C64,
    pub p2_coefficient_formula: C64,
    /// Whether `Sᵢ` and `Tᵢ` have different vertex pairs, `i = 1,2,3`.
    pub distinct_geodesics: [bool; 3],
}

fn rel(a: &Vec64, b: &Vec64) -> f64 {
    a.dist_max(b) / b.coord_norm().max(1.0)
}

fn arg_mod_pi(z: C64) -> f64 {
    z.arg().rem_euclid(PI)
}

fn angle_distance_mod_pi(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Whether the geodesics through `(a,b)` and `(c,d)` have different
/// vertex pairs.
fn distinct_vertices(
    cfg: &MirroredConfiguration,
    a: &Vec64,
    b: &Vec64,
    c: &Vec64,
    d: &Vec64,
) -> Result<bool, HermitianError> {
    let g = cfg.gram();
    let (s, _, _) = geodesic_through(g, a, b)?;
    let (t, _, _) = geodesic_through(g, c, d)?;
    let same = (s.v1.projectively_equal(&t.v1) && s.v2.projectively_equal(&t.v2))
        || (s.v1.projectively_equal(&t.v2) && s.v2.projectively_equal(&t.v1));
    Ok(!same)
}

pub fn check_mirror_eigenvectors(cfg: &MirroredConfiguration) -> Result<MirrorEigenReport, HermitianError> {
    let b = &cfg.base;
    let g = cfg.gram();
    let r3 = &cfg.mirror.r3;
    let th_m2 = theta_pow(-2);
    let th_2 = theta_pow(2);

    let r3c3 = r3.apply(&b.c3);
    let r3d1 = r3.apply(&b.d1);
    let r3c3_stated = rel(&r3c3, &(-b.c3.scale(th_m2)));
    let r3c3_corrected = rel(&r3c3, &(-b.c3.scale(th_2)));
    let r3d1_stated = rel(&r3d1, &(-b.d1.scale(th_m2)));
    let r3c1 = r3.apply(&b.c1).dist_max(&b.c1);

    let q = g.inner(&b.c1, &b.c3) * g.inner(&b.c3, &b.c2) / g.inner(&b.c1, &b.c2);
    let q_arg_mod_pi = arg_mod_pi(q);
    let k12 = g.inner(&b.c1, &b.c2);
    let k32 = g.inner(&b.c3, &b.c2);

    let p = &b.params;
    let (t, t1, t2) = (p.t, p.t1, p.t2);
    let th = b.theta;
    let num = C64::from_f64(t * t1, 0.0) - th.scale(t * t) - th.scale(t1 * t2) + (th * th).scale(t * t2);
    let p2_coefficient_formula = num.scale(1.0 / ((t1 - 1.0) * (t2 - 1.0))) + th;

    let c = [b.c1, b.c2, b.c3];
    let d = [b.d1, b.d2, b.d3];
    let mut distinct_geodesics = [false; 3];
    for i in 0..3 {
        let j = (i + 1) % 3;
        distinct_geodesics[i] = distinct_vertices(cfg, &c[i], &c[j], &d[i], &d[j])?;
    }

    Ok(MirrorEigenReport {
        r3c3_stated,
        r3c3_corrected,
        r3d1_stated,
        r3c1,
        r3c3_scalar: b.c3.ratio_to(&r3c3),
        q,
        q_arg_mod_pi,
        q_arg_stated: angle_distance_mod_pi(q_arg_mod_pi, PI / 6.0),
        q_arg_corrected: angle_distance_mod_pi(q_arg_mod_pi, 5.0 * PI / 6.0),
        real_products: [k12.im.abs() / k12.abs(), k32.im.abs() / k32.abs()],
        p2_coefficient: b.c3.coords[1],
        p2_coefficient_formula,
        distinct_geodesics,
    })
}

impl MirrorEigenReport {
    /// Every assertion as stated: `R₃c₃ = −ϑ⁻²c₃`, `R₃d₁ = −ϑ⁻²d₁`,
    /// `Arg q ≡ π/6 (mod π)`, real `⟨c₁,c₂⟩`, `⟨c₃,c₂⟩`, distinct `Sᵢ`, `Tᵢ`.
    pub fn stated_passed(&self, tol: f64) -> bool {
        self.r3c3_stated <= tol
            && self.r3d1_stated <= tol
            && self.q_arg_stated <= tol
            && self.common_passed(tol)
    }

    /// The same with `−ϑ²` for `R₃c₃` and `5π/6` for `Arg q`.
    pub fn corrected_passed(&self, tol: f64) -> bool {
        self.r3c3_corrected <= tol
            && self.r3d1_stated <= tol
            && self.q_arg_corrected <= tol
            && self.common_passed(tol)
    }

    fn common_passed(&self, tol: f64) -> bool {
        self.r3c1 <= tol
            && self.real_products.iter().all(|&r| r <= tol)
            && self.p2_coefficient.dist_max(self.p2_coefficient_formula) <= tol
            && self.p2_coefficient.abs() > tol
            && self.distinct_geodesics.iter().all(|&d| d)
    }
}
