use serde::{Deserialize, Serialize};

use super::params::{build_gram, require_positive, solve_parameters, ParameterTriple};
use super::ConstructionError;
use crate::hermitian::{GramContext, Isometry, ProjVector, Vec64};
use crate::numerics::{Complex, Real, C64};

/// Every object derived from the parameter `t`, in the basis `p₁, p₂, p₃`.
///
/// Representatives follow the defining formulas exactly (no
/// renormalisation), since several condition values depend on them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleConfiguration<R> {
    pub params: ParameterTriple<R>,
    pub gram: GramContext<R>,
    pub theta: Complex<R>,
    pub p1: ProjVector<R>,
    pub p2: ProjVector<R>,
    pub p3: ProjVector<R>,
    /// Middle points of the real spines of `B[C₁,C₂]` and `B[C₂,C₃]`.
    pub m1: ProjVector<R>,
    pub m2: ProjVector<R>,
    pub m3: ProjVector<R>,
    pub c1: ProjVector<R>,
    pub c2: ProjVector<R>,
    pub c3: ProjVector<R>,
    pub d1: ProjVector<R>,
    pub d2: ProjVector<R>,
    pub d3: ProjVector<R>,
    pub b2: ProjVector<R>,
    pub e2: ProjVector<R>,
    pub q1: ProjVector<R>,
    pub q3: ProjVector<R>,
    /// `u = ta(c₃,d₃)`.
    pub u: R,
    /// The isotropic vector `(u + √(u²−u))c₃ − ⟨c₃,d₃⟩/⟨d₃,d₃⟩·d₃`.
    pub w3: ProjVector<R>,
    pub r0: Isometry<R>,
    pub r1: Isometry<R>,
    pub r2: Isometry<R>,
}

impl<R: Real> TriangleConfiguration<R> {
    /// Builds the configuration for `t`. Requires `t > 3/2`, condition (3)
    /// and `u > 1`.
    pub fn build(t: R) -> Result<Self, ConstructionError> {
        let params = solve_parameters(t)?;
        let gram = build_gram(&params)?;
        let theta = Complex::<R>::theta()?;
        let one = R::one();
        let two = R::from_f64(2.0);

        let p1 = ProjVector::<R>::basis(0);
        let p2 = ProjVector::<R>::basis(1);
        let p3 = ProjVector::<R>::basis(2);
        let m1 = (p1 - p2).scale_real(one / (two * (params.t1 - one)).sqrt()?);
        let m2 = (p2.scale(theta) - p3).scale_real(one / (two * (params.t2 - one)).sqrt()?);
        let r0 = gram.reflection(&p1)?;
        let r1 = gram.reflection(&m1)?;
        let r2 = gram.reflection(&m2)?;

        let c1 = p3 - p1.scale_real(t);
        let b2 = p3 - p2.scale(theta.scale(params.t2));
        let e2 = p1 - p2.scale_real(params.t1);
        let d3 = p1 - p3.scale_real(t);
        let m3 = p3 - p1;
        let q1 = p1 + p2;
        let q3 = p3 + p1;
        let c2 = r1.apply(&c1);
        let c3 = r2.apply(&c2);
        let d2 = r2.apply(&d3);
        let d1 = r1.apply(&d2);

        let u = gram.tance(&c3, &d3)?;
        if !require_positive(u - one, "u − 1")? {
            return Err(ConstructionError::UNotAboveOne { u: u.mid() });
        }
        let root = (u * u - u).sqrt()?;
        let k = gram.inner(&c3, &d3) / Complex::from_real(gram.norm(&d3));
        let w3 = c3.scale_real(u + root) - d3.scale(k);

        Ok(TriangleConfiguration {
            params,
            gram,
            theta,
            p1,
            p2,
            p3,
            m1,
            m2,
            m3,
            c1,
            c2,
            c3,
            d1,
            d2,
            d3,
            b2,
            e2,
            q1,
            q3,
            u,
            w3,
            r0,
            r1,
            r2,
        })
    }

    pub fn t(&self) -> R {
        self.params.t
    }

    /// The loxodromic element `ϑ²R₂R₁R₀`.
    pub fn twisted_product(&self) -> Isometry<R> {
        let th2 = self.theta * self.theta;
        Isometry::scalar(th2)
            .compose(&self.r2)
            .compose(&self.r1)
            .compose(&self.r0)
    }
}

/// The three quantities whose arguments are the angles `β₁, β₂, β₃`:
/// `⟨p₂,c₁⟩⟨c₁,p₃⟩`, `ϑ̄⟨p₃,c₂⟩⟨c₂,p₁⟩`, `ϑ̄⟨p₁,c₃⟩⟨c₃,p₂⟩`.
pub fn angle_arguments<R: Real>(cfg: &TriangleConfiguration<R>) -> [Complex<R>; 3] {
    let g = &cfg.gram;
    let tb = cfg.theta.conj();
    [
        g.inner(&cfg.p2, &cfg.c1) * g.inner(&cfg.c1, &cfg.p3),
        tb * g.inner(&cfg.p3, &cfg.c2) * g.inner(&cfg.c2, &cfg.p1),
        tb * g.inner(&cfg.p1, &cfg.c3) * g.inner(&cfg.c3, &cfg.p2),
    ]
}

/// The angles `β₁, β₂, β₃`. Each argument must have positive real part so
/// that the principal branch is unambiguous.
pub fn angles(cfg: &TriangleConfiguration<f64>) -> Result<[f64; 3], ConstructionError> {
    let args = angle_arguments(cfg);
    let mut out = [0.0; 3];
    for (i, z) in args.iter().enumerate() {
        if !require_positive(z.re, "condition (7)")? {
            return Err(ConstructionError::AngleBranch {
                index: i + 1,
                re: z.re,
            });
        }
        out[i] = z.arg();
    }
    Ok(out)
}

/// Residuals of the structural identities of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigInvariants {
    /// Relative residuals of the two defining equations.
    pub equations: f64,
    /// `max |⟨mᵢ,mᵢ⟩ + 1|`.
    pub middle_norms: f64,
    /// `|R₁p₁ + p₂|` and `|R₂(ϑp₂) + p₃|`, as vectors.
    pub spine_images: f64,
    /// `|⟨w₃,w₃⟩|` relative to its scale.
    pub w3_isotropy: f64,
    /// `|tr(ϑ²R₂R₁R₀) − 2t|`.
    pub twisted_trace: f64,
    /// `|R₀c₁ + c₁|`.
    pub r0_c1: f64,
}

impl TriangleConfiguration<f64> {
    pub fn invariants(&self) -> ConfigInvariants {
        let g = &self.gram;
        let middle_norms = (g.norm(&self.m1) + 1.0)
            .abs()
            .max((g.norm(&self.m2) + 1.0).abs());
        let spine_images = self
            .r1
            .apply(&self.p1)
            .dist_max(&(-self.p2))
            .max(self.r2.apply(&self.p2.scale(self.theta)).dist_max(&(-self.p3)));
        let w3_isotropy = g.norm(&self.w3).abs() / g.norm_scale(&self.w3);
        let twisted_trace = self
            .twisted_product()
            .trace()
            .dist_max(C64::from_f64(2.0 * self.params.t, 0.0));
        let r0_c1 = self.r0.apply(&self.c1).dist_max(&(-self.c1));
        ConfigInvariants {
            equations: self.params.max_relative_residual(),
            middle_norms,
            spine_images,
            w3_isotropy,
            twisted_trace,
            r0_c1,
        }
    }

    /// Polar points `p₁, p₂, p₃` of the complex geodesics `C₁, C₂, C₃`.
    pub fn polar_points(&self) -> [Vec64; 3] {
        [self.p1, self.p2, self.p3]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::PointClass;
    use crate::numerics::Interval;

    #[test]
    fn invariants_at_published_parameter() {
        let cfg = TriangleConfiguration::build(2.22).unwrap();
        let inv = cfg.invariants();
        assert!(inv.equations < 1e-12);
        assert!(inv.middle_norms < 1e-12);
        assert!(inv.spine_images < 1e-12);
        assert!(inv.w3_isotropy < 1e-10);
        assert!(inv.twisted_trace < 1e-9);
        assert!(inv.r0_c1 < 1e-12);
        assert!((cfg.u - 1.43).abs() < 0.02 * 1.43);
    }

    #[test]
    fn point_classes() {
        let cfg = TriangleConfiguration::build(2.22).unwrap();
        let g = &cfg.gram;
        assert_eq!(g.classify(&cfg.c1).unwrap(), PointClass::Negative);
        assert_eq!(g.classify(&cfg.p1).unwrap(), PointClass::Positive);
        assert_eq!(g.classify(&cfg.w3).unwrap(), PointClass::Isotropic);
        assert!((g.tance(&cfg.m1, &cfg.m2).unwrap() - (2.0 * 2.22 + 1.0) / 4.0).abs() < 1e-12);
        assert!(cfg.r1.apply(&cfg.p1).projectively_equal(&cfg.p2));
    }

    #[test]
    fn angle_sum_is_right_angle() {
        let cfg = TriangleConfiguration::build(2.22).unwrap();
        let b = angles(&cfg).unwrap();
        assert!((b.iter().sum::<f64>() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn construction_is_deterministic() {
        let a = TriangleConfiguration::build(2.3).unwrap();
        let b = TriangleConfiguration::build(2.3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn enclosure_contains_point_configuration() {
        let x = 2.2;
        let cfg = TriangleConfiguration::build(x).unwrap();
        let enc = TriangleConfiguration::build(Interval::new(x, x.next_up())).unwrap();
        for (a, b) in cfg.w3.coords.iter().zip(enc.w3.coords.iter()) {
            assert!(b.re.contains(a.re) && b.im.contains(a.im));
        }
        assert!(enc.u.contains(cfg.u));
    }
}
