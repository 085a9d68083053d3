use serde::{Deserialize, Serialize};

use super::isometry::Isometry;
use super::matrix::{self, Mat3};
use super::vector::{ProjVector, Vec64};
use super::HermitianError;
use crate::numerics::{Complex, Real, SignVerdict, C64};

/// Relative tolerance under which `⟨v,v⟩` counts as zero in the point
/// backend. The scale is `Σ |vᵢ||gᵢⱼ||vⱼ|`.
pub const ISOTROPIC_TOL: f64 = 1e-10;

/// Classification of a point of `CP(V)` by the sign of `⟨v,v⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    /// Inside the ball `BV`.
    Negative,
    /// On the absolute `SV`.
    Isotropic,
    /// Polar to a complex geodesic.
    Positive,
}

/// Gram matrix `gᵢⱼ = ⟨pᵢ,pⱼ⟩` of the working basis.
///
/// The form is linear in the first argument and conjugate-linear in the
/// second: `⟨u,v⟩ = Σ uᵢ gᵢⱼ conj(vⱼ)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramContext<R> {
    g: Mat3<R>,
}

impl<R: Real> GramContext<R> {
    /// Wraps `g` without checking it; see [`GramContext::validate`].
    pub fn new_unchecked(g: Mat3<R>) -> Self {
        GramContext { g }
    }

    pub fn matrix(&self) -> &Mat3<R> {
        &self.g
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<R> {
        self.g[i][j]
    }

    pub fn inner(&self, u: &ProjVector<R>, v: &ProjVector<R>) -> Complex<R> {
        let mut acc = Complex::zero();
        for i in 0..3 {
            let mut row = Complex::zero();
            for j in 0..3 {
                row = row + self.g[i][j] * v.coords[j].conj();
            }
            acc = acc + u.coords[i] * row;
        }
        acc
    }

    /// `⟨v,v⟩`, which is real for a hermitian form.
    pub fn norm(&self, v: &ProjVector<R>) -> R {
        self.inner(v, v).re
    }

    /// `Σ |vᵢ||gᵢⱼ||vⱼ|`, the magnitude against which `⟨v,v⟩` is compared
    /// when deciding isotropy.
    pub fn norm_scale(&self, v: &ProjVector<R>) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += v.coords[i].mid().abs() * self.g[i][j].mid().abs() * v.coords[j].mid().abs();
            }
        }
        s
    }

    fn norm_sign(&self, v: &ProjVector<R>) -> SignVerdict {
        self.norm(v)
            .sign_with_tol(ISOTROPIC_TOL * self.norm_scale(v))
    }

    /// Sign class of `v`. The point backend reports `Isotropic` when
    /// `|⟨v,v⟩|` is below [`ISOTROPIC_TOL`] relative to its scale; the
    /// enclosure backend fails with [`HermitianError::Undecided`] when the
    /// enclosure of `⟨v,v⟩` contains zero.
    pub fn classify(&self, v: &ProjVector<R>) -> Result<PointClass, HermitianError> {
        match self.norm_sign(v) {
            SignVerdict::Positive => Ok(PointClass::Positive),
            SignVerdict::Negative => Ok(PointClass::Negative),
            SignVerdict::Zero => Ok(PointClass::Isotropic),
            SignVerdict::Indeterminate => Err(HermitianError::Undecided),
        }
    }

    fn require_nonisotropic(&self, v: &ProjVector<R>) -> Result<(), HermitianError> {
        match self.norm_sign(v) {
            SignVerdict::Positive | SignVerdict::Negative => Ok(()),
            SignVerdict::Zero => Err(HermitianError::Isotropic),
            SignVerdict::Indeterminate => Err(HermitianError::Undecided),
        }
    }

    /// `ta(x,y) = ⟨x,y⟩⟨y,x⟩ / (⟨x,x⟩⟨y,y⟩)`, invariant under rescaling
    /// either argument.
    pub fn tance(&self, x: &ProjVector<R>, y: &ProjVector<R>) -> Result<R, HermitianError> {
        self.require_nonisotropic(x)?;
        self.require_nonisotropic(y)?;
        let xy = self.inner(x, y);
        Ok(xy.norm_sqr() / (self.norm(x) * self.norm(y)))
    }

    /// `R(p): x ↦ 2⟨x,p⟩/⟨p,p⟩·p − x`.
    pub fn reflection(&self, p: &ProjVector<R>) -> Result<Isometry<R>, HermitianError> {
        self.require_nonisotropic(p)?;
        let pp = self.norm(p);
        let two = R::from_f64(2.0);
        // ⟨x,p⟩ = Σᵢ xᵢ aᵢ with aᵢ = Σⱼ gᵢⱼ conj(pⱼ)
        let mut a = [Complex::zero(); 3];
        for (i, ai) in a.iter_mut().enumerate() {
            for j in 0..3 {
                *ai = *ai + self.g[i][j] * p.coords[j].conj();
            }
        }
        let mut m = [[Complex::zero(); 3]; 3];
        for k in 0..3 {
            for i in 0..3 {
                let v = (p.coords[k] * a[i]).scale(two / pp);
                m[k][i] = if k == i { v - Complex::one() } else { v };
            }
        }
        Ok(Isometry::linear(m))
    }

    /// Leading principal minors `d₁, d₂, d₃` (all real).
    pub fn leading_minors(&self) -> [R; 3] {
        let g = &self.g;
        let d1 = g[0][0].re;
        let d2 = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).re;
        let d3 = matrix::det(g).re;
        [d1, d2, d3]
    }

    pub fn det(&self) -> R {
        matrix::det(&self.g).re
    }

    /// Number of sign changes in `1, d₁, d₂, d₃`, which equals the number of
    /// negative eigenvalues when no minor vanishes. `None` if a minor's sign
    /// is undecided.
    pub fn negative_index(&self) -> Option<usize> {
        let mut prev = SignVerdict::Positive;
        let mut changes = 0;
        for d in self.leading_minors() {
            let s = d.sign_with_tol(0.0);
            if !s.is_certified() {
                return None;
            }
            if s != prev {
                changes += 1;
            }
            prev = s;
        }
        Some(changes)
    }

    pub fn mid(&self) -> GramContext<f64> {
        GramContext {
            g: matrix::mid(&self.g),
        }
    }
}

impl GramContext<f64> {
    /// Checks hermitian symmetry and signature (2,1).
    pub fn validate(&self) -> Result<(), HermitianError> {
        let gh = matrix::conj(&matrix::transpose(&self.g));
        let scale = matrix::max_abs(&self.g).max(1.0);
        let residual = matrix::max_dist(&gh, &self.g);
        if residual > 1e-12 * scale {
            return Err(HermitianError::NotHermitian { residual });
        }
        match self.negative_index() {
            Some(1) => Ok(()),
            other => Err(HermitianError::Signature {
                negative: other,
            }),
        }
    }

    /// A basis `e₁, e₂, e₃` of `C³` with a diagonal form `diag(s₁,s₂,s₃)`,
    /// `sᵢ = ±1`, together with the coordinates of `p₁, p₂, p₃` in it.
    ///
    /// Obtained from the `LDL*` factorisation of the Gram matrix; it exists
    /// whenever the leading minors are nonzero. Returns `(signs, rows)` where
    /// `rows[i]` holds the coordinates of `pᵢ`, so that
    /// `⟨pᵢ,pⱼ⟩ = Σₖ sₖ rows[i][k] conj(rows[j][k])`.
    pub fn sylvester_realization(&self) -> Result<([f64; 3], [[C64; 3]; 3]), HermitianError> {
        let g = &self.g;
        let mut l = [[C64::zero(); 3]; 3];
        let mut d = [0.0; 3];
        for j in 0..3 {
            let mut dj = g[j][j].re;
            for k in 0..j {
                dj -= l[j][k].norm_sqr() * d[k];
            }
            if dj.abs() < 1e-14 {
                return Err(HermitianError::Signature { negative: None });
            }
            d[j] = dj;
            l[j][j] = C64::one();
            for i in (j + 1)..3 {
                let mut s = g[i][j];
                for k in 0..j {
                    s = s - (l[i][k] * l[j][k].conj()).scale(d[k]);
                }
                l[i][j] = s.scale(1.0 / dj);
            }
        }
        let signs = d.map(f64::signum);
        let mut rows = [[C64::zero(); 3]; 3];
        for i in 0..3 {
            for k in 0..3 {
                rows[i][k] = l[i][k].scale(d[k].abs().sqrt());
            }
        }
        Ok((signs, rows))
    }

    /// Scales `v` so that `⟨v,v⟩ = ±1`; isotropic vectors are returned
    /// unchanged.
    pub fn normalize(&self, v: &Vec64) -> Vec64 {
        let n = self.norm(v);
        if n.abs() <= ISOTROPIC_TOL * self.norm_scale(v) {
            *v
        } else {
            v.scale_real(1.0 / n.abs().sqrt())
        }
    }

    pub fn inner64(&self, u: &Vec64, v: &Vec64) -> C64 {
        self.inner(u, v)
    }
}
