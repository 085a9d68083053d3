use serde::{Deserialize, Serialize};

use super::gram::GramContext;
use super::matrix::{self, Mat3};
use super::vector::ProjVector;
use crate::numerics::{Complex, Real, C64};

/// A linear or antilinear transformation of `V`.
///
/// Linear: `T·v = m·v`. Antilinear: `T·v = m·conj(v)`. Composition is the
/// group law of `SU V` extended by real reflections.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Isometry<R> {
    pub m: Mat3<R>,
    pub antilinear: bool,
}

pub type Iso64 = Isometry<f64>;

impl<R: Real> Isometry<R> {
    pub fn linear(m: Mat3<R>) -> Self {
        Isometry {
            m,
            antilinear: false,
        }
    }

    pub fn antilinear(m: Mat3<R>) -> Self {
        Isometry {
            m,
            antilinear: true,
        }
    }

    pub fn identity() -> Self {
        Self::linear(matrix::identity())
    }

    /// Multiplication by the scalar `c`.
    pub fn scalar(c: Complex<R>) -> Self {
        Self::linear(matrix::scalar(c))
    }

    pub fn apply(&self, v: &ProjVector<R>) -> ProjVector<R> {
        let input = if self.antilinear { v.conj() } else { *v };
        ProjVector::new(matrix::apply(&self.m, &input.coords))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry<R>) -> Isometry<R> {
        let rhs = if self.antilinear {
            matrix::conj(&other.m)
        } else {
            other.m
        };
        Isometry {
            m: matrix::mul(&self.m, &rhs),
            antilinear: self.antilinear ^ other.antilinear,
        }
    }

    /// Composition `a₁ ∘ a₂ ∘ … ∘ aₙ`; the identity for an empty list.
    pub fn compose_all<'a, I>(letters: I) -> Isometry<R>
    where
        I: IntoIterator<Item = &'a Isometry<R>>,
    {
        letters
            .into_iter()
            .fold(Isometry::identity(), |acc, x| acc.compose(x))
    }

    pub fn trace(&self) -> Complex<R> {
        matrix::trace(&self.m)
    }

    pub fn det(&self) -> Complex<R> {
        matrix::det(&self.m)
    }

    pub fn mid(&self) -> Iso64 {
        Isometry {
            m: matrix::mid(&self.m),
            antilinear: self.antilinear,
        }
    }
}

impl Iso64 {
    /// Residual of the form-preservation identity: `mᵀ G conj(m) = G` for a
    /// linear map, `= conj(G)` for an antilinear one. Relative to `|G|`.
    pub fn form_residual(&self, gram: &GramContext<f64>) -> f64 {
        let g = gram.matrix();
        let lhs = matrix::mul(&matrix::mul(&matrix::transpose(&self.m), g), &matrix::conj(&self.m));
        let rhs = if self.antilinear { matrix::conj(g) } else { *g };
        matrix::max_dist(&lhs, &rhs) / matrix::max_abs(g).max(1.0)
    }

    /// Entrywise max distance to `other` (same linearity required, else
    /// infinity).
    pub fn distance(&self, other: &Iso64) -> f64 {
        if self.antilinear != other.antilinear {
            return f64::INFINITY;
        }
        matrix::max_dist(&self.m, &other.m)
    }

    /// The scalar `c` if `self` is linear and within `tol` of `c·Id`.
    pub fn as_scalar(&self, tol: f64) -> Option<C64> {
        if self.antilinear {
            return None;
        }
        let c = matrix::trace(&self.m).scale(1.0 / 3.0);
        (matrix::max_dist(&self.m, &matrix::scalar(c)) <= tol).then_some(c)
    }

    /// Distance from `self` to the nearest scalar matrix (0 means trivial in
    /// the projective group). Infinite for antilinear maps.
    pub fn scalar_residual(&self) -> f64 {
        if self.antilinear {
            return f64::INFINITY;
        }
        let c = matrix::trace(&self.m).scale(1.0 / 3.0);
        matrix::max_dist(&self.m, &matrix::scalar(c))
    }
}
