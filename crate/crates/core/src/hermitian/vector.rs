use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::numerics::{Complex, Real, C64};

/// Tolerance for projective equality: every 2×2 minor of the coordinate
/// pair must be below this multiple of the product of the coordinate norms.
pub const PROJECTIVE_TOL: f64 = 1e-9;

/// A vector of `V` in the working basis `p₁, p₂, p₃`, standing for the
/// point of `CP(V)` it spans.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProjVector<R> {
    pub coords: [Complex<R>; 3],
}

pub type Vec64 = ProjVector<f64>;

impl<R: Real> ProjVector<R> {
    pub fn new(coords: [Complex<R>; 3]) -> Self {
        ProjVector { coords }
    }

    /// The `i`-th basis vector (`0`-based).
    pub fn basis(i: usize) -> Self {
        let mut coords = [Complex::zero(); 3];
        coords[i] = Complex::one();
        ProjVector { coords }
    }

    pub fn from_real(a: f64, b: f64, c: f64) -> Self {
        ProjVector {
            coords: [
                Complex::from_f64(a, 0.0),
                Complex::from_f64(b, 0.0),
                Complex::from_f64(c, 0.0),
            ],
        }
    }

    pub fn scale(self, c: Complex<R>) -> Self {
        ProjVector {
            coords: self.coords.map(|z| z * c),
        }
    }

    pub fn scale_real(self, k: R) -> Self {
        ProjVector {
            coords: self.coords.map(|z| z.scale(k)),
        }
    }

    pub fn conj(self) -> Self {
        ProjVector {
            coords: self.coords.map(Complex::conj),
        }
    }

    pub fn mid(self) -> Vec64 {
        ProjVector {
            coords: self.coords.map(Complex::mid),
        }
    }
}

impl Vec64 {
    /// Euclidean norm of the coordinates.
    pub fn coord_norm(&self) -> f64 {
        self.coords
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coord_norm() == 0.0
    }

    /// Largest coordinate distance to `other`, as vectors.
    pub fn dist_max(&self, other: &Vec64) -> f64 {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a.dist_max(*b))
            .fold(0.0, f64::max)
    }

    /// Same point of `CP(V)`: all 2×2 minors of the coordinate pair vanish
    /// relative to the coordinate norms.
    pub fn projectively_equal(&self, other: &Vec64) -> bool {
        self.projective_residual(other) <= PROJECTIVE_TOL
    }

    /// Largest 2×2 minor divided by the product of coordinate norms; `1.0`
    /// when either vector is zero.
    pub fn projective_residual(&self, other: &Vec64) -> f64 {
        let scale = self.coord_norm() * other.coord_norm();
        if scale == 0.0 {
            return 1.0;
        }
        let (u, v) = (&self.coords, &other.coords);
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                let minor = u[i] * v[j] - u[j] * v[i];
                worst = worst.max(minor.abs());
            }
        }
        worst / scale
    }

    /// The scalar `λ` with `other ≈ λ·self`, by least squares.
    pub fn ratio_to(&self, other: &Vec64) -> C64 {
        let mut num = C64::zero();
        let mut den = 0.0;
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            num = num + a.conj() * *b;
            den += a.norm_sqr();
        }
        num.scale(1.0 / den)
    }
}

impl<R: Real> Add for ProjVector<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        ProjVector {
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
                self.coords[2] + rhs.coords[2],
            ],
        }
    }
}

impl<R: Real> Sub for ProjVector<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Real> Neg for ProjVector<R> {
    type Output = Self;
    fn neg(self) -> Self {
        ProjVector {
            coords: self.coords.map(|z| -z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rescaled_vectors_are_projectively_equal() {
        let v = Vec64::new([C64::new(1.0, -2.0), C64::new(0.3, 0.7), C64::new(-4.0, 0.0)]);
        let w = v.scale(C64::new(-0.2, 3.1));
        assert!(v.projectively_equal(&w));
        assert!((v.ratio_to(&w).dist_max(C64::new(-0.2, 3.1))) < 1e-14);
    }

    #[test]
    fn basis_vectors_are_distinct() {
        assert!(!Vec64::basis(0).projectively_equal(&Vec64::basis(1)));
    }

    #[test]
    fn zero_vector_is_never_equal() {
        let z = Vec64::from_real(0.0, 0.0, 0.0);
        assert!(z.is_zero());
        assert!(!z.projectively_equal(&Vec64::basis(0)));
    }
}
