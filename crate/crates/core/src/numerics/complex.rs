use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::real::Real;
use super::NumericsError;

/// Complex number over either backend.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Complex<R> {
    pub re: R,
    pub im: R,
}

pub type C64 = Complex<f64>;

impl<R: Real> Complex<R> {
    pub fn new(re: R, im: R) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: R) -> Self {
        Complex { re, im: R::zero() }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Complex {
            re: R::from_f64(re),
            im: R::from_f64(im),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(R::zero())
    }

    pub fn one() -> Self {
        Self::from_real(R::one())
    }

    pub fn i() -> Self {
        Complex {
            re: R::zero(),
            im: R::one(),
        }
    }

    pub fn conj(self) -> Self {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm_sqr(self) -> R {
        self.re.square() + self.im.square()
    }

    pub fn scale(self, k: R) -> Self {
        Complex {
            re: self.re * k,
            im: self.im * k,
        }
    }

    /// The primitive sixth root of unity `exp(πi/3) = 1/2 + i·√3/2`.
    pub fn theta() -> Result<Self, NumericsError> {
        let half = R::from_f64(0.5);
        let root3 = R::from_f64(3.0).sqrt()?;
        Ok(Complex {
            re: half,
            im: root3 * half,
        })
    }

    /// Point projection of an enclosure (midpoints of both parts).
    pub fn mid(self) -> C64 {
        Complex {
            re: self.re.mid(),
            im: self.im.mid(),
        }
    }

    pub fn powi(self, n: i32) -> Self {
        let base = if n < 0 { Self::one() / self } else { self };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc * base;
        }
        acc
    }
}

impl C64 {
    /// Principal argument in `(-π, π]`.
    pub fn arg(self) -> f64 {
        let a = self.im.atan2(self.re);
        if a == -std::f64::consts::PI {
            std::f64::consts::PI
        } else {
            a
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn from_polar(r: f64, phi: f64) -> Self {
        Complex {
            re: r * phi.cos(),
            im: r * phi.sin(),
        }
    }

    /// Largest absolute difference of the real and imaginary parts.
    pub fn dist_max(self, other: C64) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }
}

impl<R: Real> Add for Complex<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Complex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<R: Real> Sub for Complex<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Complex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<R: Real> Neg for Complex<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Complex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<R: Real> Mul for Complex<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Complex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<R: Real> Div for Complex<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.norm_sqr();
        let n = self * rhs.conj();
        Complex {
            re: n.re / d,
            im: n.im / d,
        }
    }
}

impl fmt::Display for C64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}
