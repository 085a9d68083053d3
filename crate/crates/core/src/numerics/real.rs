use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::sign::SignVerdict;
use super::NumericsError;

/// Which arithmetic a value was computed with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Double-precision point arithmetic.
    Fast,
    /// Outward-rounded interval enclosures.
    Rigorous,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Fast => "fast",
            Backend::Rigorous => "rigorous",
        }
    }
}

/// Real scalar shared by both backends.
///
/// Everything in the construction and condition pipeline is generic over this
/// trait, so one code path yields both approximate values and enclosures.
pub trait Real:
    Copy
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    /// Exact embedding of a double.
    fn from_f64(x: f64) -> Self;

    /// Square root of a value that must be nonnegative.
    ///
    /// The enclosure backend fails with [`NumericsError::SqrtStraddlesZero`]
    /// when it cannot decide the sign of the argument.
    fn sqrt(self) -> Result<Self, NumericsError>;

    /// Sign decision; `zero_tol` only applies to the point backend.
    fn sign_with_tol(self, zero_tol: f64) -> SignVerdict;

    /// Representative point value (midpoint for enclosures).
    fn mid(self) -> f64;

    /// Half-width of the enclosure; zero for point values.
    fn rad(self) -> f64;

    /// Upper bound on the absolute value.
    fn mag(self) -> f64;

    /// Whether `x` is a possible value of `self`.
    fn encloses(self, x: f64) -> bool;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn square(self) -> Self {
        self * self
    }
}

impl Real for f64 {
    const BACKEND: Backend = Backend::Fast;

    fn from_f64(x: f64) -> Self {
        x
    }

    fn sqrt(self) -> Result<Self, NumericsError> {
        if self < 0.0 || self.is_nan() {
            return Err(NumericsError::NegativeSqrt { value: self });
        }
        Ok(f64::sqrt(self))
    }

    fn sign_with_tol(self, zero_tol: f64) -> SignVerdict {
        if self.is_nan() {
            // only reachable through a division by an exact zero upstream
            SignVerdict::Indeterminate
        } else if self > zero_tol {
            SignVerdict::Positive
        } else if self < -zero_tol {
            SignVerdict::Negative
        } else {
            SignVerdict::Zero
        }
    }

    fn mid(self) -> f64 {
        self
    }

    fn rad(self) -> f64 {
        0.0
    }

    fn mag(self) -> f64 {
        self.abs()
    }

    fn encloses(self, x: f64) -> bool {
        self == x
    }
}

impl Real for Interval {
    const BACKEND: Backend = Backend::Rigorous;

    fn from_f64(x: f64) -> Self {
        Interval::point(x)
    }

    fn sqrt(self) -> Result<Self, NumericsError> {
        if self.hi() < 0.0 {
            return Err(NumericsError::NegativeSqrt { value: self.hi() });
        }
        Interval::sqrt(self).ok_or(NumericsError::SqrtStraddlesZero {
            lo: self.lo(),
            hi: self.hi(),
        })
    }

    fn sign_with_tol(self, _zero_tol: f64) -> SignVerdict {
        if self.lo() > 0.0 {
            SignVerdict::Positive
        } else if self.hi() < 0.0 {
            SignVerdict::Negative
        } else {
            SignVerdict::Indeterminate
        }
    }

    fn mid(self) -> f64 {
        self.midpoint()
    }

    fn rad(self) -> f64 {
        self.radius()
    }

    fn mag(self) -> f64 {
        Interval::mag(self)
    }

    fn encloses(self, x: f64) -> bool {
        self.contains(x)
    }

    fn square(self) -> Self {
        let a = self.abs();
        a * a
    }
}
