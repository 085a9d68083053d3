use std::ops::{Add, Div, Mul, Neg, Sub};

use super::interval::Interval;
use super::real::{Backend, Real};
use super::sign::SignVerdict;
use super::NumericsError;

/// Mean-value (centred form) enclosure of a function of one parameter `t`
/// over an interval `T` with reference point `m ∈ T`.
///
/// Carries an enclosure of the value at `m`, an enclosure of the derivative
/// over `T`, the offset `T − m`, and a range enclosure. The range is
/// the intersection of `f(m) + f′(T)(T − m)` with the naive interval
/// result of the last operation, so it is never wider than plain interval
/// arithmetic on the operand ranges and shrinks quadratically in `|T|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Centered {
    center: Interval,
    deriv: Interval,
    offset: Interval,
    range: Interval,
}

impl Centered {
    /// The parameter itself over `t`, centred at the midpoint.
    pub fn variable(t: Interval) -> Self {
        let m = Interval::point(t.midpoint());
        Centered {
            center: m,
            deriv: Interval::point(1.0),
            offset: t - m,
            range: t,
        }
    }

    pub fn constant(x: Interval) -> Self {
        Centered {
            center: x,
            deriv: Interval::point(0.0),
            offset: Interval::point(0.0),
            range: x,
        }
    }

    pub fn range(self) -> Interval {
        self.range
    }

    pub fn center(self) -> Interval {
        self.center
    }

    pub fn derivative(self) -> Interval {
        self.deriv
    }

    fn assemble(center: Interval, deriv: Interval, offset: Interval, naive: Interval) -> Self {
        Centered {
            center,
            deriv,
            offset,
            range: (center + deriv * offset).intersect(naive),
        }
    }
}

impl Add for Centered {
    type Output = Centered;
    fn add(self, rhs: Centered) -> Centered {
        Centered::assemble(
            self.center + rhs.center,
            self.deriv + rhs.deriv,
            self.offset.hull(rhs.offset),
            self.range + rhs.range,
        )
    }
}

impl Sub for Centered {
    type Output = Centered;
    fn sub(self, rhs: Centered) -> Centered {
        Centered::assemble(
            self.center - rhs.center,
            self.deriv - rhs.deriv,
            self.offset.hull(rhs.offset),
            self.range - rhs.range,
        )
    }
}

impl Neg for Centered {
    type Output = Centered;
    fn neg(self) -> Centered {
        Centered {
            center: -self.center,
            deriv: -self.deriv,
            offset: self.offset,
            range: -self.range,
        }
    }
}

impl Mul for Centered {
    type Output = Centered;
    fn mul(self, rhs: Centered) -> Centered {
        Centered::assemble(
            self.center * rhs.center,
            self.deriv * rhs.range + self.range * rhs.deriv,
            self.offset.hull(rhs.offset),
            self.range * rhs.range,
        )
    }
}

impl Div for Centered {
    type Output = Centered;
    fn div(self, rhs: Centered) -> Centered {
        let naive = self.range / rhs.range;
        // (f/g)′ = (f′ − (f/g)·g′)/g
        Centered::assemble(
            self.center / rhs.center,
            (self.deriv - naive * rhs.deriv) / rhs.range,
            self.offset.hull(rhs.offset),
            naive,
        )
    }
}

impl Real for Centered {
    const BACKEND: Backend = Backend::Rigorous;

    fn from_f64(x: f64) -> Self {
        Centered::constant(Interval::point(x))
    }

    fn sqrt(self) -> Result<Self, NumericsError> {
        let center = Real::sqrt(self.center)?;
        let naive = Real::sqrt(self.range)?;
        let two = Interval::point(2.0);
        Ok(Centered::assemble(
            center,
            self.deriv / (two * naive),
            self.offset,
            naive,
        ))
    }

    fn square(self) -> Self {
        let two = Interval::point(2.0);
        Centered::assemble(
            self.center.square(),
            two * self.range * self.deriv,
            self.offset,
            self.range.square(),
        )
    }

    fn sign_with_tol(self, zero_tol: f64) -> SignVerdict {
        self.range.sign_with_tol(zero_tol)
    }

    fn mid(self) -> f64 {
        self.range.midpoint()
    }

    fn rad(self) -> f64 {
        self.range.radius()
    }

    fn mag(self) -> f64 {
        self.range.mag()
    }

    fn encloses(self, x: f64) -> bool {
        self.range.contains(x)
    }
}
