//! Closed intervals of `f64` with outward rounding.
//!
//! Every operation is computed with the default round-to-nearest mode. The
//! rounding error of each endpoint is then recovered exactly (two-sum for
//! addition, fused multiply-add for products, quotients and square roots),
//! and the endpoint is pushed one ulp outward only when the rounded value
//! lies on the wrong side of the exact one. Near the underflow range, where
//! the error terms are no longer exact, endpoints are widened
//! unconditionally. Divisions by an interval that contains zero return the
//! entire real line, which downstream sign tests report as indeterminate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]`; `lo <= hi` always holds.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

/// Below this magnitude error terms may underflow.
const TINY: f64 = 1e-290;

/// Lower and upper bounds for a rounded value `r` whose exact counterpart is
/// `r + err` (only the sign of `err` matters).
#[inline]
fn directed(r: f64, err: f64) -> (f64, f64) {
    if !r.is_finite() || err.is_nan() || (r != 0.0 && r.abs() < TINY) {
        return (down(r), up(r));
    }
    if err > 0.0 {
        (r, up(r))
    } else if err < 0.0 {
        (down(r), r)
    } else {
        (r, r)
    }
}

#[inline]
fn add_bounds(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    directed(s, err)
}

#[inline]
fn mul_bounds(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    if p == 0.0 && a != 0.0 && b != 0.0 {
        // underflow to zero
        return (down(0.0), up(0.0));
    }
    directed(p, a.mul_add(b, -p))
}

#[inline]
fn div_bounds(a: f64, b: f64) -> (f64, f64) {
    let q = a / b;
    if q == 0.0 && a != 0.0 {
        return (down(0.0), up(0.0));
    }
    // a − q·b, exact; the true quotient is q + rem/b
    let rem = (-q).mul_add(b, a);
    let err = if b > 0.0 { rem } else { -rem };
    directed(q, err)
}

impl Interval {
    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    /// Builds `[lo, hi]`. Panics if the bounds are unordered or NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval bounds out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Degenerate interval holding a single double exactly.
    pub fn point(x: f64) -> Self {
        assert!(!x.is_nan(), "NaN cannot be enclosed");
        Interval { lo: x, hi: x }
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(self) -> f64 {
        if self.lo.is_infinite() || self.hi.is_infinite() {
            if self.lo.is_infinite() && self.hi.is_infinite() {
                return 0.0;
            }
            return if self.lo.is_infinite() { self.hi } else { self.lo };
        }
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn radius(self) -> f64 {
        let m = self.midpoint();
        (m - self.lo).max(self.hi - m)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(self) -> bool {
        self.contains(0.0)
    }

    pub fn is_entire(self) -> bool {
        self.lo == f64::NEG_INFINITY && self.hi == f64::INFINITY
    }

    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Common part of two enclosures of the same quantity. Falls back to the
    /// hull if rounding ever leaves them disjoint.
    pub fn intersect(self, other: Interval) -> Interval {
        let (lo, hi) = (self.lo.max(other.lo), self.hi.min(other.hi));
        if lo <= hi {
            Interval { lo, hi }
        } else {
            self.hull(other)
        }
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn abs(self) -> Interval {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval {
                lo: 0.0,
                hi: self.mag(),
            }
        }
    }

    /// Splits at the midpoint into two halves sharing the midpoint.
    pub fn bisect(self) -> (Interval, Interval) {
        let m = self.midpoint();
        (Interval::new(self.lo, m), Interval::new(m, self.hi))
    }

    /// Outward-rounded square root; `None` when the interval reaches below 0.
    pub fn sqrt(self) -> Option<Interval> {
        if self.lo < 0.0 {
            return None;
        }
        let bound = |x: f64| {
            let r = x.sqrt();
            // x − r², exact; the true root exceeds r when it is positive
            directed(r, (-r).mul_add(r, x))
        };
        let lo = if self.lo == 0.0 {
            0.0
        } else {
            bound(self.lo).0.max(0.0)
        };
        Some(Interval {
            lo,
            hi: bound(self.hi).1,
        })
    }

    fn from_candidates(c: [(f64, f64); 4]) -> Interval {
        if c.iter().any(|(l, h)| l.is_nan() || h.is_nan()) {
            return Interval::ENTIRE;
        }
        let lo = c.iter().map(|b| b.0).fold(f64::INFINITY, f64::min);
        let hi = c.iter().map(|b| b.1).fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        let (lo, _) = add_bounds(self.lo, rhs.lo);
        let (_, hi) = add_bounds(self.hi, rhs.hi);
        if lo.is_nan() || hi.is_nan() {
            return Interval::ENTIRE;
        }
        Interval { lo, hi }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        self + (-rhs)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        Interval::from_candidates([
            mul_bounds(self.lo, rhs.lo),
            mul_bounds(self.lo, rhs.hi),
            mul_bounds(self.hi, rhs.lo),
            mul_bounds(self.hi, rhs.hi),
        ])
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        if rhs.contains_zero() {
            return Interval::ENTIRE;
        }
        Interval::from_candidates([
            div_bounds(self.lo, rhs.lo),
            div_bounds(self.lo, rhs.hi),
            div_bounds(self.hi, rhs.lo),
            div_bounds(self.hi, rhs.hi),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_third_is_enclosed() {
        let third = Interval::point(1.0) / Interval::point(3.0);
        assert!(third.lo() < third.hi());
        assert!(third.lo() * 3.0 <= 1.0);
        assert!(third.hi() * 3.0 >= 1.0);
    }

    #[test]
    fn division_by_straddling_interval_is_entire() {
        let q = Interval::point(1.0) / Interval::new(-1.0, 1.0);
        assert!(q.is_entire());
    }

    #[test]
    fn sqrt_rejects_negative_part() {
        assert!(Interval::new(-0.1, 4.0).sqrt().is_none());
        let r = Interval::new(4.0, 9.0).sqrt().unwrap();
        assert!(r.contains(2.0) && r.contains(3.0));
        assert_eq!(Interval::point(0.0).sqrt().unwrap().lo(), 0.0);
    }

    #[test]
    fn zero_times_infinity_widens_to_entire() {
        let p = Interval::point(0.0) * Interval::ENTIRE;
        assert!(p.is_entire());
    }

    #[test]
    fn exact_operations_stay_tight() {
        let d = Interval::point(1.0) - Interval::point(1.0);
        assert_eq!((d.lo(), d.hi()), (0.0, 0.0));
        let p = Interval::point(1.5) * Interval::point(-4.0);
        assert_eq!((p.lo(), p.hi()), (-6.0, -6.0));
        let s = Interval::point(9.0).sqrt().unwrap();
        assert_eq!((s.lo(), s.hi()), (3.0, 3.0));
    }

    #[test]
    fn inexact_sum_is_widened_on_one_side() {
        let s = Interval::point(0.1) + Interval::point(0.2);
        assert!(s.lo() < s.hi());
        assert_eq!(s.hi().next_down(), s.lo());
    }

    #[test]
    fn bisect_shares_midpoint() {
        let (a, b) = Interval::new(1.0, 2.0).bisect();
        assert_eq!(a.hi(), b.lo());
        assert_eq!(a.lo(), 1.0);
        assert_eq!(b.hi(), 2.0);
    }
}
