use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::real::Real;

/// Default absolute zero-snap tolerance of the point backend.
pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

/// Outcome of a sign decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignVerdict {
    #[serde(rename = "certified-positive")]
    Positive,
    #[serde(rename = "certified-negative")]
    Negative,
    /// The point backend snapped the value to zero. Every quantity this crate
    /// checks is designed to stay away from zero, so this marks a failure.
    #[serde(rename = "zero")]
    Zero,
    /// The enclosure contains zero.
    Indeterminate,
}

impl SignVerdict {
    pub fn is_positive(self) -> bool {
        self == SignVerdict::Positive
    }

    pub fn is_certified(self) -> bool {
        matches!(self, SignVerdict::Positive | SignVerdict::Negative)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignVerdict::Positive => "certified-positive",
            SignVerdict::Negative => "certified-negative",
            SignVerdict::Zero => "zero",
            SignVerdict::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SignVerdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "certified-positive" => Ok(SignVerdict::Positive),
            "certified-negative" => Ok(SignVerdict::Negative),
            "zero" => Ok(SignVerdict::Zero),
            "indeterminate" => Ok(SignVerdict::Indeterminate),
            other => Err(format!("unknown sign verdict `{other}`")),
        }
    }
}

/// Sign of `x` with the default zero-snap tolerance.
pub fn certified_sign<R: Real>(x: R) -> SignVerdict {
    x.sign_with_tol(DEFAULT_ZERO_TOL)
}

pub fn certified_sign_with_tol<R: Real>(x: R, zero_tol: f64) -> SignVerdict {
    x.sign_with_tol(zero_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Interval;

    #[test]
    fn enclosure_verdicts() {
        assert_eq!(
            certified_sign(Interval::new(0.5, 0.6)),
            SignVerdict::Positive
        );
        assert_eq!(
            certified_sign(Interval::new(-0.1, 0.1)),
            SignVerdict::Indeterminate
        );
        assert_eq!(
            certified_sign(Interval::new(-0.6, -0.5)),
            SignVerdict::Negative
        );
    }

    #[test]
    fn point_backend_never_indeterminate() {
        for x in [-1.0, -1e-13, 0.0, 1e-13, 2.0] {
            assert_ne!(certified_sign(x), SignVerdict::Indeterminate);
        }
        assert_eq!(certified_sign(1e-13), SignVerdict::Zero);
        assert_eq!(certified_sign_with_tol(1e-13, 0.0), SignVerdict::Positive);
    }

    #[test]
    fn verdict_text_round_trips() {
        for v in [
            SignVerdict::Positive,
            SignVerdict::Negative,
            SignVerdict::Zero,
            SignVerdict::Indeterminate,
        ] {
            assert_eq!(v.as_str().parse::<SignVerdict>().unwrap(), v);
        }
    }
}
