//! Scalar arithmetic over two interchangeable backends (double-precision
//! points and outward-rounded intervals), certified sign decisions, phase
//! unwrapping and interval certification by bisection.

mod centered;
mod certify;
mod complex;
mod interval;
mod phase;
mod real;
mod sign;

pub use certify::{
    certify_on_interval, certify_scalar, Certificate, CertifyFailure, ConditionSpec, Leaf,
    ReplayError, RequiredSign,
};
pub use centered::Centered;
pub use complex::{Complex, C64};
pub use interval::Interval;
pub use phase::unwrap_phase;
pub use real::{Backend, Real};
pub use sign::{certified_sign, certified_sign_with_tol, SignVerdict, DEFAULT_ZERO_TOL};

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, thiserror::Error, Serialize, Deserialize)]
pub enum NumericsError {
    #[error("square root of negative value {value}")]
    NegativeSqrt { value: f64 },
    #[error("square-root argument [{lo}, {hi}] straddles zero")]
    SqrtStraddlesZero { lo: f64, hi: f64 },
    #[error("phase samples {index} and {} differ by {delta} rad (>= π/2)", index + 1)]
    UnderSampled { index: usize, delta: f64 },
    #[error("phase sample {index} is zero")]
    ZeroSample { index: usize },
    #[error("{message}")]
    Domain { message: String, refinable: bool },
    #[error("parse error: {0}")]
    Parse(String),
}

impl NumericsError {
    /// True when a narrower parameter enclosure might make the error vanish.
    pub fn is_refinable(&self) -> bool {
        match self {
            NumericsError::SqrtStraddlesZero { .. } => true,
            NumericsError::Domain { refinable, .. } => *refinable,
            _ => false,
        }
    }
}
