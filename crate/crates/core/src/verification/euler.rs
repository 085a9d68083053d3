use serde::{Deserialize, Serialize};

use crate::numerics::{certified_sign_with_tol, Real, SignVerdict};

#[derive(Debug, Clone, PartialEq, thiserror::Error, Serialize, Deserialize)]
pub enum EulerError {
    #[error("side value {value} has no certified sign ({verdict})")]
    Undecided { value: f64, verdict: SignVerdict },
}

/// Outcome of the side test for `f₁ = R(q₁)R(q₃)w₃` relative to `G[b₂,e₂]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerReport {
    /// `Im(⟨b₂,f₁⟩⟨f₁,e₂⟩/⟨b₂,e₂⟩)`.
    pub side: f64,
    pub verdict: SignVerdict,
    pub euler: i64,
    /// `euler ≡ 0 (mod 8)`.
    pub divisible_by_eight: bool,
}

/// Euler number from the sign of the side value: `0` on the positive side,
/// `−16` on the negative one.
pub fn euler_from_side(verdict: SignVerdict) -> Option<i64> {
    match verdict {
        SignVerdict::Positive => Some(0),
        SignVerdict::Negative => Some(-16),
        SignVerdict::Zero | SignVerdict::Indeterminate => None,
    }
}

pub fn euler_side_test<R: Real>(side: R, zero_tol: f64) -> Result<EulerReport, EulerError> {
    let verdict = certified_sign_with_tol(side, zero_tol);
    let euler = euler_from_side(verdict).ok_or(EulerError::Undecided {
        value: side.mid(),
        verdict,
    })?;
    Ok(EulerReport {
        side: side.mid(),
        verdict,
        euler,
        divisible_by_eight: euler.rem_euclid(8) == 0,
    })
}
