use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub type Rational = Rational64;

pub fn rational_to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Euler characteristic of the genus-2 surface covered twice by the cake
/// surface.
pub const GENUS2_CHI: i64 = -2;

/// Invariants of one surface bundle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub genus: i64,
    pub chi: i64,
    pub euler: i64,
    pub tau: Rational,
    /// `2(χ + e)`.
    pub lhs: Rational,
    /// `3τ`.
    pub rhs: Rational,
    pub relation_holds: bool,
    pub euler_divisible_by_eight: bool,
}

impl LedgerEntry {
    pub fn new(chi: i64, euler: i64, tau: Rational) -> Self {
        let lhs = Rational::from_integer(2 * (chi + euler));
        let rhs = tau * 3;
        LedgerEntry {
            genus: (2 - chi) / 2,
            chi,
            euler,
            tau,
            lhs,
            rhs,
            relation_holds: lhs == rhs,
            euler_divisible_by_eight: euler.rem_euclid(8) == 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.relation_holds && self.euler_divisible_by_eight
    }
}

/// The cake-surface bundle and the genus-2 bundle it double covers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantLedger {
    pub genus3: LedgerEntry,
    pub genus2: LedgerEntry,
    pub angle_sum: f64,
    pub relation_residual: f64,
}

/// Builds the ledger from the cake's `χ`, the side-test Euler number and the
/// tracked Toledo invariant. `τ` and `e` are multiplicative under finite
/// covers, so the genus-2 entry scales them by `χ₂/χ₃`; `e = 0` stays `0`.
pub fn invariant_ledger(
    chi: i64,
    euler: i64,
    tau: Rational,
    angle_sum: f64,
    relation_residual: f64,
) -> InvariantLedger {
    let ratio = Rational::new(GENUS2_CHI, chi);
    let euler2 = Rational::from_integer(euler) * ratio;
    InvariantLedger {
        genus3: LedgerEntry::new(chi, euler, tau),
        genus2: LedgerEntry::new(GENUS2_CHI, euler2.to_integer(), tau * ratio),
        angle_sum,
        relation_residual,
    }
}

impl InvariantLedger {
    pub fn passed(&self) -> bool {
        self.genus3.passed() && self.genus2.passed()
    }
}
