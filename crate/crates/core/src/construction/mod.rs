//! The one-parameter family of triangle configurations and the
//! antiholomorphic reflection that closes the group relation.

mod config;
mod mirror;
mod params;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hermitian::HermitianError;
use crate::numerics::NumericsError;

pub use config::{angle_arguments, angles, ConfigInvariants, TriangleConfiguration};
pub use mirror::{build_configuration, mirror_construction, MirrorData, MirroredConfiguration};
pub use params::{build_gram, t1_quadratic, solve_parameters, ParameterTriple};

#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
pub enum ConstructionError {
    #[error("parameter t = {t} is not above 3/2")]
    ParameterOutOfDomain { t: f64 },
    #[error("condition (3) fails: t² + t₁² + t₂² − t t₁ t₂ = {lhs} is not above 1")]
    Condition3 { lhs: f64 },
    #[error("u = ta(c₃,d₃) = {u} is not above 1")]
    UNotAboveOne { u: f64 },
    #[error("sign of {quantity} is undecided by the enclosure")]
    Undecided { quantity: String },
    #[error("angle β{index} is ambiguous: real part {re} is not certified positive")]
    AngleBranch { index: usize, re: f64 },
    #[error("{check} residual {residual:e} exceeds tolerance")]
    Residual { check: String, residual: f64 },
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

impl ConstructionError {
    /// Whether refining the parameter enclosure could remove the error.
    pub fn is_refinable(&self) -> bool {
        match self {
            ConstructionError::Undecided { .. } => true,
            ConstructionError::Hermitian(HermitianError::Undecided) => true,
            ConstructionError::Hermitian(HermitianError::Numerics(e)) => e.is_refinable(),
            ConstructionError::Numerics(e) => e.is_refinable(),
            _ => false,
        }
    }

    /// Short name of the first failing precondition, for reports.
    pub fn precondition(&self) -> &'static str {
        match self {
            ConstructionError::ParameterOutOfDomain { .. } => "t > 3/2",
            ConstructionError::Condition3 { .. } => "condition (3)",
            ConstructionError::UNotAboveOne { .. } => "condition (6): u > 1",
            ConstructionError::AngleBranch { .. } => "condition (7)",
            ConstructionError::Undecided { .. } => "undecided sign",
            ConstructionError::Residual { .. } => "construction residual",
            ConstructionError::Hermitian(_) => "hermitian geometry",
            ConstructionError::Numerics(_) => "numerics",
        }
    }
}

impl From<ConstructionError> for NumericsError {
    fn from(e: ConstructionError) -> Self {
        let refinable = e.is_refinable();
        match e {
            ConstructionError::Numerics(inner) => inner,
            other => NumericsError::Domain {
                message: other.to_string(),
                refinable,
            },
        }
    }
}
