//! Hermitian form of signature (2,1) on `V = C³`, points of `CP(V)`,
//! reflections and the isometries they generate.

mod geodesic;
mod gram;
mod isometry;
mod loxodromic;
pub mod matrix;
mod traces;
mod vector;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::NumericsError;

pub use geodesic::{
    closest_point_on_geodesic, geodesic_through, stationarity_residual, ClosestPoint, GeodesicParam,
};
pub use gram::{GramContext, PointClass, ISOTROPIC_TOL};
pub use isometry::{Iso64, Isometry};
pub use loxodromic::{loxodromic_decompose, AxisMode, LoxodromicDecomposition};
pub use matrix::Mat3;
pub use traces::{
    spine_pairing_real_part, spine_triple_trace, trace_identities_check, TraceResiduals,
};
pub use vector::{ProjVector, Vec64, PROJECTIVE_TOL};

#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
pub enum HermitianError {
    #[error("vector is isotropic")]
    Isotropic,
    #[error("Gram matrix is not hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("form does not have signature (2,1) (negative index {negative:?})")]
    Signature { negative: Option<usize> },
    #[error("span of the two points carries no real geodesic")]
    NoRealGeodesic,
    #[error("points coincide projectively")]
    CoincidentPoints,
    #[error("geodesic meets the complex geodesic (pairing ratio is real)")]
    RealityHypothesis,
    #[error("isometry is not loxodromic: trace {re} + {im}i")]
    TraceNotLoxodromic { re: f64, im: f64 },
    #[error("eigenspace for eigenvalue {eigenvalue} is degenerate")]
    DegenerateEigenspace { eigenvalue: f64 },
    #[error("point does not lie on the axis")]
    NotOnAxis,
    #[error("decomposition residual {residual:e} exceeds tolerance")]
    Residual { residual: f64 },
    #[error("sign of the form on the vector is undecided by the enclosure")]
    Undecided,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
