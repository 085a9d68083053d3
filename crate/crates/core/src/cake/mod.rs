//! Words in the generators, the mapping tables of the twelve subwords of the
//! relator, the eight side pairings, and the surface bookkeeping of the
//! sixteen-triangle cake.

mod identify;
mod structure;
mod tables;
mod word;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hermitian::HermitianError;

pub use identify::{
    check_identifications, identifications, verify_identifications, Identification,
    IdentificationCheck, SideLabel, Slice,
};
pub use structure::{
    build_cake, cross_check, triangle_words, CakeStructure, CrossCheck, PairingRecord, PlaneModel,
    SideRecord, TriangleRecord, VertexRecord, MODEL_ANGLE,
};
pub use tables::{
    c1_angle_cycle, h5_presentation_check, h5_words, negative_control, slice_sent_to_c1,
    verify_mapping_tables, AngleCycle, H5Check, MappingCheck,
};
pub use word::{realize_word, Letter, Word, RELATOR};

/// Projective and matrix tolerance for every cake check.
pub const CAKE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
pub enum CakeError {
    #[error("cannot parse word {0:?}")]
    Parse(String),
    #[error("pairing {pairing}: {detail}")]
    Pairing { pairing: String, detail: String },
    #[error("cake reconstruction: {0}")]
    Reconstruction(String),
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
}
