//! Checks of the existence inequalities, the group relation, the mirror
//! eigenvectors, the Toledo and Euler invariants, parameter scans, interval
//! certification and the consolidated report.

mod certify;
mod conditions;
mod mirror_eigen;
mod euler;
mod ledger;
mod relations;
mod report;
mod scan;
mod toledo;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cake::CakeError;
use crate::construction::ConstructionError;
use crate::hermitian::HermitianError;

pub use certify::{certify_conditions, condition_enclosures, CERTIFY_RANGE, DEFAULT_MAX_DEPTH};
pub use conditions::{
    condition_description, condition_specs, evaluate_conditions, ConditionReport, ConditionValues,
    ConditionVerdict, CONDITION_IDS,
};
pub use mirror_eigen::{check_mirror_eigenvectors, MirrorEigenReport};
pub use euler::{euler_from_side, euler_side_test, EulerError, EulerReport};
pub use ledger::{invariant_ledger, rational_to_f64, InvariantLedger, LedgerEntry, Rational, GENUS2_CHI};
pub use relations::{check_relation, relation_word, theta_pow, RelationReport};
pub use report::{
    published_checks, verify, AngleSection, CakeSection, MirrorSection, ParameterSection,
    PublishedCheck, Tolerances, VerificationReport, Verdict, VerifyOptions, PUBLISHED_T,
    SCHEMA_VERSION,
};
pub use scan::{csv_header, grid, scan, scan_point, write_csv, ScanError, ScanRow};
pub use toledo::{snap_to_thirds, toledo, ToledoError, ToledoReport, TOLEDO_SAMPLES};

#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
pub enum VerificationError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
    #[error(transparent)]
    Cake(#[from] CakeError),
}
