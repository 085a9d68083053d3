use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conditions::{evaluate_conditions, ConditionReport, CONDITION_IDS};
use super::relations::check_relation;
use crate::construction::{angles, build_configuration, TriangleConfiguration};
use crate::numerics::{Backend, Interval};

#[derive(Debug, Clone, PartialEq, thiserror::Error, Serialize, Deserialize)]
pub enum ScanError {
    #[error("invalid scan range: lo = {lo} must be below hi = {hi}")]
    InvalidRange { lo: f64, hi: f64 },
    #[error("a scan needs at least one grid point")]
    NoSteps,
    #[error("csv output: {0}")]
    Csv(String),
}

/// One grid point. Exactly one of `conditions` and `error` is set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub t: f64,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub conditions: Option<ConditionReport>,
    /// `β₁ + β₂ + β₃`.
    pub angle_sum: Option<f64>,
    pub relation_residual: Option<f64>,
    pub error: Option<String>,
}

impl ScanRow {
    pub fn all_positive(&self) -> bool {
        self.conditions.as_ref().is_some_and(ConditionReport::all_positive)
    }
}

/// `steps` equispaced points from `lo` to `hi` inclusive; a single step
/// gives just `lo`.
pub fn grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>, ScanError> {
    if !(lo < hi) {
        return Err(ScanError::InvalidRange { lo, hi });
    }
    match steps {
        0 => Err(ScanError::NoSteps),
        1 => Ok(vec![lo]),
        n => Ok((0..n)
            .map(|k| {
                if k + 1 == n {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / (n - 1) as f64
                }
            })
            .collect()),
    }
}

pub fn scan_point(t: f64, backend: Backend, zero_tol: f64) -> ScanRow {
    let mut row = ScanRow {
        t,
        t1: None,
        t2: None,
        conditions: None,
        angle_sum: None,
        relation_residual: None,
        error: None,
    };
    let mirrored = match build_configuration(t) {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(format!("{} ({})", e, e.precondition()));
            return row;
        }
    };
    let base = &mirrored.base;
    row.t1 = Some(base.params.t1);
    row.t2 = Some(base.params.t2);
    let report = match backend {
        Backend::Fast => evaluate_conditions(base, zero_tol),
        Backend::Rigorous => match TriangleConfiguration::build(Interval::point(t)) {
            Ok(cfg) => evaluate_conditions(&cfg, zero_tol),
            Err(e) => {
                row.error = Some(format!("{} ({})", e, e.precondition()));
                return row;
            }
        },
    };
    match report {
        Ok(r) => row.conditions = Some(r),
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    }
    row.angle_sum = angles(base).ok().map(|b| b.iter().sum());
    row.relation_residual = Some(check_relation(&mirrored).relation_residual);
    row
}

/// Evaluates every grid point in parallel; rows come back in grid order.
pub fn scan(lo: f64, hi: f64, steps: usize, backend: Backend, zero_tol: f64) -> Result<Vec<ScanRow>, ScanError> {
    let ts = grid(lo, hi, steps)?;
    Ok(ts
        .par_iter()
        .map(|&t| scan_point(t, backend, zero_tol))
        .collect())
}

/// CSV columns: `t, t1, t2`, the raw left-hand sides `lhs3, lhs4a, lhs4b,
/// lhs5, u, pairing_re, pairing_im, side, lhs7a, lhs7b, lhs7c, lhs8`, one
/// verdict column `v<id>` per condition id, then `angle_sum,
/// relation_residual, all_positive, error`.
pub fn csv_header() -> Vec<String> {
    let mut h: Vec<String> = [
        "t", "t1", "t2", "lhs3", "lhs4a", "lhs4b", "lhs5", "u", "pairing_re", "pairing_im", "side",
        "lhs7a", "lhs7b", "lhs7c", "lhs8",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    h.extend(CONDITION_IDS.iter().map(|id| format!("v{id}")));
    h.extend(
        ["angle_sum", "relation_residual", "all_positive", "error"]
            .iter()
            .map(|s| s.to_string()),
    );
    h
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.12e}")).unwrap_or_default()
}

fn csv_record(row: &ScanRow) -> Vec<String> {
    let mut rec = vec![format!("{:.12}", row.t), opt(row.t1), opt(row.t2)];
    match &row.conditions {
        Some(c) => {
            rec.extend(
                [
                    c.lhs3, c.lhs4[0], c.lhs4[1], c.lhs5, c.u, c.pairing.re, c.pairing.im, c.side,
                    c.lhs7[0], c.lhs7[1], c.lhs7[2], c.lhs8,
                ]
                .iter()
                .map(|v| format!("{v:.12e}")),
            );
            rec.extend(c.verdicts.iter().map(|v| v.verdict.as_str().to_string()));
        }
        None => rec.extend(std::iter::repeat_n(String::new(), 12 + CONDITION_IDS.len())),
    }
    rec.push(opt(row.angle_sum));
    rec.push(opt(row.relation_residual));
    rec.push(row.all_positive().to_string());
    rec.push(row.error.clone().unwrap_or_default());
    rec
}

pub fn write_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<(), ScanError> {
    let err = |e: csv::Error| ScanError::Csv(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header()).map_err(err)?;
    for row in rows {
        w.write_record(csv_record(row)).map_err(err)?;
    }
    w.flush().map_err(|e| ScanError::Csv(e.to_string()))
}
