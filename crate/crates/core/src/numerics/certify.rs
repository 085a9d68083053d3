//! Adaptive bisection certificates for sign conditions over a parameter
//! interval.
//!
//! A predicate maps an enclosure of the parameter to enclosures of one or
//! more quantities, each with a required sign. A subinterval is settled for a
//! quantity as soon as its enclosure has the required sign there; unsettled
//! quantities are pushed down to the two halves. The settled subintervals of
//! every quantity tile the whole domain and are recorded as certificate
//! leaves, which can be replayed independently.
//!
//! # Text format
//!
//! ```text
//! # chyp interval certificate v1
//! # domain <lo> <hi>
//! # condition <id> <required-sign>
//! <lo> <hi> <condition-id> <verdict>
//! ```
//!
//! Lines starting with `#` other than the `domain`/`condition` headers are
//! comments. Endpoints are written in the shortest decimal form that parses
//! back to the identical double. Leaves are ordered by condition (header
//! order) and then by `lo`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::real::Real;
use super::sign::SignVerdict;
use super::NumericsError;

/// Subdivision levels below which the two halves are evaluated in parallel.
const PARALLEL_LEVELS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RequiredSign {
    Positive,
    Negative,
}

impl RequiredSign {
    pub fn verdict(self) -> SignVerdict {
        match self {
            RequiredSign::Positive => SignVerdict::Positive,
            RequiredSign::Negative => SignVerdict::Negative,
        }
    }

    fn opposite(self) -> SignVerdict {
        match self {
            RequiredSign::Positive => SignVerdict::Negative,
            RequiredSign::Negative => SignVerdict::Positive,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RequiredSign::Positive => "positive",
            RequiredSign::Negative => "negative",
        }
    }
}

/// Identifier and required sign of one certified quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSpec {
    pub id: String,
    pub required: RequiredSign,
}

impl ConditionSpec {
    pub fn new(id: impl Into<String>, required: RequiredSign) -> Self {
        ConditionSpec {
            id: id.into(),
            required,
        }
    }
}

/// One certified subinterval for one quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Leaf {
    pub lo: f64,
    pub hi: f64,
    pub condition: String,
    pub verdict: SignVerdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub domain: (f64, f64),
    pub conditions: Vec<ConditionSpec>,
    pub leaves: Vec<Leaf>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CertifyFailure {
    #[error("condition {condition} has the wrong sign ({verdict}) on [{lo}, {hi}]")]
    Counterexample {
        condition: String,
        lo: f64,
        hi: f64,
        verdict: SignVerdict,
    },
    #[error("condition {condition} still undecided on [{lo}, {hi}] at the depth limit")]
    DepthExceeded { condition: String, lo: f64, hi: f64 },
    #[error("domain error on [{lo}, {hi}]: {error}")]
    Domain {
        lo: f64,
        hi: f64,
        error: NumericsError,
    },
    #[error("invalid certification domain [{lo}, {hi}]")]
    InvalidDomain { lo: f64, hi: f64 },
    #[error("predicate returned {got} values for {expected} conditions")]
    Arity { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ReplayError {
    #[error("leaf [{lo}, {hi}] of {condition} replayed as {replayed}, recorded {recorded}")]
    VerdictMismatch {
        condition: String,
        lo: f64,
        hi: f64,
        recorded: SignVerdict,
        replayed: SignVerdict,
    },
    #[error("leaves of {condition} do not tile the domain (gap or overlap near {at})")]
    Coverage { condition: String, at: f64 },
    #[error("leaf references unknown condition {0}")]
    UnknownCondition(String),
    #[error("evaluation failed during replay: {0}")]
    Eval(NumericsError),
}

/// Certifies each quantity of `predicate` against its required sign over
/// `[lo, hi]`, bisecting at most `max_depth` times.
///
/// Domain errors that may be artefacts of a wide enclosure (a square-root
/// argument straddling zero) are refined like indeterminate signs; only at
/// the depth limit are they reported.
pub fn certify_on_interval<F>(
    predicate: &F,
    conditions: &[ConditionSpec],
    lo: f64,
    hi: f64,
    max_depth: usize,
) -> Result<Certificate, CertifyFailure>
where
    F: Fn(Interval) -> Result<Vec<Interval>, NumericsError> + Sync,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(CertifyFailure::InvalidDomain { lo, hi });
    }
    let pending: Vec<usize> = (0..conditions.len()).collect();
    let mut leaves = refine(
        predicate,
        conditions,
        Interval::new(lo, hi),
        &pending,
        0,
        max_depth,
    )?;
    leaves.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.lo.total_cmp(&b.1.lo)));
    Ok(Certificate {
        domain: (lo, hi),
        conditions: conditions.to_vec(),
        leaves: leaves.into_iter().map(|(_, leaf)| leaf).collect(),
    })
}

/// Single-quantity convenience wrapper.
pub fn certify_scalar<F>(
    id: &str,
    predicate: F,
    required: RequiredSign,
    lo: f64,
    hi: f64,
    max_depth: usize,
) -> Result<Certificate, CertifyFailure>
where
    F: Fn(Interval) -> Result<Interval, NumericsError> + Sync,
{
    let wrapped = |t: Interval| predicate(t).map(|v| vec![v]);
    certify_on_interval(
        &wrapped,
        &[ConditionSpec::new(id, required)],
        lo,
        hi,
        max_depth,
    )
}

type Tagged = (usize, Leaf);

fn refine<F>(
    predicate: &F,
    conditions: &[ConditionSpec],
    t: Interval,
    pending: &[usize],
    depth: usize,
    max_depth: usize,
) -> Result<Vec<Tagged>, CertifyFailure>
where
    F: Fn(Interval) -> Result<Vec<Interval>, NumericsError> + Sync,
{
    let mut settled = Vec::new();
    let mut unsettled = Vec::new();
    match predicate(t) {
        Ok(values) => {
            if values.len() != conditions.len() {
                return Err(CertifyFailure::Arity {
                    expected: conditions.len(),
                    got: values.len(),
                });
            }
            for &k in pending {
                let spec = &conditions[k];
                let verdict = values[k].sign_with_tol(0.0);
                if verdict == spec.required.verdict() {
                    settled.push((
                        k,
                        Leaf {
                            lo: t.lo(),
                            hi: t.hi(),
                            condition: spec.id.clone(),
                            verdict,
                        },
                    ));
                } else if verdict == spec.required.opposite() {
                    return Err(CertifyFailure::Counterexample {
                        condition: spec.id.clone(),
                        lo: t.lo(),
                        hi: t.hi(),
                        verdict,
                    });
                } else if depth >= max_depth {
                    return Err(CertifyFailure::DepthExceeded {
                        condition: spec.id.clone(),
                        lo: t.lo(),
                        hi: t.hi(),
                    });
                } else {
                    unsettled.push(k);
                }
            }
        }
        Err(error) => {
            if !error.is_refinable() || depth >= max_depth {
                return Err(CertifyFailure::Domain {
                    lo: t.lo(),
                    hi: t.hi(),
                    error,
                });
            }
            unsettled.extend_from_slice(pending);
        }
    }
    if unsettled.is_empty() {
        return Ok(settled);
    }
    let (left, right) = t.bisect();
    let (a, b) = if depth < PARALLEL_LEVELS {
        rayon::join(
            || refine(predicate, conditions, left, &unsettled, depth + 1, max_depth),
            || refine(predicate, conditions, right, &unsettled, depth + 1, max_depth),
        )
    } else {
        (
            refine(predicate, conditions, left, &unsettled, depth + 1, max_depth),
            refine(predicate, conditions, right, &unsettled, depth + 1, max_depth),
        )
    };
    // the left failure wins so that the reported subinterval is deterministic
    settled.extend(a?);
    settled.extend(b?);
    Ok(settled)
}

impl Certificate {
    /// Re-evaluates every leaf and checks that each condition's leaves tile
    /// the domain without gaps or overlaps.
    pub fn replay<F>(&self, predicate: &F) -> Result<(), ReplayError>
    where
        F: Fn(Interval) -> Result<Vec<Interval>, NumericsError> + Sync,
    {
        use rayon::prelude::*;

        for spec in &self.conditions {
            let mut cursor = self.domain.0;
            for leaf in self.leaves.iter().filter(|l| l.condition == spec.id) {
                if leaf.lo != cursor {
                    return Err(ReplayError::Coverage {
                        condition: spec.id.clone(),
                        at: cursor,
                    });
                }
                cursor = leaf.hi;
            }
            if cursor != self.domain.1 {
                return Err(ReplayError::Coverage {
                    condition: spec.id.clone(),
                    at: cursor,
                });
            }
        }
        self.leaves.par_iter().try_for_each(|leaf| {
            let k = self
                .conditions
                .iter()
                .position(|c| c.id == leaf.condition)
                .ok_or_else(|| ReplayError::UnknownCondition(leaf.condition.clone()))?;
            let values = predicate(Interval::new(leaf.lo, leaf.hi)).map_err(ReplayError::Eval)?;
            let replayed = values[k].sign_with_tol(0.0);
            if replayed != leaf.verdict || replayed != self.conditions[k].required.verdict() {
                return Err(ReplayError::VerdictMismatch {
                    condition: leaf.condition.clone(),
                    lo: leaf.lo,
                    hi: leaf.hi,
                    recorded: leaf.verdict,
                    replayed,
                });
            }
            Ok(())
        })
    }

    pub fn leaves_for<'a>(&'a self, condition: &'a str) -> impl Iterator<Item = &'a Leaf> + 'a {
        self.leaves.iter().filter(move |l| l.condition == condition)
    }

    /// Narrowest leaf over all conditions.
    pub fn min_leaf_width(&self) -> f64 {
        self.leaves
            .iter()
            .map(|l| l.hi - l.lo)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# chyp interval certificate v1\n");
        let _ = writeln!(out, "# domain {} {}", self.domain.0, self.domain.1);
        for c in &self.conditions {
            let _ = writeln!(out, "# condition {} {}", c.id, c.required.as_str());
        }
        out.push_str("# lo hi condition verdict\n");
        for leaf in &self.leaves {
            let _ = writeln!(
                out,
                "{} {} {} {}",
                leaf.lo, leaf.hi, leaf.condition, leaf.verdict
            );
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Certificate, NumericsError> {
        let parse_f = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| NumericsError::Parse(format!("bad number `{s}`: {e}")))
        };
        let mut domain = None;
        let mut conditions = Vec::new();
        let mut leaves = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if let Some(rest) = line.strip_prefix('#') {
                let header: Vec<&str> = rest.split_whitespace().collect();
                match header.as_slice() {
                    ["domain", lo, hi] => domain = Some((parse_f(lo)?, parse_f(hi)?)),
                    ["condition", id, sign] => {
                        let required = match *sign {
                            "positive" => RequiredSign::Positive,
                            "negative" => RequiredSign::Negative,
                            other => {
                                return Err(NumericsError::Parse(format!(
                                    "line {}: unknown sign `{other}`",
                                    n + 1
                                )))
                            }
                        };
                        conditions.push(ConditionSpec::new(*id, required));
                    }
                    _ => {}
                }
                continue;
            }
            let [lo, hi, id, verdict] = fields.as_slice() else {
                return Err(NumericsError::Parse(format!(
                    "line {}: expected 4 fields, found {}",
                    n + 1,
                    fields.len()
                )));
            };
            leaves.push(Leaf {
                lo: parse_f(lo)?,
                hi: parse_f(hi)?,
                condition: id.to_string(),
                verdict: verdict
                    .parse()
                    .map_err(|e: String| NumericsError::Parse(format!("line {}: {e}", n + 1)))?,
            });
        }
        let domain =
            domain.ok_or_else(|| NumericsError::Parse("missing `# domain` header".into()))?;
        Ok(Certificate {
            domain,
            conditions,
            leaves,
        })
    }
}
