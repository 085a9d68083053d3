use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::ledger::{rational_to_f64, Rational};
use num_traits::Signed;
use crate::construction::MirroredConfiguration;
use crate::hermitian::{geodesic_through, GeodesicParam, GramContext, HermitianError, Vec64};
use crate::numerics::{unwrap_phase, NumericsError, C64};

/// Default number of sampling intervals along `S₂`.
pub const TOLEDO_SAMPLES: usize = 2048;

#[derive(Debug, Clone, PartialEq, thiserror::Error, Serialize, Deserialize)]
pub enum ToledoError {
    #[error(transparent)]
    Hermitian(#[from] HermitianError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("the tracked function reaches the real nonnegative axis (phase offset {offset} from π)")]
    TouchesNonnegativeReals { offset: f64 },
}

/// Toledo invariant by continuous phase tracking along `S₂ = G[c₂,c₃]`.
///
/// `τ = −(32/π)·V`, where `V` is the total variation of
/// `½Arg(⟨c₁,x⟩⟨x,c₂⟩/⟨c₁,c₂⟩)` as `x` runs from `c₂` to `c₃`. At `x = c₂`
/// the function equals `⟨c₂,c₂⟩ < 0`, so the tracked argument starts at `π`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ToledoReport {
    pub samples: usize,
    /// Total argument variation along `S₂` (before halving).
    pub variation: f64,
    /// `π + variation`: the branch of `Arg q` reached by continuity.
    pub end_argument: f64,
    /// `−(32/π)·½·variation`.
    pub tau_raw: f64,
    /// `tau_raw` snapped to the nearest multiple of 2/3.
    pub tau: Rational,
    pub snap_deviation: f64,
    /// `|tau_raw(N) − tau_raw(2N)|`.
    pub refinement_change: f64,
    /// Largest `|tracked argument − π|` along the path; stays below `π`
    /// exactly when the function avoids the real nonnegative axis.
    pub max_offset_from_pi: f64,
    /// `q = ⟨c₁,c₃⟩⟨c₃,c₂⟩/⟨c₁,c₂⟩`, the end value.
    pub q: C64,
    /// `τ` for the two branches `Arg q` and `Arg q + π` in `[0, 2π)`,
    /// using only the line `ℝ·q`.
    pub branch_candidates: [Rational; 2],
    /// The candidate with `|τ| ≤ |χ| = 4`, if exactly one qualifies.
    pub branch_selected: Option<Rational>,
    /// Variations of `½Arg(⟨c₁,x⟩⟨x,s⟩/⟨c₁,s⟩)` along `S₁` and `S₃`,
    /// `s` the initial point of each segment. Both vanish when the sampled
    /// points stay on the real geodesics through `c₁`.
    pub other_sides: [f64; 2],
}

/// Nearest multiple of 2/3.
pub fn snap_to_thirds(x: f64) -> (Rational, f64) {
    let k = (x * 1.5).round() as i64;
    let r = Rational::new(2 * k, 3);
    (r, (x - rational_to_f64(r)).abs())
}

fn tau_from_half_variation(v: f64) -> f64 {
    -(32.0 / PI) * v
}

/// Log-uniform samples of `g(x)` for `x` from `xa` to `xb`, endpoints
/// replaced by the given points.
fn sample_segment(geo: &GeodesicParam, xa: f64, xb: f64, a: Vec64, b: Vec64, n: usize) -> Vec<Vec64> {
    let (la, lb) = (xa.ln(), xb.ln());
    let mut out = Vec::with_capacity(n + 1);
    out.push(a);
    for k in 1..n {
        out.push(geo.point((la + (lb - la) * k as f64 / n as f64).exp()));
    }
    out.push(b);
    out
}

fn tracked(
    gram: &GramContext<f64>,
    anchor: &Vec64,
    start: &Vec64,
    points: &[Vec64],
) -> Vec<C64> {
    let k = gram.inner(anchor, start);
    points
        .iter()
        .map(|x| gram.inner(anchor, x) * gram.inner(x, start) / k)
        .collect()
}

/// Argument variation of `⟨anchor,x⟩⟨x,start⟩/⟨anchor,start⟩` along the
/// geodesic segment from `start` to `end`, with `n` sampling intervals.
fn segment_variation(
    gram: &GramContext<f64>,
    anchor: &Vec64,
    start: &Vec64,
    end: &Vec64,
    n: usize,
) -> Result<(f64, Vec<C64>), ToledoError> {
    let (geo, xa, xb) = geodesic_through(gram, start, end)?;
    let points = sample_segment(&geo, xa, xb, *start, *end, n);
    let values = tracked(gram, anchor, start, &points);
    Ok((unwrap_phase(&values)?, values))
}

pub fn toledo(cfg: &MirroredConfiguration, samples: usize) -> Result<ToledoReport, ToledoError> {
    let g = cfg.gram();
    let b = &cfg.base;
    let (variation, values) = segment_variation(g, &b.c1, &b.c2, &b.c3, samples)?;
    let (variation_fine, _) = segment_variation(g, &b.c1, &b.c2, &b.c3, 2 * samples)?;

    // running argument, anchored at π
    let mut phase = PI;
    let mut max_offset_from_pi: f64 = 0.0;
    for pair in values.windows(2) {
        phase += (pair[1] / pair[0]).arg();
        max_offset_from_pi = max_offset_from_pi.max((phase - PI).abs());
    }
    if max_offset_from_pi >= PI {
        return Err(ToledoError::TouchesNonnegativeReals {
            offset: max_offset_from_pi,
        });
    }

    let tau_raw = tau_from_half_variation(0.5 * variation);
    let tau_fine = tau_from_half_variation(0.5 * variation_fine);
    let (tau, snap_deviation) = snap_to_thirds(tau_raw);

    let q = g.inner(&b.c1, &b.c3) * g.inner(&b.c3, &b.c2) / g.inner(&b.c1, &b.c2);
    let a0 = q.arg().rem_euclid(PI);
    let branch_candidates = [a0, a0 + PI].map(|a| snap_to_thirds(tau_from_half_variation(0.5 * a - PI / 2.0)).0);
    let admissible: Vec<Rational> = branch_candidates
        .iter()
        .copied()
        .filter(|c| c.abs() <= Rational::from_integer(4))
        .collect();
    let branch_selected = (admissible.len() == 1).then(|| admissible[0]);

    let (s1, _) = segment_variation(g, &b.c1, &b.c1, &b.c2, samples)?;
    let (s3, _) = segment_variation(g, &b.c1, &b.c3, &b.c1, samples)?;

    Ok(ToledoReport {
        samples,
        variation,
        end_argument: PI + variation,
        tau_raw,
        tau,
        snap_deviation,
        refinement_change: (tau_raw - tau_fine).abs(),
        max_offset_from_pi,
        q,
        branch_candidates,
        branch_selected,
        other_sides: [0.5 * s1, 0.5 * s3],
    })
}

impl ToledoReport {
    /// The published outcome: `τ = −8/3` within `snap_tol`, the rejected
    /// branch `40/3`, and the `|τ| ≤ 4` filter selecting `−8/3`.
    pub fn matches_published(&self, snap_tol: f64) -> bool {
        let expected = Rational::new(-8, 3);
        self.tau == expected
            && self.snap_deviation < snap_tol
            && self.branch_candidates.contains(&Rational::new(40, 3))
            && self.branch_selected == Some(expected)
    }

    /// Internal consistency: the tracked value snaps cleanly, agrees with
    /// the branch selected by `|τ| ≤ 4`, is stable under refinement and
    /// the other two sides contribute nothing.
    pub fn self_consistent(&self, snap_tol: f64) -> bool {
        self.snap_deviation < snap_tol
            && self.branch_selected == Some(self.tau)
            && self.refinement_change < 1e-8
            && self.other_sides.iter().all(|v| v.abs() < 1e-9)
    }
}
