use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{realize_word, Letter, Word};
use crate::construction::MirroredConfiguration;
use crate::hermitian::{GramContext, Iso64, Vec64};

/// One of the three vertex slices `C₁, C₂, C₃` of the base triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slice {
    C1,
    C2,
    C3,
}

impl Slice {
    pub const ALL: [Slice; 3] = [Slice::C1, Slice::C2, Slice::C3];

    pub fn index(self) -> usize {
        match self {
            Slice::C1 => 0,
            Slice::C2 => 1,
            Slice::C3 => 2,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.index() + 1)
    }
}

/// The side `B[w·Cₐ, w·C_b]` of the triangle `Δ_triangle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideLabel {
    pub triangle: usize,
    pub word: Word,
    pub ends: [Slice; 2],
}

impl SideLabel {
    fn new(triangle: usize, word: Word, a: Slice, b: Slice) -> Self {
        SideLabel {
            triangle,
            word,
            ends: [a, b],
        }
    }

    /// Images of the end slices' base points under the side's word.
    pub fn points(&self, generators: &[Iso64; 4], base: &[Vec64; 3]) -> [Vec64; 2] {
        let w = realize_word(&self.word, generators);
        self.ends.map(|s| w.apply(&base[s.index()]))
    }
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.word.is_empty() {
            String::new()
        } else {
            self.word.to_string()
        };
        write!(
            f,
            "B[{p}{},{p}{}] of Δ{}",
            self.ends[0],
            self.ends[1],
            self.triangle,
            p = prefix
        )
    }
}

/// A side pairing `I_j` of the cake boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub index: usize,
    /// The word as printed, e.g. `W2R3R2W0^-1`.
    pub notation: String,
    pub word: Word,
    pub source: SideLabel,
    pub target: SideLabel,
}

impl Identification {
    pub fn name(&self) -> String {
        format!("I{}", self.index)
    }
}

/// The eight side pairings `I₁..I₈`.
///
/// Each has the shape `W_a X Y W_b⁻¹` and sends the side of the source
/// triangle onto the side of the target triangle, endpoints in the listed
/// order.
pub fn identifications() -> Vec<Identification> {
    use Letter::*;
    use Slice::*;
    let w = Word::prefix;
    // (a, [X, Y], b, source (Δ, prefix, ends), target (Δ, prefix, ends))
    let rows: [(usize, [Letter; 2], usize, SideLabel, SideLabel); 8] = [
        (
            2,
            [R3, R2],
            0,
            SideLabel::new(12, w(0), C2, C3),
            SideLabel::new(13, w(2).with(&[R3]), C3, C2),
        ),
        (
            4,
            [R1, R3],
            2,
            SideLabel::new(13, w(2).with(&[R3]), C1, C2),
            SideLabel::new(4, w(4), C2, C1),
        ),
        (
            5,
            [R3, R1],
            3,
            SideLabel::new(3, w(3), C2, C1),
            SideLabel::new(14, w(5).with(&[R3]), C1, C2),
        ),
        (
            7,
            [R2, R3],
            5,
            SideLabel::new(14, w(5).with(&[R3]), C3, C2),
            SideLabel::new(7, w(7), C2, C3),
        ),
        (
            8,
            [R3, R2],
            6,
            SideLabel::new(6, w(6), C2, C3),
            SideLabel::new(15, w(8).with(&[R3]), C3, C2),
        ),
        (
            10,
            [R1, R3],
            8,
            SideLabel::new(15, w(8).with(&[R3]), C1, C2),
            SideLabel::new(10, w(10), C2, C1),
        ),
        (
            11,
            [R3, R1],
            9,
            SideLabel::new(9, w(9), C2, C1),
            SideLabel::new(16, w(11).with(&[R3]), C1, C2),
        ),
        (
            1,
            [R2, R3],
            11,
            SideLabel::new(16, w(11).with(&[R3]), C3, C2),
            SideLabel::new(1, w(1), C2, C3),
        ),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(j, (a, xy, b, source, target))| Identification {
            index: j + 1,
            notation: format!("W{a}{}{}W{b}^-1", xy[0], xy[1]),
            word: w(a).with(&xy).then(&w(b).inverse()),
            source,
            target,
        })
        .collect()
}

/// Result of checking one pairing against a realisation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentificationCheck {
    pub name: String,
    pub notation: String,
    pub source: String,
    pub target: String,
    pub antilinear: bool,
    pub form_residual: f64,
    /// Projective residuals of `I(source end) = target end`, per end.
    pub endpoint_residuals: [f64; 2],
    pub passed: bool,
}

/// Checks that each `I_j` preserves the form and maps the declared source
/// endpoints onto the declared target endpoints, in order.
pub fn check_identifications(
    gram: &GramContext<f64>,
    generators: &[Iso64; 4],
    base: &[Vec64; 3],
    tol: f64,
) -> Vec<IdentificationCheck> {
    identifications()
        .into_iter()
        .map(|ident| {
            let iso = realize_word(&ident.word, generators);
            let src = ident.source.points(generators, base);
            let tgt = ident.target.points(generators, base);
            let endpoint_residuals =
                [0, 1].map(|k| iso.apply(&src[k]).projective_residual(&tgt[k]));
            let form_residual = iso.form_residual(gram);
            let passed = form_residual <= tol && endpoint_residuals.iter().all(|&r| r <= tol);
            IdentificationCheck {
                name: ident.name(),
                notation: ident.notation.clone(),
                source: ident.source.to_string(),
                target: ident.target.to_string(),
                antilinear: iso.antilinear,
                form_residual,
                endpoint_residuals,
                passed,
            }
        })
        .collect()
}

/// Identification checks in the complex configuration, slices represented
/// by their polar points.
pub fn verify_identifications(cfg: &MirroredConfiguration) -> Vec<IdentificationCheck> {
    check_identifications(
        cfg.gram(),
        &cfg.generators(),
        &cfg.base.polar_points(),
        super::CAKE_TOL,
    )
}
