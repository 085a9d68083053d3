use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::identify::Slice;
use super::word::{realize_word, Letter, Word};
use super::CAKE_TOL;
use crate::construction::{angles, ConstructionError, MirroredConfiguration};
use crate::hermitian::{Iso64, Isometry, Vec64};
use crate::numerics::C64;

/// One projective mapping statement `w·X = Y` and its outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MappingCheck {
    /// E.g. `W5 c2 = c1`.
    pub statement: String,
    /// Whether the statement is asserted (true) or is a negative control.
    pub expected: bool,
    pub observed: bool,
    pub residual: f64,
}

impl MappingCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

/// Which slice `Wᵢ` sends to `C₁` (the same for the vertex points).
pub fn slice_sent_to_c1(i: usize) -> Slice {
    match i % 6 {
        0 | 1 => Slice::C1,
        2 | 5 => Slice::C2,
        _ => Slice::C3,
    }
}

fn check(statement: String, expected: bool, image: &Vec64, target: &Vec64) -> MappingCheck {
    let residual = image.projective_residual(target);
    MappingCheck {
        statement,
        expected,
        observed: residual <= CAKE_TOL,
        residual,
    }
}

/// The generator table (`R₁C₁ = C₂`, …, `R₃C₃ = C₃` and the same for
/// `c₁,c₂,c₃`) followed by the full `Wᵢ`-table, `1 ≤ i ≤ 12`, for slices
/// (via polar points) and vertex points.
///
/// In the `Wᵢ`-table every pair `(i, k)` is checked; the pairs absent from
/// the published table must come out false. `W₁C₂ = C₁` is the designated
/// negative control and is always listed first among them.
pub fn verify_mapping_tables(cfg: &MirroredConfiguration) -> Vec<MappingCheck> {
    let gens = cfg.generators();
    let polar = cfg.base.polar_points();
    let points = [cfg.base.c1, cfg.base.c2, cfg.base.c3];
    let mut out = Vec::new();

    let generator_rows = [
        (Letter::R1, Slice::C1, Slice::C2),
        (Letter::R1, Slice::C2, Slice::C1),
        (Letter::R2, Slice::C2, Slice::C3),
        (Letter::R2, Slice::C3, Slice::C2),
        (Letter::R3, Slice::C1, Slice::C1),
        (Letter::R3, Slice::C3, Slice::C3),
    ];
    for (set, lower) in [(&polar, false), (&points, true)] {
        for &(l, from, to) in &generator_rows {
            let img = gens[l.index()].apply(&set[from.index()]);
            out.push(check(
                format!("{l} {} = {}", name(from, lower), name(to, lower)),
                true,
                &img,
                &set[to.index()],
            ));
        }
    }

    out.push(negative_control(cfg));
    for (set, lower) in [(&polar, false), (&points, true)] {
        for i in 1..=12 {
            let w = realize_word(&Word::prefix(i), &gens);
            for s in Slice::ALL {
                if !lower && i == 1 && s == Slice::C2 {
                    continue;
                }
                let img = w.apply(&set[s.index()]);
                out.push(check(
                    format!("W{i} {} = {}", name(s, lower), name(Slice::C1, lower)),
                    slice_sent_to_c1(i) == s,
                    &img,
                    &set[0],
                ));
            }
        }
    }
    out
}

/// `W₁C₂ = C₁`, which is absent from the published table and must be false.
pub fn negative_control(cfg: &MirroredConfiguration) -> MappingCheck {
    let gens = cfg.generators();
    let img = realize_word(&Word::prefix(1), &gens).apply(&cfg.base.p2);
    check("W1 C2 = C1".to_string(), false, &img, &cfg.base.p1)
}

fn name(s: Slice, lower: bool) -> String {
    let n = s.to_string();
    if lower {
        n.to_lowercase()
    } else {
        n
    }
}

/// The generators `X₁..X₅` of the index-4 supergroup of the genus-2 surface
/// group, and their relations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct H5Check {
    pub words: Vec<String>,
    /// `|Xᵢ² − Id|` for each generator.
    pub square_residuals: Vec<f64>,
    pub all_linear: bool,
    /// The scalar `c` with `X₅X₄X₃X₂X₁ ≈ c·Id`.
    pub product_scalar: C64,
    /// Distance of the product from the nearest scalar matrix.
    pub product_scalar_residual: f64,
    /// `|c − ϑ⁻²|`.
    pub product_theta_residual: f64,
    pub passed: bool,
}

pub fn h5_words() -> [Word; 5] {
    use Letter::*;
    [
        Word::new(vec![R1]),
        Word::new(vec![R2]),
        Word::new(vec![R3, R2, R3]),
        Word::new(vec![R3, R1, R3]),
        Word::new(vec![R0]),
    ]
}

pub fn h5_presentation_check(cfg: &MirroredConfiguration) -> H5Check {
    let gens = cfg.generators();
    let xs: Vec<Iso64> = h5_words().iter().map(|w| realize_word(w, &gens)).collect();
    let square_residuals = xs
        .iter()
        .map(|x| x.compose(x).distance(&Isometry::identity()))
        .collect::<Vec<_>>();
    let all_linear = xs.iter().all(|x| !x.antilinear);
    let product = xs.iter().rev().fold(Isometry::identity(), |acc, x| acc.compose(x));
    let product_scalar = product.trace().scale(1.0 / 3.0);
    let product_scalar_residual = product.scalar_residual();
    let theta_inv2 = C64::from_polar(1.0, -2.0 * PI / 3.0);
    let product_theta_residual = product_scalar.dist_max(theta_inv2);
    let passed = all_linear
        && square_residuals.iter().all(|&r| r <= CAKE_TOL)
        && product_scalar_residual <= CAKE_TOL
        && product_theta_residual <= CAKE_TOL;
    H5Check {
        words: h5_words().iter().map(Word::to_string).collect(),
        square_residuals,
        all_linear,
        product_scalar,
        product_scalar_residual,
        product_theta_residual,
        passed,
    }
}

/// The twelve oriented angles at `c₁` between consecutive sides `Lᵢ`,
/// `Lᵢ₊₁`, and their total.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleCycle {
    pub sector_angles: Vec<f64>,
    pub total: f64,
    /// `|total − 2π|`.
    pub residual: f64,
}

/// Sector angle after `Lᵢ` is `β₁` for `i = 1,6,7,12`, `β₂` for
/// `i = 2,5,8,11` and `β₃` for `i = 3,4,9,10`.
pub fn c1_angle_cycle(cfg: &MirroredConfiguration) -> Result<AngleCycle, ConstructionError> {
    let beta = angles(&cfg.base)?;
    let sector_angles: Vec<f64> = (1..=12).map(|i| beta[slice_sent_to_c1(i).index()]).collect();
    let total: f64 = sector_angles.iter().sum();
    Ok(AngleCycle {
        sector_angles,
        total,
        residual: (total - 2.0 * PI).abs(),
    })
}
