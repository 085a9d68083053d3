use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CakeError;
use crate::hermitian::{Iso64, Isometry};

/// A generator `R₀..R₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    R0,
    R1,
    R2,
    R3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::R0, Letter::R1, Letter::R2, Letter::R3];

    pub fn index(self) -> usize {
        match self {
            Letter::R0 => 0,
            Letter::R1 => 1,
            Letter::R2 => 2,
            Letter::R3 => 3,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.index())
    }
}

/// A word in the generators, read as a composition: `R₃R₁` applies `R₁`
/// first. Every generator is an involution, so inverses are reversals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<Letter>,
}

/// The relator `R₃R₁R₂R₃R₂R₁R₃R₁R₂R₃R₂R₁`, trivial in the projective group.
pub const RELATOR: [Letter; 12] = {
    use Letter::*;
    [R3, R1, R2, R3, R2, R1, R3, R1, R2, R3, R2, R1]
};

impl Word {
    pub fn new(letters: impl Into<Vec<Letter>>) -> Self {
        Word {
            letters: letters.into(),
        }
    }

    pub fn identity() -> Self {
        Word::default()
    }

    /// `Wᵢ`, the prefix of length `i` of the relator (`0 ≤ i ≤ 12`).
    pub fn prefix(i: usize) -> Self {
        assert!(i <= RELATOR.len(), "prefix length {i} exceeds the relator");
        Word::new(&RELATOR[..i])
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word::new(self.letters.iter().rev().copied().collect::<Vec<_>>())
    }

    pub fn then(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn with(&self, letters: &[Letter]) -> Self {
        self.then(&Word::new(letters))
    }

    /// Number of `R₃` letters; odd means antilinear (and orientation
    /// reversing).
    pub fn r3_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::R3).count()
    }

    pub fn is_antilinear(&self) -> bool {
        self.r3_count() % 2 == 1
    }

    /// Freely reduces `RᵢRᵢ` pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CakeError;

    /// Parses `R3R1R2` or `1`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" || s.is_empty() {
            return Ok(Word::identity());
        }
        let bytes = s.as_bytes();
        if bytes.len() % 2 != 0 {
            return Err(CakeError::Parse(s));
        }
        let mut letters = Vec::with_capacity(bytes.len() / 2);
        for pair in bytes.chunks(2) {
            let l = match pair {
                b"R0" => Letter::R0,
                b"R1" => Letter::R1,
                b"R2" => Letter::R2,
                b"R3" => Letter::R3,
                _ => return Err(CakeError::Parse(s.clone())),
            };
            letters.push(l);
        }
        Ok(Word { letters })
    }
}

/// Composes the realisations of the letters, left to right.
pub fn realize_word(word: &Word, generators: &[Iso64; 4]) -> Iso64 {
    word.letters
        .iter()
        .fold(Isometry::identity(), |acc, l| acc.compose(&generators[l.index()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes() {
        assert_eq!(Word::prefix(0), Word::identity());
        assert_eq!(Word::prefix(2).to_string(), "R3R1");
        assert_eq!(Word::prefix(5).to_string(), "R3R1R2R3R2");
        assert!(Word::prefix(2).is_antilinear());
        assert!(!Word::prefix(12).is_antilinear());
    }

    #[test]
    fn parse_round_trip() {
        let w: Word = "R3R1R2".parse().unwrap();
        assert_eq!(w, Word::prefix(3));
        assert_eq!("1".parse::<Word>().unwrap(), Word::identity());
        assert!("R4".parse::<Word>().is_err());
        assert!("R3R".parse::<Word>().is_err());
    }

    #[test]
    fn inverse_reduces_to_identity() {
        for i in 0..=12 {
            let w = Word::prefix(i);
            assert!(w.then(&w.inverse()).reduced().is_empty());
        }
    }
}
