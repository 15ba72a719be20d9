//! Framed circular 3-braids and braided belts.
//!
//! The circular braid group on three strands has six generator letters
//! σ₁, σ₂, σ₃ and their inverses. A word acts on a twist vector letter by
//! letter, rightmost letter first, each letter permuting the entries and
//! then adding its own twist contribution. The resulting vector is the pure
//! twist word of the belt, a complete isotopy invariant.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;
use crate::twist::TwistVector;

/// One of the six generator letters of the circular braid group on three
/// strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    index: u8, // 1..=3
    inverted: bool,
}

impl Generator {
    pub fn new(index: u8, inverted: bool) -> Self {
        assert!(
            (1..=3).contains(&index),
            "generator index must be 1, 2 or 3"
        );
        Generator { index, inverted }
    }

    /// σᵢ
    pub fn sigma(index: u8) -> Self {
        Generator::new(index, false)
    }

    /// σᵢ⁻¹
    pub fn sigma_inv(index: u8) -> Self {
        Generator::new(index, true)
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn is_inverted(self) -> bool {
        self.inverted
    }

    pub fn inverse(self) -> Self {
        Generator {
            index: self.index,
            inverted: !self.inverted,
        }
    }

    /// The twist contribution of this letter.
    ///
    /// σ₁ ↦ [1/2,1/2,-1/2], σ₂ ↦ [-1/2,1/2,1/2], σ₃ ↦ [1/2,-1/2,1/2];
    /// inverses negate.
    pub fn twist_vector(self) -> TwistVector {
        let base = match self.index {
            1 => TwistVector::from_doubled([1, 1, -1]),
            2 => TwistVector::from_doubled([-1, 1, 1]),
            3 => TwistVector::from_doubled([1, -1, 1]),
            _ => unreachable!(),
        };
        if self.inverted {
            -base
        } else {
            base
        }
    }

    /// The ribbon permutation induced by this letter; a letter and its
    /// inverse induce the same transposition.
    pub fn permutation(self) -> Permutation {
        match self.index {
            1 => Permutation::transposition(0, 1),
            2 => Permutation::transposition(1, 2),
            3 => Permutation::transposition(2, 0),
            _ => unreachable!(),
        }
    }

    /// Acts on a twist vector: permute the entries, then add this letter's
    /// twist contribution.
    pub fn apply(self, t: TwistVector) -> TwistVector {
        t.permuted(&self.permutation()) + self.twist_vector()
    }

    /// All six letters, in token order `1 2 3 -1 -2 -3`.
    pub fn all() -> [Generator; 6] {
        [
            Generator::sigma(1),
            Generator::sigma(2),
            Generator::sigma(3),
            Generator::sigma_inv(1),
            Generator::sigma_inv(2),
            Generator::sigma_inv(3),
        ]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "-{}", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite word over the six generator letters, possibly empty.
///
/// The word `g₁g₂…gₖ` acts on a twist vector with `gₖ` first (rightmost
/// letter first), matching the operator notation in which σ₂σ₁ means
/// "apply σ₁, then σ₂".
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.letters.push(g);
    }

    /// Concatenation: `self` to the left of `rhs`, so `rhs` acts first.
    pub fn concat(&self, rhs: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord { letters }
    }

    /// The inverse word: reverse the letters and invert each one.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Folds the letter action over the word, rightmost letter first.
    pub fn evaluate(&self, start: TwistVector) -> TwistVector {
        self.letters.iter().rev().fold(start, |t, g| g.apply(t))
    }

    /// Pure twist word of the belt with zero base twists.
    pub fn evaluate_from_zero(&self) -> TwistVector {
        self.evaluate(TwistVector::ZERO)
    }

    /// The ribbon permutation induced by the whole word.
    ///
    /// Satisfies `evaluate(t) = permutation().apply(t) + evaluate(0)` for
    /// every `t`.
    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .rev()
            .fold(Permutation::IDENTITY, |p, g| g.permutation().after(&p))
    }

    /// The boundary of the zero-twist belt on this word is a knot exactly
    /// when the word has odd length.
    pub fn is_knot_boundary(&self) -> bool {
        self.letters.len() % 2 == 1
    }
}

impl fmt::Display for BraidWord {
    /// Whitespace-separated tokens; leftmost token is the last-applied letter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid braid letter `{token}` at position {position} (expected 1, 2, 3, -1, -2 or -3)")]
pub struct ParseWordError {
    pub position: usize,
    pub token: String,
}

impl FromStr for BraidWord {
    type Err = ParseWordError;

    /// Parses whitespace-separated tokens; `-2` denotes σ₂⁻¹. The empty
    /// string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for (i, tok) in s.split_whitespace().enumerate() {
            let g = match tok {
                "1" => Generator::sigma(1),
                "2" => Generator::sigma(2),
                "3" => Generator::sigma(3),
                "-1" => Generator::sigma_inv(1),
                "-2" => Generator::sigma_inv(2),
                "-3" => Generator::sigma_inv(3),
                _ => {
                    return Err(ParseWordError {
                        position: i + 1,
                        token: tok.to_string(),
                    })
                }
            };
            letters.push(g);
        }
        Ok(BraidWord { letters })
    }
}

/// A braided 3-belt: a braid word together with base ribbon twists.
///
/// The isotopy class is fully determined by the pure twist word
/// `word.evaluate(twists)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Belt {
    word: BraidWord,
    twists: TwistVector,
}

impl Belt {
    pub fn new(word: BraidWord, twists: TwistVector) -> Self {
        Belt { word, twists }
    }

    pub fn from_word(word: BraidWord) -> Self {
        Belt {
            word,
            twists: TwistVector::ZERO,
        }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn twists(&self) -> TwistVector {
        self.twists
    }

    /// The complete isotopy invariant of the belt.
    pub fn pure_twist_word(&self) -> TwistVector {
        self.word.evaluate(self.twists)
    }

    /// Joins the bottom of `self` to the top of `rhs`: words concatenate
    /// and `self`'s base twists slide down through `rhs`'s braiding.
    ///
    /// Composition is not compatible with isotopy (belts form no group), so
    /// the result depends on the chosen representatives, not just on their
    /// isotopy classes.
    pub fn compose(&self, rhs: &Belt) -> Belt {
        Belt {
            word: self.word.concat(&rhs.word),
            twists: self.twists.permuted(&rhs.word.permutation()) + rhs.twists,
        }
    }

    /// Belts are isotopic exactly when their pure twist words are equal.
    pub fn is_isotopic_to(&self, rhs: &Belt) -> bool {
        self.pure_twist_word() == rhs.pure_twist_word()
    }
}
