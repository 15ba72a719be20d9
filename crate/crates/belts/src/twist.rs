//! The pure twist word: the isotopy invariant of a braided 3-belt.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use thiserror::Error;

use crate::halfint::{HalfInt, ParseHalfIntError};
use crate::perm::Permutation;

/// Parity pattern of a twist vector's entries.
///
/// A belt is orientable exactly when integers and half-odd values do not mix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityClass {
    AllInteger,
    AllHalfOdd,
    Mixed,
}

/// The triple `[a,b,c]` of per-ribbon twists.
///
/// Equality is componentwise and ordered; two belts are isotopic exactly
/// when their pure twist words are equal.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistVector {
    entries: [HalfInt; 3],
}

impl TwistVector {
    pub const ZERO: TwistVector = TwistVector {
        entries: [HalfInt::ZERO; 3],
    };

    pub const fn new(entries: [HalfInt; 3]) -> Self {
        TwistVector { entries }
    }

    /// Entries given as doubled values (units of 1/2).
    pub const fn from_doubled(doubled: [i64; 3]) -> Self {
        TwistVector {
            entries: [
                HalfInt::from_doubled(doubled[0]),
                HalfInt::from_doubled(doubled[1]),
                HalfInt::from_doubled(doubled[2]),
            ],
        }
    }

    pub fn from_ints(ints: [i64; 3]) -> Self {
        TwistVector {
            entries: [
                HalfInt::from_int(ints[0]),
                HalfInt::from_int(ints[1]),
                HalfInt::from_int(ints[2]),
            ],
        }
    }

    pub fn entries(&self) -> [HalfInt; 3] {
        self.entries
    }

    pub fn sum(&self) -> HalfInt {
        self.entries[0] + self.entries[1] + self.entries[2]
    }

    /// Number of half-odd entries (0 to 3).
    pub fn half_odd_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_half_odd()).count()
    }

    pub fn parity_class(&self) -> ParityClass {
        match self.half_odd_count() {
            0 => ParityClass::AllInteger,
            3 => ParityClass::AllHalfOdd,
            _ => ParityClass::Mixed,
        }
    }

    /// True when integers and half-odd values do not mix.
    pub fn is_orientable(&self) -> bool {
        self.parity_class() != ParityClass::Mixed
    }

    /// True when the entries are integers that are all even or all odd.
    ///
    /// Exactly the vectors reachable from zero by products of generator
    /// squares, i.e. expressible as (σ₁²)^α (σ₂²)^β (σ₃²)^γ. Note this is
    /// strictly smaller than the set reachable by words with trivial
    /// ribbon permutation: σ₁σ₂σ₁σ₃ permutes nothing yet reaches [1,0,1].
    pub fn is_pure(&self) -> bool {
        let Some(ints) = self
            .entries
            .iter()
            .map(|e| e.as_integer())
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let parity = ints[0].rem_euclid(2);
        ints.iter().all(|n| n.rem_euclid(2) == parity)
    }

    pub fn permuted(&self, p: &Permutation) -> Self {
        TwistVector {
            entries: p.apply(self.entries),
        }
    }

    /// Representative with entries sorted in descending order; twist
    /// vectors related by a ribbon relabeling share it.
    pub fn sorted_desc(&self) -> Self {
        let mut entries = self.entries;
        entries.sort_unstable_by(|x, y| y.cmp(x));
        TwistVector { entries }
    }
}

impl Add for TwistVector {
    type Output = TwistVector;
    fn add(self, rhs: TwistVector) -> TwistVector {
        TwistVector {
            entries: [
                self.entries[0] + rhs.entries[0],
                self.entries[1] + rhs.entries[1],
                self.entries[2] + rhs.entries[2],
            ],
        }
    }
}

impl Neg for TwistVector {
    type Output = TwistVector;
    fn neg(self) -> TwistVector {
        TwistVector {
            entries: [-self.entries[0], -self.entries[1], -self.entries[2]],
        }
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.entries[0], self.entries[1], self.entries[2]
        )
    }
}

impl fmt::Debug for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {} {}]",
            self.entries[0], self.entries[1], self.entries[2]
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseTwistError {
    #[error("expected 3 twist values, found {found}")]
    WrongArity { found: usize },
    #[error("twist value {position}: {source}")]
    BadValue {
        position: usize,
        source: ParseHalfIntError,
    },
}

impl FromStr for TwistVector {
    type Err = ParseTwistError;

    /// Parses three whitespace-separated values, e.g. `3/2 1/2 -1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ParseTwistError::WrongArity {
                found: tokens.len(),
            });
        }
        let mut entries = [HalfInt::ZERO; 3];
        for (i, tok) in tokens.iter().enumerate() {
            entries[i] = tok.parse().map_err(|source| ParseTwistError::BadValue {
                position: i + 1,
                source,
            })?;
        }
        Ok(TwistVector::new(entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientability() {
        assert!(TwistVector::from_doubled([1, 1, 1]).is_orientable());
        assert!(TwistVector::ZERO.is_orientable());
        assert!(!TwistVector::from_doubled([2, 2, 1]).is_orientable());
    }

    #[test]
    fn purity() {
        assert!(TwistVector::from_ints([2, 2, 4]).is_pure());
        assert!(TwistVector::from_ints([1, 1, 3]).is_pure());
        assert!(!TwistVector::from_ints([2, 4, 3]).is_pure());
        // negative entries follow the same parity rule
        assert!(TwistVector::from_ints([-1, 1, -3]).is_pure());
        assert!(!TwistVector::from_doubled([1, 1, 1]).is_pure());
    }

    #[test]
    fn parity_classes() {
        assert_eq!(
            TwistVector::from_ints([1, 2, 3]).parity_class(),
            ParityClass::AllInteger
        );
        assert_eq!(
            TwistVector::from_doubled([1, -3, 5]).parity_class(),
            ParityClass::AllHalfOdd
        );
        assert_eq!(
            TwistVector::from_doubled([2, 2, 1]).parity_class(),
            ParityClass::Mixed
        );
    }

    #[test]
    fn display_and_parse() {
        let t = TwistVector::from_doubled([3, 1, -1]);
        assert_eq!(t.to_string(), "3/2 1/2 -1/2");
        assert_eq!("3/2 1/2 -1/2".parse::<TwistVector>().unwrap(), t);
        assert_eq!(
            "1 2 3".parse::<TwistVector>().unwrap(),
            TwistVector::from_ints([1, 2, 3])
        );
        assert!(matches!(
            "1 2".parse::<TwistVector>(),
            Err(ParseTwistError::WrongArity { found: 2 })
        ));
        assert!(matches!(
            "1 x 3".parse::<TwistVector>(),
            Err(ParseTwistError::BadValue { position: 2, .. })
        ));
    }

    #[test]
    fn sorted_representative() {
        let t = TwistVector::from_doubled([-3, 3, 1]);
        assert_eq!(t.sorted_desc(), TwistVector::from_doubled([3, 1, -3]));
    }
}
