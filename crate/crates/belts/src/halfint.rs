//! Exact half-integer arithmetic.
//!
//! Ribbon twists are always integer multiples of 1/2 (a value of 1/2 is one
//! half-twist of π). Storing the doubled value keeps every operation in
//! integer arithmetic; there is no floating point anywhere in this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use thiserror::Error;

/// An exact multiple of 1/2, stored as its doubled value.
///
/// Arithmetic is checked: overflow aborts instead of wrapping.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    /// Value `doubled / 2`.
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt {
            doubled: n.checked_mul(2).expect("half-integer overflow"),
        }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    /// True when the value is a whole integer.
    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// True when the value is an odd multiple of 1/2.
    pub const fn is_half_odd(self) -> bool {
        self.doubled % 2 != 0
    }

    /// The integer value, if whole.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt {
            doubled: self.doubled.checked_abs().expect("half-integer overflow"),
        }
    }

    pub fn scale(self, k: i64) -> Self {
        HalfInt {
            doubled: self.doubled.checked_mul(k).expect("half-integer overflow"),
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self
                .doubled
                .checked_add(rhs.doubled)
                .expect("half-integer overflow"),
        }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        *self = *self + rhs;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self
                .doubled
                .checked_sub(rhs.doubled)
                .expect("half-integer overflow"),
        }
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        *self = *self - rhs;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: self.doubled.checked_neg().expect("half-integer overflow"),
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid half-integer `{input}` (expected an integer or a fraction over 2, e.g. `-3/2`)")]
pub struct ParseHalfIntError {
    pub input: String,
}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts an integer (`2`, `-1`) or a fraction over 2 (`3/2`, `-1/2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError {
            input: s.to_string(),
        };
        match s.split_once('/') {
            None => {
                let n: i64 = s.trim().parse().map_err(|_| err())?;
                Ok(HalfInt::from_int(n))
            }
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(err());
                }
                let n: i64 = num.trim().parse().map_err(|_| err())?;
                Ok(HalfInt::from_doubled(n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let cases = [(3, "3/2"), (-1, "-1/2"), (4, "2"), (0, "0"), (-6, "-3")];
        for (doubled, text) in cases {
            let h = HalfInt::from_doubled(doubled);
            assert_eq!(h.to_string(), text);
            assert_eq!(text.parse::<HalfInt>().unwrap(), h);
        }
        // integer inputs may also be written over 2
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("3/4".parse::<HalfInt>().is_err());
        assert!("a".parse::<HalfInt>().is_err());
    }

    #[test]
    fn parity() {
        assert!(HalfInt::from_int(2).is_integer());
        assert!(HalfInt::from_doubled(-3).is_half_odd());
        assert_eq!(HalfInt::from_int(-5).as_integer(), Some(-5));
        assert_eq!(HalfInt::HALF.as_integer(), None);
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::from_doubled(3); // 3/2
        let b = HalfInt::from_doubled(-1); // -1/2
        assert_eq!(a + b, HalfInt::ONE);
        assert_eq!(a - b, HalfInt::from_int(2));
        assert_eq!(-a, HalfInt::from_doubled(-3));
        assert_eq!(a.scale(3), HalfInt::from_doubled(9));
    }

    #[test]
    #[should_panic(expected = "half-integer overflow")]
    fn overflow_aborts() {
        let _ = HalfInt::from_doubled(i64::MAX) + HalfInt::HALF;
    }
}
