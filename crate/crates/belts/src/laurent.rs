//! Integer-coefficient Laurent polynomials in x = t^(1/2).
//!
//! Working in the square root of t keeps every exponent that shows up in
//! the skein relation an integer: even x-exponents are whole powers of t,
//! odd ones the half powers. Coefficient arithmetic is checked and aborts
//! on overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("negative power of a non-unit polynomial (only ±x^n is invertible)")]
    NonUnitNegativePower,
    #[error("inexact polynomial division")]
    InexactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid polynomial term `{term}` (expected `exp:coef`)")]
pub struct ParsePolyError {
    pub term: String,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// A Laurent polynomial with integer coefficients in x = t^(1/2).
///
/// The map from exponent to coefficient never stores zeros, so equality and
/// serialization are canonical.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `coef · x^exp`
    pub fn monomial(exp: i64, coef: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exp, coef);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (exp, coef) in iter {
            p.add_term(exp, coef);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = checked_add(*entry, coef);
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coef(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True for ±x^n, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().map(|c| c.abs()) == Some(1)
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        if k == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e, checked_mul(c, k)))
                .collect(),
        }
    }

    /// Multiplication by x^shift.
    pub fn shifted(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e.checked_add(shift).expect("exponent overflow"), c))
                .collect(),
        }
    }

    /// Integer power. Negative exponents are defined only for units.
    pub fn power(&self, k: i64) -> Result<LaurentPoly, LaurentError> {
        if k < 0 {
            if !self.is_unit() {
                return Err(LaurentError::NonUnitNegativePower);
            }
            let (&exp, &coef) = self.terms.iter().next().unwrap();
            // (±x^n)^k = (±1)^k x^(nk); coef is ±1 here
            let c = if coef == -1 && k % 2 != 0 { -1 } else { 1 };
            return Ok(LaurentPoly::monomial(
                exp.checked_mul(k).expect("exponent overflow"),
                c,
            ));
        }
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Exact division: returns `q` with `q · den = self`, or
    /// `InexactDivision` when no such Laurent polynomial exists.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // shift both operands to ordinary polynomials, divide, shift back
        let num_shift = self.min_exp().unwrap();
        let den_shift = den.min_exp().unwrap();
        let mut rem = self.shifted(-num_shift);
        let den0 = den.shifted(-den_shift);
        let den_deg = den0.max_exp().unwrap();
        let den_lead = den0.coef(den_deg);

        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let rem_deg = rem.max_exp().unwrap();
            if rem_deg < den_deg {
                return Err(LaurentError::InexactDivision);
            }
            let rem_lead = rem.coef(rem_deg);
            if rem_lead % den_lead != 0 {
                return Err(LaurentError::InexactDivision);
            }
            let q = LaurentPoly::monomial(rem_deg - den_deg, rem_lead / den_lead);
            rem = &rem - &(&q * &den0);
            quot = &quot + &q;
        }
        Ok(quot.shifted(num_shift - den_shift))
    }

    /// The substitution t ↦ 1/t (x^n ↦ x^−n termwise); an involution and a
    /// ring homomorphism.
    pub fn substitute_inverse(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Value at t = 1: the sum of coefficients.
    pub fn evaluate_at_one(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| checked_add(acc, c))
    }

    /// Compact canonical form `exp:coef;exp:coef;...` in ascending exponent
    /// order; the zero polynomial is the empty string.
    pub fn to_compact(&self) -> String {
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn from_compact(s: &str) -> Result<LaurentPoly, ParsePolyError> {
        let mut p = LaurentPoly::zero();
        for term in s.split(';') {
            let term = term.trim();
            if term.is_empty() {
                continue;
            }
            let err = || ParsePolyError {
                term: term.to_string(),
            };
            let (exp, coef) = term.split_once(':').ok_or_else(err)?;
            let exp: i64 = exp.trim().parse().map_err(|_| err())?;
            let coef: i64 = coef.trim().parse().map_err(|_| err())?;
            p.add_term(exp, coef);
        }
        Ok(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coef) in rhs.terms() {
            out.add_term(exp, coef);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coef) in rhs.terms() {
            out.add_term(
                exp,
                coef.checked_neg().expect("polynomial coefficient overflow"),
            );
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(
                    e1.checked_add(e2).expect("exponent overflow"),
                    checked_mul(c1, c2),
                );
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! delegate_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

delegate_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Formats one term body (no sign): the power of t with halves in
/// parentheses, e.g. `t^3`, `t^(5/2)`, `t^(-1)`.
fn write_power(f: &mut fmt::Formatter<'_>, x_exp: i64) -> fmt::Result {
    debug_assert!(x_exp != 0);
    if x_exp % 2 == 0 {
        match x_exp / 2 {
            1 => write!(f, "t"),
            p if p > 0 => write!(f, "t^{p}"),
            p => write!(f, "t^({p})"),
        }
    } else {
        write!(f, "t^({x_exp}/2)")
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form in descending powers of t, e.g. `-t^4 + t^3 + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coef)) in self.terms().rev().enumerate() {
            let mag = coef.unsigned_abs();
            if i == 0 {
                if coef < 0 {
                    write!(f, "-")?;
                }
            } else if coef < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_power(f, exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: i64,
    coef: i64,
}

impl Serialize for LaurentPoly {
    /// JSON array of `{"exp": n, "coef": c}` sorted by exponent ascending;
    /// exponents are in units of t^(1/2).
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(exp, coef)| TermRepr { exp, coef })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            if t.coef == 0 {
                return Err(D::Error::custom("zero coefficient in polynomial term"));
            }
            p.add_term(t.exp, t.coef);
        }
        Ok(p)
    }
}
