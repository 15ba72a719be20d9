//! Canonical braid-only form of an orientable belt.
//!
//! A belt admits a representative with all ribbon twists zero exactly when
//! it is orientable. The canonical word is assembled as `C⁻¹ · P` where the
//! coset representative `C` moves the twist vector into the pure-braid
//! kernel and `P = (σ₁²)^α (σ₂²)^β (σ₃²)^γ` realizes the resulting pure
//! vector from zero.

use thiserror::Error;

use crate::braid::{BraidWord, Generator};
use crate::twist::{ParityClass, TwistVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error("twist vector {0} mixes integer and half-odd entries; no braid-only form exists")]
    NonOrientable(TwistVector),
    #[error("twist vector {0} is not a pure belt (entries must be all-even or all-odd integers)")]
    NotPure(TwistVector),
}

/// Exponents of the standard form `(σ₁²)^α (σ₂²)^β (σ₃²)^γ` of a pure belt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PureExponents {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

/// A short word moving an orientable twist vector into the pure-braid kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRep {
    word: BraidWord,
}

impl CosetRep {
    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }
}

/// The four candidate representatives for the given parity class.
///
/// All-integer vectors use {1, σ₁⁻¹σ₂⁻¹, σ₂⁻¹σ₃⁻¹, σ₃⁻¹σ₁⁻¹}; all-half-odd
/// vectors use {σ₁⁻¹, σ₂⁻¹, σ₃⁻¹, σ₁⁻¹σ₂⁻¹σ₁⁻¹}. Exactly one candidate maps
/// any orientable vector to a pure belt.
pub fn coset_candidates(parity: ParityClass) -> Option<[BraidWord; 4]> {
    let inv = Generator::sigma_inv;
    match parity {
        ParityClass::AllInteger => Some([
            BraidWord::empty(),
            BraidWord::new(vec![inv(1), inv(2)]),
            BraidWord::new(vec![inv(2), inv(3)]),
            BraidWord::new(vec![inv(3), inv(1)]),
        ]),
        ParityClass::AllHalfOdd => Some([
            BraidWord::new(vec![inv(1)]),
            BraidWord::new(vec![inv(2)]),
            BraidWord::new(vec![inv(3)]),
            BraidWord::new(vec![inv(1), inv(2), inv(1)]),
        ]),
        ParityClass::Mixed => None,
    }
}

/// Picks the unique candidate whose action on `t` lands in the pure-braid
/// kernel. For an already-pure vector this is the empty word.
pub fn coset_rep(t: TwistVector) -> Result<CosetRep, CanonicalError> {
    let candidates = coset_candidates(t.parity_class()).ok_or(CanonicalError::NonOrientable(t))?;
    let word = candidates
        .into_iter()
        .find(|c| c.evaluate(t).is_pure())
        .expect("one coset candidate always succeeds for an orientable vector");
    Ok(CosetRep { word })
}

/// Solves `(σ₁²)^α (σ₂²)^β (σ₃²)^γ [0,0,0] = t` for a pure vector `t`.
pub fn pure_exponents(t: TwistVector) -> Result<PureExponents, CanonicalError> {
    if !t.is_pure() {
        return Err(CanonicalError::NotPure(t));
    }
    let [a, b, c] = t.entries().map(|e| e.as_integer().unwrap());
    Ok(PureExponents {
        alpha: (a + b) / 2,
        beta: (b + c) / 2,
        gamma: (c + a) / 2,
    })
}

fn push_square_power(word: &mut BraidWord, index: u8, exponent: i64) {
    let g = if exponent >= 0 {
        Generator::sigma(index)
    } else {
        Generator::sigma_inv(index)
    };
    for _ in 0..exponent.unsigned_abs() * 2 {
        word.push(g);
    }
}

/// The canonical braid-only word for an orientable twist vector.
///
/// Evaluating the result from zero twists recovers `t` exactly. The word is
/// a deterministic function of `t`; negative exponents of the pure part are
/// emitted as inverse-generator pairs in the same σ₁, σ₂, σ₃ slot order.
pub fn braid_only_word(t: TwistVector) -> Result<BraidWord, CanonicalError> {
    let coset = coset_rep(t)?;
    let exps = pure_exponents(coset.word().evaluate(t))
        .expect("coset representative lands in the pure-braid kernel");
    let mut word = coset.word().inverse();
    push_square_power(&mut word, 1, exps.alpha);
    push_square_power(&mut word, 2, exps.beta);
    push_square_power(&mut word, 3, exps.gamma);
    Ok(word)
}
