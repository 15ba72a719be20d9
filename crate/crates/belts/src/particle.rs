//! Particle mappings: Helon electric charge from ribbon twists, and the
//! quantum-group labels attached to classical trefoil knots.

use std::fmt;

use thiserror::Error;

use crate::halfint::HalfInt;
use crate::twist::TwistVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("Helon charge requires whole 2π twist counts, got {0}")]
pub struct NonIntegerTwists(pub TwistVector);

/// An exact rational charge in units of the elementary charge e.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Charge {
    num: i64,
    den: i64,
}

impl Charge {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Charge {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Classification of an integer twist vector in the Helon scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HelonKind {
    /// All twists equal and nonzero.
    Lepton,
    /// No twist at all.
    Neutral,
    Quark,
}

impl fmt::Display for HelonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HelonKind::Lepton => write!(f, "lepton"),
            HelonKind::Neutral => write!(f, "neutral"),
            HelonKind::Quark => write!(f, "quark"),
        }
    }
}

/// Electric charge readout of an integer twist vector: each full 2π twist
/// contributes ±e/3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelonAssignment {
    pub twists: TwistVector,
    /// Total charge in units of e/3.
    pub charge_thirds: i64,
    pub kind: HelonKind,
    /// True when the twists do not mix clockwise and counterclockwise.
    pub no_charge_mixing: bool,
}

impl HelonAssignment {
    pub fn charge(&self) -> Charge {
        Charge::new(self.charge_thirds, 3)
    }
}

/// Reads charge and classification off an all-integer twist vector.
pub fn helon_charge(t: TwistVector) -> Result<HelonAssignment, NonIntegerTwists> {
    let mut ints = [0i64; 3];
    for (slot, entry) in ints.iter_mut().zip(t.entries()) {
        *slot = entry.as_integer().ok_or(NonIntegerTwists(t))?;
    }
    let [a, b, c] = ints;
    let kind = if a == 0 && b == 0 && c == 0 {
        HelonKind::Neutral
    } else if a == b && b == c {
        HelonKind::Lepton
    } else {
        HelonKind::Quark
    };
    let mixing = [a, b, c].iter().any(|&n| n > 0) && [a, b, c].iter().any(|&n| n < 0);
    Ok(HelonAssignment {
        twists: t,
        charge_thirds: a + b + c,
        kind,
        no_charge_mixing: !mixing,
    })
}

/// Sign choice in the rotation half of the label, m′ = (±r+1)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RotationSign {
    #[default]
    Plus,
    Minus,
}

/// Quantum-group representation label D^j_{m m′} of an oriented classical
/// knot with crossing number N, writhe w and rotation r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumKnotLabel {
    pub crossings: i64,
    pub writhe: i64,
    pub rotation: i64,
    pub j: HalfInt,
    pub m: HalfInt,
    pub m_prime: HalfInt,
}

impl QuantumKnotLabel {
    /// Q = −(m + m′)/3.
    pub fn charge(&self) -> Charge {
        Charge::new(-(self.m.doubled() + self.m_prime.doubled()), 6)
    }
}

/// (j, m, m′) = (N, w, ±r + 1)/2.
pub fn finkelstein_label(
    crossings: i64,
    writhe: i64,
    rotation: i64,
    sign: RotationSign,
) -> QuantumKnotLabel {
    let signed_r = match sign {
        RotationSign::Plus => rotation,
        RotationSign::Minus => -rotation,
    };
    QuantumKnotLabel {
        crossings,
        writhe,
        rotation,
        j: HalfInt::from_doubled(crossings),
        m: HalfInt::from_doubled(writhe),
        m_prime: HalfInt::from_doubled(signed_r + 1),
    }
}

/// The four fermion families carried by oriented trefoil knots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Neutrino,
    ChargedLepton,
    DownQuark,
    UpQuark,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Neutrino => write!(f, "neutrino"),
            Family::ChargedLepton => write!(f, "charged-lepton"),
            Family::DownQuark => write!(f, "down-quark"),
            Family::UpQuark => write!(f, "up-quark"),
        }
    }
}

/// One row of the four-family trefoil table as published: the (w, r) data
/// with the quoted label and charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyRow {
    pub writhe: i64,
    pub rotation: i64,
    pub quoted_m: HalfInt,
    pub quoted_m_prime: HalfInt,
    pub quoted_charge: Charge,
    pub family: Family,
}

/// The trefoil family table (crossing number 3 throughout).
pub fn fermion_families() -> [FamilyRow; 4] {
    let h = HalfInt::from_doubled;
    [
        FamilyRow {
            writhe: -3,
            rotation: 2,
            quoted_m: h(-3),
            quoted_m_prime: h(3),
            quoted_charge: Charge::new(0, 1),
            family: Family::Neutrino,
        },
        FamilyRow {
            writhe: 3,
            rotation: 2,
            quoted_m: h(3),
            quoted_m_prime: h(3),
            quoted_charge: Charge::new(-1, 1),
            family: Family::ChargedLepton,
        },
        FamilyRow {
            writhe: 3,
            rotation: -2,
            quoted_m: h(3),
            quoted_m_prime: h(-1),
            quoted_charge: Charge::new(-1, 3),
            family: Family::DownQuark,
        },
        FamilyRow {
            writhe: -3,
            rotation: -2,
            quoted_m: h(-3),
            quoted_m_prime: h(1),
            quoted_charge: Charge::new(2, 3),
            family: Family::UpQuark,
        },
    ]
}

/// Family whose table row matches the given writhe and rotation, if any.
pub fn family_hint(writhe: i64, rotation: i64) -> Option<Family> {
    fermion_families()
        .into_iter()
        .find(|row| row.writhe == writhe && row.rotation == rotation)
        .map(|row| row.family)
}

/// A published family row checked against the computed label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyCheck {
    pub row: FamilyRow,
    pub label: QuantumKnotLabel,
    pub m_consistent: bool,
    /// False for the up-quark row, whose quoted m′ matches neither sign
    /// choice of (±r+1)/2; the computed m′ is kept and the row flagged.
    pub m_prime_consistent: bool,
    /// Computed charge −(m+m′)/3 against the quoted one.
    pub charge_consistent: bool,
}

/// Recomputes a family row's label with the fixed `+` sign choice and
/// reports where the quoted data disagrees.
pub fn check_family_row(row: FamilyRow) -> FamilyCheck {
    let label = finkelstein_label(3, row.writhe, row.rotation, RotationSign::Plus);
    FamilyCheck {
        row,
        label,
        m_consistent: label.m == row.quoted_m,
        m_prime_consistent: label.m_prime == row.quoted_m_prime,
        charge_consistent: label.charge() == row.quoted_charge,
    }
}
