//! Exact algebra of braided 3-belts.
//!
//! A braided 3-belt is three ribbons braided together and joined at both
//! ends by disks. Its isotopy class is captured completely by the *pure
//! twist word* `[a,b,c]`, a triple of half-integers. This crate implements
//! the algebra of these objects with no floating point anywhere:
//!
//! - [`braid`]: the six circular braid generators, word evaluation to the
//!   pure twist word, belt composition, and the isotopy test;
//! - [`canonical`]: the braid-only canonical form of an orientable belt
//!   (coset representative plus pure-braid exponents);
//! - [`laurent`]: integer Laurent polynomials in t^(1/2) with exact
//!   division;
//! - [`jones`]: boundary component counts and the Jones polynomial of
//!   knotted boundaries, computed independently by a closed formula and by
//!   skein recursion;
//! - [`knot`]: identification of boundary knots by Jones lookup against a
//!   self-computed table;
//! - [`particle`]: Helon charge readout and quantum-group trefoil labels.

pub mod braid;
pub mod canonical;
pub mod halfint;
pub mod jones;
pub mod knot;
pub mod laurent;
pub mod particle;
pub mod perm;
pub mod twist;

pub use braid::{Belt, BraidWord, Generator};
pub use canonical::{braid_only_word, coset_rep, pure_exponents, CanonicalError, PureExponents};
pub use halfint::HalfInt;
pub use jones::{
    boundary_components, boundary_report, jones_closed, jones_skein_oracle, jones_two_ribbon,
    BoundaryReport, JonesError,
};
pub use knot::{KnotRecord, KnotTable, KnotTableError};
pub use laurent::{LaurentError, LaurentPoly};
pub use particle::{
    check_family_row, family_hint, fermion_families, finkelstein_label, helon_charge, Charge,
    Family, HelonAssignment, HelonKind, QuantumKnotLabel, RotationSign,
};
pub use perm::Permutation;
pub use twist::{ParityClass, TwistVector};
