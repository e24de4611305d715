//! Exact classification of sin, cos, and tan at rational multiples of pi.
//!
//! Every value `sin(a*pi/b)`, `cos(a*pi/b)`, `tan(a*pi/b)` is an algebraic
//! number living inside a cyclotomic field. This crate builds those values as
//! exact field elements, computes their minimal polynomials from Galois
//! orbits, and classifies each one as rational (with the exact fraction),
//! quadratic irrational (with a canonical surd), or algebraic of higher
//! degree (with its integer minimal polynomial); tangent poles are reported
//! as their own outcome. A rigorous ball-arithmetic oracle shadows the exact
//! path for sign resolution and cross-checks, but never decides equality.
//!
//! The layers, bottom up:
//!
//! * [`angle`] — reduced big-integer rationals and angle normalization.
//! * [`poly`] — integer polynomials, cyclotomic and minimal.
//! * [`cyclotomic`] — totient, inverse totient, divisors, `Phi_n`.
//! * [`field`] — arithmetic in `Q(zeta_n)`: products, inverses, the Galois
//!   action, conductor changes, root-of-unity orders.
//! * [`trig`] — the trig values as field elements, minimal polynomials,
//!   classification, and the unit-circle witness constructions.
//! * [`numeric`] — arbitrary-precision complex enclosures with error radii.
//! * [`verify`] — the exact invariant suites behind `verify`.

pub mod angle;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod numeric;
pub mod poly;
pub mod trig;
pub mod verify;

pub use angle::{frac, normalize_angle, reduce_fraction, Fraction, NormalizedAngle};
pub use error::{Error, Result};
pub use field::CycloElement;
pub use poly::IntPoly;
pub use trig::{classify, Classification, Surd, TrigFunc, TrigQuery};

pub use num_bigint::BigInt;
