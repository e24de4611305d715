//! Reduced big-integer rationals and angles given as rational multiples of pi.
//!
//! An angle `a*pi/b` is normalized to `t*pi` with `t` in `[0, 2)`; the whole
//! classification is 2*pi-periodic, so nothing is lost. All arithmetic is
//! exact big-rational arithmetic.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational number in lowest terms.
///
/// Invariants (maintained by `Ratio` on construction): `gcd(|num|, den) = 1`,
/// `den >= 1`, and zero is represented as `0/1`.
pub type Fraction = Ratio<BigInt>;

/// Builds a `Fraction` from machine integers. Panics if `den == 0`; use
/// [`reduce_fraction`] for checked construction.
pub fn frac(num: i64, den: i64) -> Fraction {
    Ratio::new(num.into(), den.into())
}

/// Reduces `num/den` to lowest terms with a positive denominator, the sign
/// carried by the numerator.
pub fn reduce_fraction(num: BigInt, den: BigInt) -> Result<Fraction> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Ratio::new(num, den))
}

/// An angle `t*pi` with `t` reduced modulo 2 into `[0, 2)`, together with the
/// multiple of pi it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedAngle {
    t: Fraction,
    original: Fraction,
}

/// Normalizes the angle `a*pi/b`. Fails only on `b = 0`.
pub fn normalize_angle(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<NormalizedAngle> {
    let original = reduce_fraction(a.into(), b.into())?;
    Ok(NormalizedAngle::from_fraction(original))
}

impl NormalizedAngle {
    /// Normalizes `original*pi` by subtracting whole turns.
    pub fn from_fraction(original: Fraction) -> Self {
        let two = Fraction::from_integer(2.into());
        let turns = (&original / &two).floor();
        let t = &original - turns * two;
        debug_assert!(!t.numer().is_zero() || t.denom() == &BigInt::from(1));
        NormalizedAngle { t, original }
    }

    /// The normalized multiple of pi, in `[0, 2)`.
    pub fn t(&self) -> &Fraction {
        &self.t
    }

    /// The multiple of pi as given before normalization.
    pub fn original(&self) -> &Fraction {
        &self.original
    }

    /// Rewrites `t*pi` as `2*pi*(c/d)` and returns `c/d` in lowest terms,
    /// so `0 <= c/d < 1`.
    pub fn as_fraction_of_two_pi(&self) -> Fraction {
        &self.t / Fraction::from_integer(2.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(reduce_fraction(2.into(), 4.into()).unwrap(), frac(1, 2));
        assert_eq!(reduce_fraction(0.into(), 7.into()).unwrap(), frac(0, 1));
        assert_eq!(reduce_fraction(3.into(), (-6).into()).unwrap(), frac(-1, 2));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            reduce_fraction(1.into(), 0.into()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(normalize_angle(1, 0).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn normalization_wraps_into_period() {
        assert_eq!(normalize_angle(7, 3).unwrap().t(), &frac(1, 3));
        assert_eq!(normalize_angle(-1, 4).unwrap().t(), &frac(7, 4));
        assert_eq!(normalize_angle(4, 2).unwrap().t(), &frac(0, 1));
    }

    #[test]
    fn keeps_the_original_multiple() {
        let angle = normalize_angle(-1, 4).unwrap();
        assert_eq!(angle.original(), &frac(-1, 4));
    }

    #[test]
    fn fraction_of_two_pi() {
        let angle = normalize_angle(1, 3).unwrap();
        assert_eq!(angle.as_fraction_of_two_pi(), frac(1, 6));
        let angle = normalize_angle(1, 2).unwrap();
        assert_eq!(angle.as_fraction_of_two_pi(), frac(1, 4));
        let angle = normalize_angle(0, 1).unwrap();
        assert_eq!(angle.as_fraction_of_two_pi(), frac(0, 1));
    }
}
