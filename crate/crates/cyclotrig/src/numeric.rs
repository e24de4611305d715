//! Rigorous arbitrary-precision complex evaluation of cyclotomic elements.
//!
//! Values are tracked as balls: a big-float midpoint per component plus one
//! radius bounding the true value's distance from the midpoint in each
//! component. The underlying big-float layer produces correctly rounded
//! results for the requested rounding mode, so every operation inflates the
//! radius by (an upper bound on) one unit in the last place of each midpoint
//! it touches. Numerics are used only to resolve strict signs and to
//! cross-check the exact path; equality decisions stay exact.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::angle::Fraction;
use crate::error::{Error, Result};
use crate::field::CycloElement;
use crate::poly::IntPoly;

/// Precision used for radius bookkeeping; radii only need a couple of
/// significant bits, rounded up.
const RAD_PREC: usize = 64;
const RM_MID: RoundingMode = RoundingMode::ToEven;
const RM_UP: RoundingMode = RoundingMode::Up;

/// Hard ceiling for the precision-escalation loop in [`sign_of_real`].
pub const PRECISION_CEILING_BITS: usize = 4096;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

fn bf_zero() -> BigFloat {
    BigFloat::from_i8(0, RAD_PREC)
}

fn pow2(e: i64) -> BigFloat {
    let mut x = BigFloat::from_i8(1, RAD_PREC);
    x.set_exponent((e + 1).try_into().expect("exponent in range"));
    x
}

/// Upper bound on one unit in the last place of `x` at precision `p`.
fn ulp(x: &BigFloat, p: usize) -> BigFloat {
    if x.is_zero() {
        return bf_zero();
    }
    let e = x.exponent().expect("finite value") as i64;
    pow2(e - p as i64)
}

/// Strict "greater than" that treats incomparable values as not greater.
fn exceeds(a: &BigFloat, b: &BigFloat) -> bool {
    a.partial_cmp(b) == Some(std::cmp::Ordering::Greater)
}

fn rad_add(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.add(b, RAD_PREC, RM_UP)
}

fn rad_mul(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.mul(b, RAD_PREC, RM_UP)
}

/// Exact conversion of a big integer into a big float (no rounding).
fn bigint_to_bigfloat(x: &BigInt) -> BigFloat {
    if x.is_zero() {
        return bf_zero();
    }
    let mag = x.magnitude();
    let bits = mag.bits();
    let shift = (64 - bits % 64) % 64;
    let words = (mag << shift).to_u64_digits();
    let sign = if x.sign() == num_bigint::Sign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    BigFloat::from_words(&words, sign, bits.try_into().expect("exponent in range"))
}

/// A complex value with a rigorous error bound: the true value lies within
/// `radius` of `(re_mid, im_mid)` in each component.
#[derive(Debug, Clone)]
pub struct ComplexBall {
    re_mid: BigFloat,
    im_mid: BigFloat,
    radius: BigFloat,
}

impl ComplexBall {
    pub fn re_mid(&self) -> &BigFloat {
        &self.re_mid
    }

    pub fn im_mid(&self) -> &BigFloat {
        &self.im_mid
    }

    pub fn radius(&self) -> &BigFloat {
        &self.radius
    }

    fn from_fraction(q: &Fraction, p: usize) -> ComplexBall {
        if q.is_zero() {
            return ComplexBall {
                re_mid: bf_zero(),
                im_mid: bf_zero(),
                radius: bf_zero(),
            };
        }
        let num = bigint_to_bigfloat(q.numer());
        let den = bigint_to_bigfloat(q.denom());
        let mid = num.div(&den, p, RM_MID);
        let radius = ulp(&mid, p);
        ComplexBall {
            re_mid: mid,
            im_mid: bf_zero(),
            radius,
        }
    }

    pub fn add(&self, other: &ComplexBall, p: usize) -> ComplexBall {
        let re = self.re_mid.add(&other.re_mid, p, RM_MID);
        let im = self.im_mid.add(&other.im_mid, p, RM_MID);
        let mut radius = rad_add(&self.radius, &other.radius);
        radius = rad_add(&radius, &ulp(&re, p));
        radius = rad_add(&radius, &ulp(&im, p));
        ComplexBall {
            re_mid: re,
            im_mid: im,
            radius,
        }
    }

    pub fn mul(&self, other: &ComplexBall, p: usize) -> ComplexBall {
        let t1 = self.re_mid.mul(&other.re_mid, p, RM_MID);
        let t2 = self.im_mid.mul(&other.im_mid, p, RM_MID);
        let t3 = self.re_mid.mul(&other.im_mid, p, RM_MID);
        let t4 = self.im_mid.mul(&other.re_mid, p, RM_MID);
        let re = t1.sub(&t2, p, RM_MID);
        let im = t3.add(&t4, p, RM_MID);
        // |a*eb| and |ea*b| are bounded componentwise by (|re|+|im|) * radius.
        let mag_self = rad_add(&self.re_mid.abs(), &self.im_mid.abs());
        let mag_other = rad_add(&other.re_mid.abs(), &other.im_mid.abs());
        let mut radius = rad_mul(&mag_self, &other.radius);
        radius = rad_add(&radius, &rad_mul(&mag_other, &self.radius));
        let cross = rad_mul(&self.radius, &other.radius);
        radius = rad_add(&radius, &rad_add(&cross, &cross));
        for t in [&t1, &t2, &t3, &t4, &re, &im] {
            radius = rad_add(&radius, &ulp(t, p));
        }
        ComplexBall {
            re_mid: re,
            im_mid: im,
            radius,
        }
    }

    /// Whether the ball is consistent with the exact value zero.
    pub fn contains_zero(&self) -> bool {
        !exceeds(&self.re_mid.abs(), &self.radius) && !exceeds(&self.im_mid.abs(), &self.radius)
    }

    /// Upper bound on the distance of any value in the ball from zero,
    /// measured componentwise (the larger component).
    pub fn deviation_upper(&self) -> BigFloat {
        let re = self.re_mid.abs();
        let im = self.im_mid.abs();
        let worst = if exceeds(&re, &im) { re } else { im };
        rad_add(&worst, &self.radius)
    }

    /// Ball difference, used to compare two enclosures.
    pub fn sub(&self, other: &ComplexBall, p: usize) -> ComplexBall {
        let negated = ComplexBall {
            re_mid: other.re_mid.neg(),
            im_mid: other.im_mid.neg(),
            radius: other.radius.clone(),
        };
        self.add(&negated, p)
    }
}

/// Ball enclosure of `zeta_n = e^(2*pi*i/n)`.
///
/// The midpoints come from the big-float pi, cosine, and sine, each correctly
/// rounded; the argument's radius transfers through sin/cos with Lipschitz
/// constant 1.
fn zeta_ball(n: u64, p: usize) -> ComplexBall {
    let pi = with_consts(|cc| cc.pi(p, RM_MID));
    let mut arg_rad = ulp(&pi, p);
    arg_rad = rad_add(&arg_rad, &arg_rad);
    let two_pi = pi.mul(&BigFloat::from_i8(2, p), p, RM_MID);
    arg_rad = rad_add(&arg_rad, &ulp(&two_pi, p));
    let n_f = BigFloat::from_u64(n, p);
    let theta = two_pi.div(&n_f, p, RM_MID);
    arg_rad = rad_add(&arg_rad.div(&n_f, RAD_PREC, RM_UP), &ulp(&theta, p));
    let (cos, sin) = with_consts(|cc| {
        (
            theta.cos(p, RM_MID, cc),
            theta.sin(p, RM_MID, cc),
        )
    });
    let mut radius = rad_add(&arg_rad, &ulp(&cos, p));
    radius = rad_add(&radius, &ulp(&sin, p));
    ComplexBall {
        re_mid: cos,
        im_mid: sin,
        radius,
    }
}

/// Evaluates an element at `zeta_n = e^(2*pi*i/n)` by Horner's rule over
/// balls, yielding a rigorous enclosure of its complex value.
pub fn eval_numeric(x: &CycloElement, precision_bits: usize) -> ComplexBall {
    assert!(precision_bits >= 32, "precision must be at least 32 bits");
    let zeta = zeta_ball(x.conductor(), precision_bits);
    let mut acc = ComplexBall {
        re_mid: bf_zero(),
        im_mid: bf_zero(),
        radius: bf_zero(),
    };
    for c in x.coeffs().iter().rev() {
        acc = acc.mul(&zeta, precision_bits);
        if !c.is_zero() {
            acc = acc.add(&ComplexBall::from_fraction(c, precision_bits), precision_bits);
        }
    }
    acc
}

/// Sign of a real element: `0` iff the element is exactly zero (decided by
/// the exact coefficient test), otherwise by evaluating at doubling precision
/// until the ball excludes zero. A nonzero real algebraic number separates
/// from zero at finite precision, so this terminates; the ceiling exists only
/// to convert hypothetical bugs into a diagnostic.
pub fn sign_of_real(x: &CycloElement) -> Result<i8> {
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    if x.is_zero() {
        return Ok(0);
    }
    let mut p = 64usize;
    while p <= PRECISION_CEILING_BITS {
        let ball = eval_numeric(x, p);
        if exceeds(&ball.re_mid.abs(), &ball.radius) {
            return Ok(match ball.re_mid.sign() {
                Some(Sign::Neg) => -1,
                _ => 1,
            });
        }
        p *= 2;
    }
    Err(Error::PrecisionExhausted(PRECISION_CEILING_BITS))
}

/// Numeric cross-check that `x` is a root of `poly`: evaluates the polynomial
/// over the enclosure of `x` and reports whether the result is consistent
/// with zero.
pub fn verify_root(poly: &IntPoly, x: &CycloElement, precision_bits: usize) -> bool {
    let z = eval_numeric(x, precision_bits);
    let mut acc = ComplexBall {
        re_mid: bf_zero(),
        im_mid: bf_zero(),
        radius: bf_zero(),
    };
    for c in poly.coeffs().iter().rev() {
        acc = acc.mul(&z, precision_bits);
        if !c.is_zero() {
            let c_ball = ComplexBall::from_fraction(&Fraction::from_integer(c.clone()), precision_bits);
            acc = acc.add(&c_ball, precision_bits);
        }
    }
    acc.contains_zero()
}

/// Ball enclosure of `sqrt(positive integer)`, for independent evaluation of
/// quadratic surds.
pub fn sqrt_ball(n: &BigInt, precision_bits: usize) -> ComplexBall {
    let mid = bigint_to_bigfloat(n).sqrt(precision_bits, RM_MID);
    let radius = ulp(&mid, precision_bits);
    ComplexBall {
        re_mid: mid,
        im_mid: bf_zero(),
        radius,
    }
}

/// Ball enclosure of an exact rational.
pub fn fraction_ball(q: &Fraction, precision_bits: usize) -> ComplexBall {
    ComplexBall::from_fraction(q, precision_bits)
}

/// Midpoint approximation as an `f64`, for display purposes only.
pub fn approx_f64(ball: &ComplexBall) -> f64 {
    format!("{}", ball.re_mid).parse().unwrap_or(f64::NAN)
}
