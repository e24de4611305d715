//! Dense polynomials: integer-coefficient polynomials for cyclotomic and
//! minimal polynomials, and a rational-coefficient variant used internally
//! for arithmetic modulo a cyclotomic polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::angle::Fraction;

/// Integer-coefficient polynomial, stored dense in ascending power order.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial is the
/// empty vector and `degree = len - 1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The polynomial `x^n - 1`.
    pub fn x_pow_minus_one(n: u64) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in ascending power order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Exact division: returns `self / divisor` when the division leaves no
    /// remainder and every quotient coefficient is an integer, else `None`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                if !c.is_zero() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Remainder of `self` modulo a monic divisor; stays integral.
    pub fn rem_by_monic(&self, divisor: &IntPoly) -> IntPoly {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() - dd;
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                if !c.is_zero() {
                    rem[shift + j] -= &top * c;
                }
            }
        }
        IntPoly::new(rem)
    }

    /// Greatest common divisor of the coefficients (positive; 0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading().expect("nonzero").is_negative() {
            content = -content;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Exact evaluation at a rational point by Horner's rule.
    pub fn eval_fraction(&self, x: &Fraction) -> Fraction {
        let mut acc = Fraction::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Fraction::from_integer(c.clone());
        }
        acc
    }
}

/// Rational-coefficient polynomial, ascending powers, no trailing zeros.
/// Internal workhorse for reduction modulo cyclotomic polynomials and for
/// inverses via the extended Euclidean algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RatPoly {
    coeffs: Vec<Fraction>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Fraction>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Fraction::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Fraction] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fraction> {
        self.coeffs
    }

    fn leading(&self) -> Option<&Fraction> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out =
            vec![Fraction::from_integer(0.into()); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Fraction::from_integer(0.into());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            out.push(a - b);
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, s: &Fraction) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Quotient and remainder of `self` by a nonzero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(), RatPoly::new(rem));
        }
        let terms: Vec<(usize, &Fraction)> = divisor
            .coeffs
            .iter()
            .enumerate()
            .take(dd)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut quot = vec![Fraction::from_integer(0.into()); rem.len() - dd];
        while rem.len() > dd {
            let top = rem.pop().expect("nonempty");
            let shift = rem.len() - dd;
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            for &(j, c) in &terms {
                let delta = &q * c;
                rem[shift + j] -= delta;
            }
            quot[shift] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Remainder modulo a monic divisor.
    pub fn rem_by_monic(&self, divisor: &RatPoly) -> RatPoly {
        debug_assert!(divisor.leading().is_some_and(One::is_one));
        self.div_rem(divisor).1
    }

    /// Extended Euclid restricted to the first cofactor: returns `(g, u)`
    /// with `u * self ≡ g (mod modulus)` and `g = gcd(self, modulus)`,
    /// normalized monic. Remainders are rescaled to monic at every step to
    /// keep coefficient growth in check.
    pub fn half_ext_gcd(&self, modulus: &RatPoly) -> (RatPoly, RatPoly) {
        let one = RatPoly::new(vec![Fraction::from_integer(1.into())]);
        let mut r0 = self.clone();
        let mut r1 = modulus.clone();
        let mut u0 = one;
        let mut u1 = RatPoly::zero();
        while !r1.is_zero() {
            let (q, r2) = r0.div_rem(&r1);
            let u2 = u0.sub(&q.mul(&u1));
            r0 = r1;
            u0 = u1;
            r1 = r2;
            u1 = u2;
            if let Some(lead) = r1.leading() {
                if !lead.is_one() {
                    let inv = lead.recip();
                    r1 = r1.scale(&inv);
                    u1 = u1.scale(&inv);
                }
            }
        }
        (r0, u0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::frac;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn exact_division_round_trips_products() {
        let a = IntPoly::from_i64s(&[-1, 0, 2, 1]);
        let b = IntPoly::from_i64s(&[3, -1, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b));
    }

    #[test]
    fn exact_division_rejects_non_divisors() {
        let p = IntPoly::from_i64s(&[1, 1]);
        let q = IntPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(q.exact_div(&p), None);
        // 2x+2 over 2 works, but x+1 over 2x+2 needs rational coefficients
        assert_eq!(
            IntPoly::from_i64s(&[1, 1]).exact_div(&IntPoly::from_i64s(&[2, 2])),
            None
        );
    }

    #[test]
    fn monic_remainder() {
        // x^4 mod x^2 + 1 = 1
        let m = IntPoly::from_i64s(&[1, 0, 1]);
        let p = IntPoly::from_i64s(&[0, 0, 0, 0, 1]);
        assert_eq!(p.rem_by_monic(&m), IntPoly::from_i64s(&[1]));
    }

    #[test]
    fn primitive_part_normalizes_sign_and_content() {
        let p = IntPoly::from_i64s(&[-6, 0, -9]);
        assert_eq!(p.primitive_part(), IntPoly::from_i64s(&[2, 0, 3]));
    }

    #[test]
    fn rational_division_and_gcd() {
        // gcd(x^2 - 1, x^2 + 2x + 1) = x + 1
        let a = RatPoly::new(vec![frac(-1, 1), frac(0, 1), frac(1, 1)]);
        let b = RatPoly::new(vec![frac(1, 1), frac(2, 1), frac(1, 1)]);
        let (g, _) = a.half_ext_gcd(&b);
        assert_eq!(g, RatPoly::new(vec![frac(1, 1), frac(1, 1)]));
    }

    #[test]
    fn half_ext_gcd_gives_inverse_mod_modulus() {
        // u * (x) ≡ 1 (mod x^2 + 1)  =>  u = -x
        let a = RatPoly::new(vec![frac(0, 1), frac(1, 1)]);
        let m = RatPoly::new(vec![frac(1, 1), frac(0, 1), frac(1, 1)]);
        let (g, u) = a.half_ext_gcd(&m);
        assert_eq!(g.degree(), Some(0));
        let prod = u.mul(&a).rem_by_monic(&m);
        assert_eq!(prod, g);
    }
}
