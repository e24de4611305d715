//! Exact arithmetic in the cyclotomic field `Q(zeta_n)`.
//!
//! Elements are stored in the power basis `{1, zeta, ..., zeta^(phi(n)-1)}`
//! reduced modulo `Phi_n`. The basis representation is unique, so equality,
//! the zero test, and the rationality test are all exact coefficient checks.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::angle::Fraction;
use crate::cyclotomic::{cyclotomic_arc, divisors, totient};
use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// Per-conductor data shared by all elements: `Phi_n` over the rationals and
/// `phi(n)` for sizing coefficient vectors.
struct FieldContext {
    n: u64,
    phi: usize,
    modulus: RatPoly,
}

static CONTEXTS: LazyLock<Mutex<HashMap<u64, Arc<FieldContext>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn context(n: u64) -> Result<Arc<FieldContext>> {
    if n == 0 {
        return Err(Error::InvalidArgument("conductor must be positive".into()));
    }
    if let Some(ctx) = CONTEXTS.lock().expect("cache poisoned").get(&n) {
        return Ok(Arc::clone(ctx));
    }
    let modulus_int = cyclotomic_arc(n)?;
    let ctx = Arc::new(FieldContext {
        n,
        phi: totient(n)? as usize,
        modulus: RatPoly::from_int_poly(&modulus_int),
    });
    let mut cache = CONTEXTS.lock().expect("cache poisoned");
    Ok(Arc::clone(cache.entry(n).or_insert(ctx)))
}

/// An element of `Q(zeta_n)` where `zeta_n = e^(2*pi*i/n)`.
///
/// `coeffs` has length exactly `phi(n)`; the element is
/// `sum coeffs[j] * zeta_n^j`. Values are immutable; operations return new
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElement {
    conductor: u64,
    coeffs: Vec<Fraction>,
}

fn zero_fraction() -> Fraction {
    Fraction::from_integer(0.into())
}

impl CycloElement {
    fn from_poly(ctx: &FieldContext, poly: RatPoly) -> CycloElement {
        let reduced = poly.rem_by_monic(&ctx.modulus);
        let mut coeffs = reduced.into_coeffs();
        coeffs.resize(ctx.phi, zero_fraction());
        CycloElement {
            conductor: ctx.n,
            coeffs,
        }
    }

    pub fn zero(n: u64) -> Result<CycloElement> {
        let ctx = context(n)?;
        Ok(CycloElement {
            conductor: n,
            coeffs: vec![zero_fraction(); ctx.phi],
        })
    }

    pub fn one(n: u64) -> Result<CycloElement> {
        Self::from_fraction(n, Fraction::from_integer(1.into()))
    }

    /// Embeds a rational number into `Q(zeta_n)`.
    pub fn from_fraction(n: u64, value: Fraction) -> Result<CycloElement> {
        let ctx = context(n)?;
        let mut coeffs = vec![zero_fraction(); ctx.phi];
        coeffs[0] = value;
        Ok(CycloElement {
            conductor: n,
            coeffs,
        })
    }

    /// A rational number as an element of the trivial field `Q(zeta_1) = Q`.
    pub fn rational(value: Fraction) -> CycloElement {
        Self::from_fraction(1, value).expect("conductor 1 is valid")
    }

    /// The root of unity `zeta_n^k`, for any integer exponent `k`.
    pub fn zeta(n: u64, k: i64) -> Result<CycloElement> {
        let ctx = context(n)?;
        let exp = k.rem_euclid(i64::try_from(n).map_err(|_| {
            Error::InvalidArgument(format!("conductor {n} too large"))
        })?) as usize;
        let mut coeffs = vec![zero_fraction(); exp + 1];
        coeffs[exp] = Fraction::from_integer(1.into());
        Ok(Self::from_poly(&ctx, RatPoly::new(coeffs)))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients over the power basis, length `phi(conductor)`.
    pub fn coeffs(&self) -> &[Fraction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact rationality test: the constant coefficient if all higher basis
    /// coordinates vanish, `None` otherwise. Sound because the power basis
    /// gives a unique representation.
    pub fn is_rational(&self) -> Option<Fraction> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same_conductor(&self, other: &CycloElement) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloElement {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_same_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloElement {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycloElement {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product in the field: polynomial product reduced modulo `Phi_n`.
    /// Skips zero coefficients, so products with sparse elements stay cheap.
    pub fn mul(&self, other: &CycloElement) -> Result<CycloElement> {
        self.check_same_conductor(other)?;
        let ctx = context(self.conductor)?;
        if self.is_zero() || other.is_zero() {
            return CycloElement::zero(self.conductor);
        }
        let mut prod = vec![zero_fraction(); 2 * ctx.phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_poly(&ctx, RatPoly::new(prod)))
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, s: &Fraction) -> CycloElement {
        CycloElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_n` over the rationals.
    pub fn inverse(&self) -> Result<CycloElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ctx = context(self.conductor)?;
        let rep = RatPoly::new(self.coeffs.clone());
        let (g, u) = rep.half_ext_gcd(&ctx.modulus);
        // Phi_n is irreducible, so the gcd with a nonzero representative of
        // smaller degree is a nonzero constant (normalized to 1).
        debug_assert_eq!(g.degree(), Some(0));
        debug_assert!(g.coeffs()[0].is_one());
        let inv = Self::from_poly(&ctx, u);
        debug_assert_eq!(self.mul(&inv).unwrap(), CycloElement::one(self.conductor).unwrap());
        Ok(inv)
    }

    /// Re-expresses the element in `Q(zeta_m)` for a multiple `m` of the
    /// conductor, using `zeta_n = zeta_m^(m/n)`.
    pub fn change_conductor(&self, m: u64) -> Result<CycloElement> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidConductor(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let ctx = context(m)?;
        let stretch = (m / self.conductor) as usize;
        let mut coeffs = vec![zero_fraction(); (self.coeffs.len() - 1) * stretch + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[j * stretch] = c.clone();
            }
        }
        Ok(Self::from_poly(&ctx, RatPoly::new(coeffs)))
    }

    /// The Galois automorphism `sigma_k : zeta -> zeta^k`, defined exactly
    /// when `gcd(k, n) = 1`.
    pub fn galois_apply(&self, k: i64) -> Result<CycloElement> {
        let n = self.conductor;
        let n_i64 = i64::try_from(n)
            .map_err(|_| Error::InvalidArgument(format!("conductor {n} too large")))?;
        let kk = k.rem_euclid(n_i64) as u64;
        if kk.gcd(&n) != 1 {
            return Err(Error::NotAnAutomorphism { k, n });
        }
        if kk == 1 {
            return Ok(self.clone());
        }
        let ctx = context(n)?;
        let mut coeffs = vec![zero_fraction(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(j as u64 * kk % n) as usize] = c.clone();
            }
        }
        Ok(Self::from_poly(&ctx, RatPoly::new(coeffs)))
    }

    /// Complex conjugation `sigma_(-1)`.
    pub fn conjugate(&self) -> CycloElement {
        self.galois_apply(-1)
            .expect("-1 is coprime to every conductor")
    }

    /// Whether the element is fixed by complex conjugation, i.e. real.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// `x^m` by repeated squaring; `x^0 = 1`.
    pub fn power(&self, m: u64) -> CycloElement {
        let mut result = CycloElement::one(self.conductor).expect("valid conductor");
        let mut base = self.clone();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = result.mul(&base).expect("same conductor");
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base).expect("same conductor");
            }
        }
        result
    }

    /// The least `m >= 1` with `x^m = 1`, or `None` if `x` is not a root of
    /// unity. The search runs over divisors of `lcm(2, n)`: the roots of
    /// unity inside `Q(zeta_n)` are exactly the group generated by `-1` and
    /// `zeta_n`, which has order `lcm(2, n)`.
    pub fn order_as_root_of_unity(&self) -> Option<u64> {
        let bound = self.conductor.lcm(&2);
        let one = CycloElement::one(self.conductor).expect("valid conductor");
        divisors(bound)
            .expect("positive bound")
            .into_iter()
            .find(|&m| self.power(m) == one)
    }
}

/// Inverse of `1 + zeta_n^m`, by root-of-unity telescoping rather than the
/// general Euclidean route; the tangent construction calls this on every
/// angle, where `Phi_n` can have large degree.
///
/// With `w = zeta_n^m` of order `t`: `(1 + w) * sum_(j<s) (-w)^j = 1 + w^s`
/// for odd `s`, which equals 2 at `s = t` (odd `t`) and at `s = t/2` when
/// `4 | t`. For `t = 2 mod 4` use `1/(1+w) = (1-w)/(1-w^2)` where `w^2` has
/// odd order `u` and `(1 - z) * sum_(k<u) k*z^k = -u` for any primitive
/// `u`-th root `z`.
pub(crate) fn invert_one_plus_root(n: u64, m: u64) -> Result<CycloElement> {
    let ctx = context(n)?;
    let mm = m % n;
    let t = n / n.gcd(&mm);
    if t == 2 {
        // zeta^m = -1, so 1 + zeta^m = 0.
        return Err(Error::DivisionByZero);
    }
    let half = Fraction::new(1.into(), 2.into());
    let alternating_sum = |len: u64| -> CycloElement {
        let mut coeffs = vec![zero_fraction(); n as usize];
        for j in 0..len {
            let pos = (j * mm % n) as usize;
            let term = Fraction::from_integer(if j % 2 == 0 { 1.into() } else { (-1).into() });
            coeffs[pos] += term;
        }
        CycloElement::from_poly(&ctx, RatPoly::new(coeffs))
    };
    if t % 2 == 1 {
        Ok(alternating_sum(t).scale(&half))
    } else if t.is_multiple_of(4) {
        Ok(alternating_sum(t / 2).scale(&half))
    } else {
        // t = 2 mod 4 and t >= 6: z = w^2 has odd order u = t/2 >= 3.
        let u = t / 2;
        let z_step = 2 * mm % n;
        let mut coeffs = vec![zero_fraction(); n as usize];
        for k in 1..u {
            let pos = (k * z_step % n) as usize;
            coeffs[pos] += Fraction::from_integer(BigInt::from(k));
        }
        let inv_one_minus_z = CycloElement::from_poly(&ctx, RatPoly::new(coeffs))
            .scale(&Fraction::new((-1).into(), BigInt::from(u)));
        let one_minus_w = CycloElement::one(n)?.sub(&CycloElement::zeta(n, mm as i64)?)?;
        one_minus_w.mul(&inv_one_minus_z)
    }
}
