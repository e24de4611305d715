//! Sine, cosine, and tangent of rational multiples of pi as exact cyclotomic
//! field elements: construction, minimal polynomials via Galois orbits,
//! classification by algebraic degree, and the two rationality-witness
//! constructions on the unit circle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::angle::{normalize_angle, Fraction, NormalizedAngle};
use crate::cyclotomic::cyclotomic_arc;
use crate::error::{Error, Result};
use crate::field::{invert_one_plus_root, CycloElement};
use crate::numeric;
use crate::poly::{IntPoly, RatPoly};

/// The three classified functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigFunc {
    Sin,
    Cos,
    Tan,
}

impl fmt::Display for TrigFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrigFunc::Sin => "sin",
            TrigFunc::Cos => "cos",
            TrigFunc::Tan => "tan",
        })
    }
}

impl FromStr for TrigFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sin" => Ok(TrigFunc::Sin),
            "cos" => Ok(TrigFunc::Cos),
            "tan" => Ok(TrigFunc::Tan),
            other => Err(Error::InvalidArgument(format!(
                "unknown function {other:?}, expected sin, cos, or tan"
            ))),
        }
    }
}

/// A classification request: one function at one angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigQuery {
    pub func: TrigFunc,
    pub angle: NormalizedAngle,
}

impl TrigQuery {
    pub fn new(func: TrigFunc, angle: NormalizedAngle) -> Self {
        TrigQuery { func, angle }
    }
}

/// Canonical quadratic irrational `(p + q*sqrt(d))/r` with `d` squarefree,
/// `d >= 2`, `q != 0`, `r >= 1`, and `gcd(p, q, r) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: BigInt,
}

impl Surd {
    /// Normalizing constructor: fixes the sign of `r`, divides out the
    /// common factor, and validates the invariants.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, d: BigInt) -> Result<Surd> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if q.is_zero() {
            return Err(Error::InvalidArgument(
                "q = 0 would be rational; use a Fraction".into(),
            ));
        }
        if d < BigInt::from(2) {
            return Err(Error::InvalidArgument(format!(
                "radicand {d} must be at least 2"
            )));
        }
        let (square, _) = squarefree_decompose(&d);
        if !square.is_one() {
            return Err(Error::InvalidArgument(format!(
                "radicand {d} is not squarefree"
            )));
        }
        let (mut p, mut q, mut r) = (p, q, r);
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        Ok(Surd {
            p: p / &g,
            q: q / &g,
            r: r / &g,
            d,
        })
    }

    pub fn from_i64s(p: i64, q: i64, r: i64, d: i64) -> Result<Surd> {
        Surd::new(p.into(), q.into(), r.into(), d.into())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    /// Rigorous numeric enclosure of the value, independent of the
    /// cyclotomic machinery: only rational operations and a square root.
    pub fn eval_ball(&self, precision_bits: usize) -> numeric::ComplexBall {
        let sqrt = numeric::sqrt_ball(&self.d, precision_bits);
        let q = numeric::fraction_ball(&Fraction::from_integer(self.q.clone()), precision_bits);
        let p = numeric::fraction_ball(&Fraction::from_integer(self.p.clone()), precision_bits);
        let inv_r = numeric::fraction_ball(
            &Fraction::new(BigInt::one(), self.r.clone()),
            precision_bits,
        );
        sqrt.mul(&q, precision_bits)
            .add(&p, precision_bits)
            .mul(&inv_r, precision_bits)
    }

    pub fn to_f64(&self) -> f64 {
        numeric::approx_f64(&self.eval_ball(64))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_negative() {
            write!(f, "({} - {}*sqrt({}))/{}", self.p, -&self.q, self.d, self.r)
        } else {
            write!(f, "({} + {}*sqrt({}))/{}", self.p, self.q, self.d, self.r)
        }
    }
}

/// Outcome of classifying one trig value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The value is rational, with its exact value.
    Rational(Fraction),
    /// The value is a quadratic irrational, in canonical surd form.
    Quadratic(Surd),
    /// Algebraic of degree >= 3, with its integer minimal polynomial
    /// (primitive, positive leading coefficient).
    Algebraic { degree: u64, minpoly: IntPoly },
    /// Tangent at an odd multiple of pi/2.
    Pole,
}

impl Classification {
    /// Algebraic degree of the value; `None` for a pole.
    pub fn degree(&self) -> Option<u64> {
        match self {
            Classification::Rational(_) => Some(1),
            Classification::Quadratic(_) => Some(2),
            Classification::Algebraic { degree, .. } => Some(*degree),
            Classification::Pole => None,
        }
    }
}

fn conductor_u64(f: &Fraction) -> (u64, u64) {
    let d = f
        .denom()
        .to_u64()
        .expect("angle denominator exceeds the supported conductor range");
    let c = f
        .numer()
        .to_u64()
        .expect("normalized two-pi fraction lies in [0, 1)");
    (c, d)
}

/// `cos(t*pi)` as the element `(zeta_d^c + zeta_d^(-c)) / 2` of `Q(zeta_d)`,
/// where `t*pi = 2*pi*(c/d)` in lowest terms. The element is real: it is
/// fixed by conjugation.
pub fn cos_element(angle: &NormalizedAngle) -> CycloElement {
    let (c, d) = conductor_u64(&angle.as_fraction_of_two_pi());
    let c = c as i64;
    let plus = CycloElement::zeta(d, c).expect("positive conductor");
    let minus = CycloElement::zeta(d, -c).expect("positive conductor");
    plus.add(&minus)
        .expect("same conductor")
        .scale(&Fraction::new(BigInt::one(), BigInt::from(2)))
}

/// `sin(t*pi) = cos((1/2 - t)*pi)`.
pub fn sin_element(angle: &NormalizedAngle) -> CycloElement {
    let half = Fraction::new(BigInt::one(), BigInt::from(2));
    cos_element(&NormalizedAngle::from_fraction(half - angle.t()))
}

/// `tan(t*pi)` as sine divided by cosine in the least common conductor.
///
/// With the cosine written as `zeta^(-k) (1 + zeta^(2k)) / 2`, its inverse is
/// `2 zeta^k / (1 + zeta^(2k))`, so the division reduces to the telescoping
/// inverse of `1 + root of unity`; the result agrees with the general
/// Euclidean inverse.
pub fn tan_element(angle: &NormalizedAngle) -> Result<CycloElement> {
    let (c, d) = conductor_u64(&angle.as_fraction_of_two_pi());
    let half = Fraction::new(BigInt::one(), BigInt::from(2));
    let sin_angle = NormalizedAngle::from_fraction(half - angle.t());
    let (_, d_sin) = conductor_u64(&sin_angle.as_fraction_of_two_pi());
    let m = d.lcm(&d_sin);
    let k = c * (m / d);
    let inv_one_plus = match invert_one_plus_root(m, 2 * k % m) {
        Err(Error::DivisionByZero) => return Err(Error::Pole),
        other => other?,
    };
    let inv_cos = CycloElement::zeta(m, k as i64)?
        .mul(&inv_one_plus)?
        .scale(&Fraction::from_integer(2.into()));
    sin_element(angle).change_conductor(m)?.mul(&inv_cos)
}

/// The element for `func` at `angle`; `Err(Pole)` for tangent at a pole.
pub fn trig_element(func: TrigFunc, angle: &NormalizedAngle) -> Result<CycloElement> {
    match func {
        TrigFunc::Sin => Ok(sin_element(angle)),
        TrigFunc::Cos => Ok(cos_element(angle)),
        TrigFunc::Tan => tan_element(angle),
    }
}

/// The minimal polynomial of `x` over the rationals, as a primitive integer
/// polynomial with positive leading coefficient.
///
/// The Galois orbit `{sigma_k(x) : gcd(k, n) = 1}` is deduplicated by exact
/// coefficient equality, and `prod (X - conjugate)` is expanded. The
/// expansion clears denominators first: `D*x` has integer coordinates, so it
/// is an algebraic integer (`Z[zeta_n]` is the ring of integers of
/// `Q(zeta_n)`) and the whole product stays in integer arithmetic, carried
/// out in the cyclic representation modulo `x^n - 1` where every conjugate
/// is just a coordinate permutation. Each product coefficient is fixed by
/// the full Galois group, so its reduction modulo `Phi_n` must be a rational
/// constant; that is asserted, never assumed.
pub fn minimal_polynomial(x: &CycloElement) -> IntPoly {
    let n = x.conductor();
    let n_us = n as usize;

    let mut seen: Vec<CycloElement> = Vec::new();
    let mut reps: Vec<u64> = Vec::new();
    for k in 1..=n {
        if k.gcd(&n) != 1 {
            continue;
        }
        let image = x.galois_apply(k as i64).expect("coprime exponent");
        if !seen.contains(&image) {
            seen.push(image);
            reps.push(k);
        }
    }
    drop(seen);

    let mut denominator = BigInt::one();
    for c in x.coeffs() {
        denominator = denominator.lcm(c.denom());
    }
    let mut cleared = vec![BigInt::zero(); n_us];
    for (j, c) in x.coeffs().iter().enumerate() {
        if !c.is_zero() {
            cleared[j] = c.numer() * (&denominator / c.denom());
        }
    }

    let conjugates: Vec<Vec<BigInt>> = reps
        .iter()
        .map(|&k| {
            let mut v = vec![BigInt::zero(); n_us];
            for (j, c) in cleared.iter().enumerate() {
                if !c.is_zero() {
                    v[(j as u64 * k % n) as usize] = c.clone();
                }
            }
            v
        })
        .collect();

    let mut constant_one = vec![BigInt::zero(); n_us];
    constant_one[0] = BigInt::one();
    let mut product: Vec<Vec<BigInt>> = vec![constant_one];
    for conj in &conjugates {
        let mut next = vec![vec![BigInt::zero(); n_us]; product.len() + 1];
        for (i, coeff) in product.iter().enumerate() {
            for (pos, c) in coeff.iter().enumerate() {
                if !c.is_zero() {
                    next[i + 1][pos] += c;
                }
            }
            for (a_pos, a) in coeff.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (b_pos, b) in conj.iter().enumerate() {
                    if !b.is_zero() {
                        next[i][(a_pos + b_pos) % n_us] -= a * b;
                    }
                }
            }
        }
        product = next;
    }

    let modulus = cyclotomic_arc(n).expect("positive conductor");
    let rational_coeffs: Vec<BigInt> = product
        .into_iter()
        .map(|v| {
            let reduced = IntPoly::new(v).rem_by_monic(&modulus);
            assert!(
                reduced.degree().is_none_or(|deg| deg == 0),
                "Galois-symmetric coefficient failed to reduce to a rational"
            );
            reduced.coeff(0)
        })
        .collect();

    // Undo the clearing: x = y/D, so the coefficient of X^i picks up D^i.
    let mut scaled = Vec::with_capacity(rational_coeffs.len());
    let mut power_of_d = BigInt::one();
    for c in rational_coeffs {
        scaled.push(c * &power_of_d);
        power_of_d *= &denominator;
    }
    IntPoly::new(scaled).primitive_part()
}

/// Algebraic degree of `x`: the degree of its minimal polynomial, which
/// equals the size of its Galois orbit.
pub fn degree(x: &CycloElement) -> u64 {
    minimal_polynomial(x)
        .degree()
        .expect("minimal polynomial is never zero") as u64
}

/// Which root of a quadratic to take: `Upper` is `(-b + sqrt(disc)) / (2a)`
/// with the leading coefficient normalized positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    Upper,
    Lower,
}

/// Writes `n = square * squarefree_part` by trial division and returns
/// `(sqrt(square), squarefree_part)`. Trial division is fine at desk scale;
/// adversarially huge discriminants would exhaust this loop, not break it.
fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree decomposition needs n > 0");
    let mut remaining = n.clone();
    let mut root_of_square = BigInt::one();
    let mut squarefree = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= remaining {
        let mut exponent = 0u32;
        while (&remaining % &p).is_zero() {
            remaining /= &p;
            exponent += 1;
        }
        if exponent > 0 {
            root_of_square *= p.pow(exponent / 2);
            if exponent % 2 == 1 {
                squarefree *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    squarefree *= remaining;
    (root_of_square, squarefree)
}

/// Extracts the canonical surd `(p + q*sqrt(d))/r` for one root of an
/// irreducible degree-2 integer polynomial. The quadratic formula gives
/// `(-b ± f*sqrt(d)) / (2a)` where `disc = b^2 - 4ac = f^2 * d`.
pub fn surd_from_quadratic(minpoly: &IntPoly, branch: RootBranch) -> Result<Surd> {
    if minpoly.degree() != Some(2) {
        return Err(Error::InvalidArgument(
            "surd extraction needs a degree-2 polynomial".into(),
        ));
    }
    let (mut a, mut b, mut c) = (minpoly.coeff(2), minpoly.coeff(1), minpoly.coeff(0));
    if a.is_negative() {
        a = -a;
        b = -b;
        c = -c;
    }
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    if !disc.is_positive() {
        return Err(Error::NotRealQuadratic);
    }
    let (f, d) = squarefree_decompose(&disc);
    if d.is_one() {
        return Err(Error::InvalidArgument(
            "perfect-square discriminant: the polynomial is reducible".into(),
        ));
    }
    let q = match branch {
        RootBranch::Upper => f,
        RootBranch::Lower => -f,
    };
    Surd::new(-b, q, BigInt::from(2) * a, d)
}

/// Classifies a single element by the degree of its minimal polynomial.
pub fn classify_element(x: &CycloElement) -> Classification {
    // Degree 1 is exactly the rationality of the element, read off the basis
    // coordinates; this skips the orbit work for the common rational case.
    if let Some(value) = x.is_rational() {
        return Classification::Rational(value);
    }
    let minpoly = minimal_polynomial(x);
    let deg = minpoly.degree().expect("nonzero polynomial") as u64;
    debug_assert!(deg >= 2, "irrational element with degree {deg}");
    if deg == 2 {
        // Resolve which quadratic root we hold: compare against the rational
        // midpoint -b/(2a) of the two roots. The difference is nonzero (x is
        // irrational), so its sign is decidable at finite precision.
        let midpoint = Fraction::new(-minpoly.coeff(1), BigInt::from(2) * minpoly.coeff(2));
        let offset = x
            .sub(&CycloElement::from_fraction(x.conductor(), midpoint).expect("valid conductor"))
            .expect("same conductor");
        let sign = numeric::sign_of_real(&offset)
            .expect("trig values are real and differ from the midpoint");
        let branch = if sign > 0 {
            RootBranch::Upper
        } else {
            RootBranch::Lower
        };
        let surd = surd_from_quadratic(&minpoly, branch)
            .expect("irreducible real quadratic with positive discriminant");
        return Classification::Quadratic(surd);
    }
    Classification::Algebraic {
        degree: deg,
        minpoly,
    }
}

/// Classifies `func(angle)`: exact rational, canonical quadratic surd,
/// higher-degree algebraic with its minimal polynomial, or a tangent pole.
pub fn classify(query: &TrigQuery) -> Classification {
    let element = match trig_element(query.func, &query.angle) {
        Err(Error::Pole) => return Classification::Pole,
        other => other.expect("trig element construction"),
    };
    classify_element(&element)
}

/// The point `(v/|v|)^2` on the unit circle for `v = 1 + r*i`:
/// exactly `((1 - r^2)/(1 + r^2), 2r/(1 + r^2))`.
pub fn double_angle_point(r: &Fraction) -> (Fraction, Fraction) {
    let one = Fraction::from_integer(1.into());
    let r_squared = r * r;
    let denom = &one + &r_squared;
    ((&one - &r_squared) / &denom, (r + r) / denom)
}

/// Decides whether `s` is the cosine of a rational multiple of pi, returning
/// the order `d` of the witnessing root of unity `w = s + i*sqrt(1 - s^2)`.
///
/// `w` has `w + conj(w) = 2s` and `w * conj(w) = 1`, so it satisfies
/// `x^2 - 2sx + 1`; `s` is such a cosine exactly when that polynomial is the
/// minimal polynomial of a root of unity of degree <= 2 over the rationals,
/// i.e. equals `Phi_d` for `d` in {3, 4, 6}, or degenerates at `s = ±1`
/// (`w = ±1`, `d` = 1 or 2).
pub fn cos_rationality_witness(s: &Fraction) -> Result<Option<u64>> {
    let one = Fraction::from_integer(1.into());
    if s.abs() > one {
        return Err(Error::OutOfRange(format!("|{s}| > 1 is not a cosine")));
    }
    if s == &one {
        return Ok(Some(1));
    }
    if s == &(-&one) {
        return Ok(Some(2));
    }
    let witness_poly = RatPoly::new(vec![one.clone(), s * Fraction::from_integer((-2).into()), one]);
    for d in [3u64, 4, 6] {
        let phi_d = RatPoly::from_int_poly(&cyclotomic_arc(d).expect("positive conductor"));
        if witness_poly == phi_d {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Decides whether `r` is the tangent of a rational multiple of pi, returning
/// the denominator `b` of a witnessing angle `a*pi/b` in lowest terms.
///
/// Squaring `(1 + r*i)/|1 + r*i|` lands on the rational point
/// [`double_angle_point`]`(r)`; its first coordinate is the cosine of the
/// doubled angle, so the cosine witness applies. Halving the witnessed angle
/// can only produce denominators in {1, 2, 3, 4, 6, 8, 12}; the candidate
/// angles are enumerated and confirmed by exact tangent evaluation.
pub fn tan_rationality_witness(r: &Fraction) -> Option<u64> {
    let (x, _y) = double_angle_point(r);
    cos_rationality_witness(&x).expect("double-angle cosine lies in [-1, 1]")?;
    for b in [1u64, 2, 3, 4, 6, 8, 12] {
        for a in 0..2 * b {
            if a.gcd(&b) != 1 {
                continue;
            }
            let angle = normalize_angle(a as i64, b as i64).expect("nonzero denominator");
            match tan_element(&angle) {
                Err(Error::Pole) => continue,
                Ok(element) => {
                    if element.is_rational().as_ref() == Some(r) {
                        return Some(b);
                    }
                }
                Err(other) => panic!("tangent construction failed: {other}"),
            }
        }
    }
    None
}

/// One row of the rational-values table: `func(a*pi/b) = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NivenEntry {
    pub a: u64,
    pub b: u64,
    pub value: Fraction,
}

/// All reduced `a/b` with `0 <= a/b < 2` and `b <= b_max` where the function
/// value is rational, with the exact values. Rationality of the element is
/// the degree-1 case of the classification, decided by the exact coordinate
/// test; tangent poles are skipped.
pub fn niven_table(func: TrigFunc, b_max: u64) -> Result<Vec<NivenEntry>> {
    if b_max == 0 {
        return Err(Error::InvalidArgument("b_max must be positive".into()));
    }
    let mut entries = Vec::new();
    for b in 1..=b_max {
        for a in 0..2 * b {
            if a.gcd(&b) != 1 {
                continue;
            }
            let angle = normalize_angle(a as i64, b as i64)?;
            let element = match trig_element(func, &angle) {
                Err(Error::Pole) => continue,
                other => other?,
            };
            if let Some(value) = element.is_rational() {
                entries.push(NivenEntry { a, b, value });
            }
        }
    }
    Ok(entries)
}
