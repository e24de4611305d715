//! Exact invariant suites: the Pythagorean identity, the degree law, the
//! equivalence between the rational-value sweep and the degree-2 root-of-unity
//! criterion, the witness constructions, numeric cross-checks, and randomized
//! field-axiom checks. The `verify` command runs all of them; the acceptance
//! tests reuse them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::{frac, normalize_angle, Fraction};
use crate::cyclotomic::totient;
use crate::error::{Error, Result};
use crate::field::CycloElement;
use crate::numeric;
use crate::trig::{
    classify, cos_element, cos_rationality_witness, degree, minimal_polynomial, sin_element,
    tan_rationality_witness, trig_element, Classification, Surd, TrigFunc, TrigQuery,
};

/// Pass/fail tally for one suite, with the first counterexample kept for
/// diagnostics.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::all_passed)
    }
}

/// Reduced angles `a/b` with `0 <= a/b < 2` and `b <= b_max`.
fn reduced_angles(b_max: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=b_max).flat_map(|b| (0..2 * b).filter(move |a| a.gcd(&b) == 1).map(move |a| (a, b)))
}

/// sin^2 + cos^2 = 1, exactly, in a common conductor.
pub fn pythagorean_suite(b_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("pythagorean");
    for (a, b) in reduced_angles(b_max) {
        let angle = normalize_angle(a as i64, b as i64).expect("b > 0");
        let sin = sin_element(&angle);
        let cos = cos_element(&angle);
        let m = sin.conductor().lcm(&cos.conductor());
        let sin = sin.change_conductor(m).expect("divides lcm");
        let cos = cos.change_conductor(m).expect("divides lcm");
        let sum = sin
            .mul(&sin)
            .and_then(|s2| cos.mul(&cos).and_then(|c2| s2.add(&c2)))
            .expect("same conductor");
        let ok = sum.is_rational() == Some(frac(1, 1));
        outcome.check(ok, || format!("sin^2 + cos^2 != 1 at {a}*pi/{b}"));
    }
    outcome
}

/// Degree of `cos(2*pi*c/d)` is `phi(d)/2` for `d >= 3` and 1 for `d <= 2`.
pub fn degree_law_suite(d_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("degree-law");
    for d in 1..=d_max.max(6) {
        let expected = if d <= 2 {
            1
        } else {
            totient(d).expect("d > 0") / 2
        };
        for c in 0..d.max(2) {
            if c.gcd(&d) != 1 {
                continue;
            }
            // angle 2*pi*c/d, i.e. t = 2c/d
            let angle = normalize_angle(2 * c as i64, d as i64).expect("d > 0");
            let got = degree(&cos_element(&angle));
            outcome.check(got == expected, || {
                format!("degree(cos(2*pi*{c}/{d})) = {got}, expected {expected}")
            });
        }
    }
    outcome
}

/// The rational-value sweep agrees with the degree-2 criterion: sin/cos are
/// rational exactly at denominators {1, 2, 3, 4, 6} and tan at {1, 4} (poles
/// excluded), and every rational value is confirmed by its witness
/// construction. Rationality is the exact degree-1 coordinate test; the full
/// classifier is cross-checked on the denominators up to 12.
pub fn fact_agreement_suite(b_max: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("fact1-fact2-agreement");
    for func in [TrigFunc::Sin, TrigFunc::Cos, TrigFunc::Tan] {
        for (a, b) in reduced_angles(b_max) {
            let angle = normalize_angle(a as i64, b as i64).expect("b > 0");
            let rational_value = match trig_element(func, &angle) {
                Err(Error::Pole) => continue,
                element => element.expect("constructible").is_rational(),
            };
            // Reduced denominators with rational values, per function. All
            // lie in {1, 2, 3, 4, 6}; which b occurs depends on the function
            // (e.g. sin(pi/3) = sqrt(3)/2 is irrational while sin(pi/6) = 1/2).
            let expected = match func {
                TrigFunc::Sin => matches!(b, 1 | 2 | 6),
                TrigFunc::Cos => matches!(b, 1..=3),
                TrigFunc::Tan => matches!(b, 1 | 4),
            };
            outcome.check(matches!(b, 1 | 2 | 3 | 4 | 6) || rational_value.is_none(), || {
                format!("{func}({a}*pi/{b}) is rational at a forbidden denominator")
            });
            outcome.check(rational_value.is_some() == expected, || {
                format!("{func}({a}*pi/{b}) rationality disagrees with the denominator rule")
            });
            if let Some(value) = &rational_value {
                let witnessed = match func {
                    TrigFunc::Sin | TrigFunc::Cos => cos_rationality_witness(value)
                        .expect("trig values lie in [-1, 1]")
                        .is_some(),
                    TrigFunc::Tan => tan_rationality_witness(value).is_some(),
                };
                outcome.check(witnessed, || {
                    format!("{func}({a}*pi/{b}) = {value} has no rationality witness")
                });
            }
            if b <= 12 {
                let tag_rational = matches!(
                    classify(&TrigQuery::new(func, angle)),
                    Classification::Rational(_)
                );
                outcome.check(tag_rational == rational_value.is_some(), || {
                    format!("classify({func}, {a}*pi/{b}) disagrees with the exact rationality test")
                });
            }
        }
    }
    outcome
}

/// Witness presence over a grid of rational inputs: the cosine witness fires
/// exactly on {0, ±1/2, ±1} and the tangent witness exactly on {0, ±1}.
pub fn witness_scan_suite() -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("witness-scan");
    let special_cos: Vec<Fraction> = [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1)]
        .iter()
        .map(|&(n, d)| frac(n, d))
        .collect();
    for den in 1..=50i64 {
        for num in -den..=den {
            if num.gcd(&den) != 1 {
                continue;
            }
            let s = frac(num, den);
            let witnessed = cos_rationality_witness(&s)
                .expect("|s| <= 1 by construction")
                .is_some();
            let expected = special_cos.contains(&s);
            outcome.check(witnessed == expected, || {
                format!("cos witness at s = {s}: got {witnessed}, expected {expected}")
            });
        }
    }
    for den in 1..=25i64 {
        for num in -25..=25i64 {
            if num.gcd(&den) != 1 {
                continue;
            }
            let r = frac(num, den);
            let witnessed = tan_rationality_witness(&r).is_some();
            let expected = r == frac(0, 1) || r == frac(1, 1) || r == frac(-1, 1);
            outcome.check(witnessed == expected, || {
                format!("tan witness at r = {r}: got {witnessed}, expected {expected}")
            });
        }
    }
    outcome
}

fn closing_identities() -> Vec<(TrigFunc, i64, i64, Surd)> {
    vec![
        (TrigFunc::Cos, 1, 5, Surd::from_i64s(1, 1, 4, 5).expect("valid surd")),
        (TrigFunc::Sin, 1, 10, Surd::from_i64s(-1, 1, 4, 5).expect("valid surd")),
        (TrigFunc::Tan, 1, 8, Surd::from_i64s(-1, 1, 1, 2).expect("valid surd")),
        (TrigFunc::Tan, 1, 12, Surd::from_i64s(2, -1, 1, 3).expect("valid surd")),
    ]
}

/// Numeric shadow of the exact path: the four degree-2 identities evaluate to
/// their radicals within 1e-30, and classified minimal polynomials vanish on
/// their elements numerically. The minimal-polynomial sweep runs sin and cos
/// up to `min(b_max, 24)` and tan up to `min(b_max, 12)` to stay desk-scale.
pub fn numeric_cross_suite(b_max: u64, precision_bits: usize) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("numeric-cross");
    let identity_precision = precision_bits.max(128);
    let tolerance = astro_float::BigFloat::from_f64(1e-30, 64);
    for (func, a, b, surd) in closing_identities() {
        let angle = normalize_angle(a, b).expect("b > 0");
        let classified = classify(&TrigQuery::new(func, angle.clone()));
        outcome.check(classified == Classification::Quadratic(surd.clone()), || {
            format!("{func}({a}*pi/{b}) did not classify to {surd}")
        });
        let element = trig_element(func, &angle).expect("no pole here");
        let via_field = numeric::eval_numeric(&element, identity_precision);
        let via_radical = surd.eval_ball(identity_precision);
        let deviation = via_field.sub(&via_radical, identity_precision).deviation_upper();
        outcome.check(deviation < tolerance, || {
            format!("{func}({a}*pi/{b}) deviates from {surd} by more than 1e-30")
        });
    }
    for func in [TrigFunc::Sin, TrigFunc::Cos, TrigFunc::Tan] {
        let cap = match func {
            TrigFunc::Tan => b_max.min(12),
            _ => b_max.min(24),
        };
        for (a, b) in reduced_angles(cap) {
            let angle = normalize_angle(a as i64, b as i64).expect("b > 0");
            let element = match trig_element(func, &angle) {
                Err(Error::Pole) => continue,
                element => element.expect("constructible"),
            };
            let minpoly = minimal_polynomial(&element);
            outcome.check(
                numeric::verify_root(&minpoly, &element, precision_bits),
                || format!("minpoly of {func}({a}*pi/{b}) does not vanish numerically"),
            );
        }
    }
    outcome
}

fn random_fraction(rng: &mut ChaCha8Rng) -> Fraction {
    frac(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_element(rng: &mut ChaCha8Rng, conductor: u64) -> CycloElement {
    let phi = totient(conductor).expect("positive conductor");
    let mut element = CycloElement::zero(conductor).expect("positive conductor");
    for power in 0..phi {
        let coeff = random_fraction(rng);
        let term = CycloElement::zeta(conductor, power as i64)
            .expect("positive conductor")
            .scale(&coeff);
        element = element.add(&term).expect("same conductor");
    }
    element
}

/// Randomized field-axiom checks on small conductors: associativity,
/// distributivity, multiplicative inverses, and the ring-homomorphism laws
/// for the Galois action. Seeded, so failures reproduce.
pub fn field_axioms_suite(iterations: u64) -> SuiteOutcome {
    let mut outcome = SuiteOutcome::new("field-axioms");
    let mut rng = ChaCha8Rng::seed_from_u64(0x0012_098a_fe71);
    for round in 0..iterations {
        let conductor = rng.gen_range(1..=24u64);
        let x = random_element(&mut rng, conductor);
        let y = random_element(&mut rng, conductor);
        let z = random_element(&mut rng, conductor);

        let assoc_mul = x.mul(&y).and_then(|xy| xy.mul(&z)).expect("same conductor")
            == y.mul(&z).and_then(|yz| x.mul(&yz)).expect("same conductor");
        outcome.check(assoc_mul, || format!("(xy)z != x(yz) at round {round}, n = {conductor}"));

        let distributive = x
            .mul(&y.add(&z).expect("same conductor"))
            .expect("same conductor")
            == x.mul(&y)
                .and_then(|xy| x.mul(&z).and_then(|xz| xy.add(&xz)))
                .expect("same conductor");
        outcome.check(distributive, || {
            format!("x(y+z) != xy+xz at round {round}, n = {conductor}")
        });

        if !x.is_zero() {
            let one = CycloElement::one(conductor).expect("positive conductor");
            let inv_ok = x.inverse().and_then(|inv| x.mul(&inv)).expect("nonzero") == one;
            outcome.check(inv_ok, || format!("x * x^-1 != 1 at round {round}, n = {conductor}"));
        }

        let k = loop {
            let candidate = rng.gen_range(1..=conductor.max(2)) as i64;
            if (candidate as u64).gcd(&conductor) == 1 {
                break candidate;
            }
        };
        let hom_mul = x
            .mul(&y)
            .and_then(|xy| xy.galois_apply(k))
            .expect("automorphism")
            == x.galois_apply(k)
                .and_then(|xk| y.galois_apply(k).and_then(|yk| xk.mul(&yk)))
                .expect("automorphism");
        outcome.check(hom_mul, || {
            format!("sigma_{k}(xy) != sigma_{k}(x)sigma_{k}(y) at round {round}, n = {conductor}")
        });
        let hom_add = x
            .add(&y)
            .and_then(|xy| xy.galois_apply(k))
            .expect("automorphism")
            == x.galois_apply(k)
                .and_then(|xk| y.galois_apply(k).and_then(|yk| xk.add(&yk)))
                .expect("automorphism");
        outcome.check(hom_add, || {
            format!("sigma_{k}(x+y) != sigma_{k}(x)+sigma_{k}(y) at round {round}, n = {conductor}")
        });
    }
    outcome
}

/// Unit-circle identity of the doubled-angle construction on pseudo-random
/// rationals, exact.
pub fn double_angle_suite(cases: u64) -> SuiteOutcome {
    use crate::trig::double_angle_point;
    let mut outcome = SuiteOutcome::new("double-angle-circle");
    let mut rng = ChaCha8Rng::seed_from_u64(0x7712_0042);
    let one = Fraction::from_integer(BigInt::one());
    for _ in 0..cases {
        let r = frac(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000));
        let (x, y) = double_angle_point(&r);
        outcome.check(&x * &x + &y * &y == one, || {
            format!("x^2 + y^2 != 1 for r = {r}")
        });
    }
    outcome
}

/// Runs every suite. `b_max` controls the sweep ranges; `precision_bits`
/// controls the numeric cross-checks (at least 128 bits are used for the
/// fixed identities).
pub fn run_all(b_max: u64, precision_bits: usize) -> Result<VerifyReport> {
    if b_max == 0 {
        return Err(Error::InvalidArgument("max-b must be positive".into()));
    }
    if precision_bits < 32 {
        return Err(Error::InvalidArgument(
            "precision must be at least 32 bits".into(),
        ));
    }
    Ok(VerifyReport {
        suites: vec![
            pythagorean_suite(b_max),
            degree_law_suite(b_max),
            fact_agreement_suite(b_max),
            witness_scan_suite(),
            numeric_cross_suite(b_max, precision_bits),
            field_axioms_suite(250),
            double_angle_suite(100),
        ],
    })
}
