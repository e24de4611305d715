//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Expected values are pinned from independent oracles:
//! a Moebius-product construction of the cyclotomic polynomials and an
//! f64 root-product expansion, both implemented here without touching the
//! library's polynomial machinery, plus radical evaluations through plain
//! square roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclotrig::angle::{frac, normalize_angle};
use cyclotrig::cyclotomic::{cyclotomic_poly, inverse_totient, totient};
use cyclotrig::field::CycloElement;
use cyclotrig::numeric;
use cyclotrig::trig::{
    classify, cos_element, cos_rationality_witness, degree, double_angle_point,
    minimal_polynomial, niven_table, tan_rationality_witness, Classification, NivenEntry, Surd,
    TrigFunc, TrigQuery,
};
use cyclotrig::verify::{field_axioms_suite, pythagorean_suite};
use cyclotrig::{Fraction, IntPoly};

/// Runs one criterion body and prints its pass/fail line.
fn criterion(name: &str, body: impl FnOnce()) {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(()) => println!("acceptance {name}: PASS"),
        Err(payload) => {
            println!("acceptance {name}: FAIL");
            std::panic::resume_unwind(payload);
        }
    }
}

// ---------------------------------------------------------------------------
// Oracle 1: cyclotomic polynomials from the Moebius product
// Phi_n(x) = prod_(d | n) (x^(n/d) - 1)^(mu(d)), computed with test-local
// exact integer polynomial arithmetic.
// ---------------------------------------------------------------------------

fn oracle_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Divides exactly by `x^m - 1`, panicking on any nonzero remainder.
fn oracle_div_x_m_minus_one(poly: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = poly.to_vec();
    let deg = rem.len() - 1;
    assert!(deg >= m);
    let mut quot = vec![BigInt::zero(); deg - m + 1];
    for k in (0..=deg - m).rev() {
        let q = std::mem::take(&mut rem[k + m]);
        rem[k] += &q;
        quot[k] = q;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact oracle division");
    quot
}

fn moebius(n: u64) -> i64 {
    let mut mu = 1i64;
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

fn oracle_cyclotomic(n: u64) -> Vec<BigInt> {
    let mut numerator = vec![BigInt::one()];
    let mut denominators: Vec<usize> = Vec::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let power = (n / d) as usize;
        match moebius(d) {
            1 => {
                let mut factor = vec![BigInt::zero(); power + 1];
                factor[0] = -BigInt::one();
                factor[power] = BigInt::one();
                numerator = oracle_poly_mul(&numerator, &factor);
            }
            -1 => denominators.push(power),
            _ => {}
        }
    }
    for m in denominators {
        numerator = oracle_div_x_m_minus_one(&numerator, m);
    }
    numerator
}

// ---------------------------------------------------------------------------
// Oracle 2: f64 expansion of prod (x - root) for explicit complex roots.
// Safe here because every coefficient along the way is bounded well below
// 2^52 for the sizes used.
// ---------------------------------------------------------------------------

fn oracle_expand_roots(roots: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut coeffs = vec![(1.0f64, 0.0f64)];
    for &(re, im) in roots {
        let mut next = vec![(0.0, 0.0); coeffs.len() + 1];
        for (i, &(cre, cim)) in coeffs.iter().enumerate() {
            next[i + 1].0 += cre;
            next[i + 1].1 += cim;
            next[i].0 -= cre * re - cim * im;
            next[i].1 -= cre * im + cim * re;
        }
        coeffs = next;
    }
    coeffs
}

fn oracle_cyclotomic_f64(n: u64) -> Vec<i64> {
    let roots: Vec<(f64, f64)> = (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (theta.cos(), theta.sin())
        })
        .collect();
    oracle_expand_roots(&roots)
        .into_iter()
        .map(|(re, im)| {
            assert!(im.abs() < 0.25, "oracle lost the real axis");
            let rounded = re.round();
            assert!((re - rounded).abs() < 0.25, "oracle rounding unsafe");
            rounded as i64
        })
        .collect()
}

/// Minimal polynomial of cos(2*pi*c/d) from its real conjugates, scaled by
/// the expected leading coefficient and rounded.
fn oracle_cos_minpoly(d: u64, lead: i64) -> IntPoly {
    let mut cosines: Vec<f64> = Vec::new();
    for k in 1..=d {
        if k.gcd(&d) != 1 {
            continue;
        }
        let value = (2.0 * std::f64::consts::PI * k as f64 / d as f64).cos();
        if cosines.iter().all(|c| (c - value).abs() > 1e-9) {
            cosines.push(value);
        }
    }
    let coeffs = oracle_expand_roots(&cosines.iter().map(|&c| (c, 0.0)).collect::<Vec<_>>());
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|(re, _)| {
                let scaled = re * lead as f64;
                let rounded = scaled.round();
                assert!((scaled - rounded).abs() < 0.01, "oracle rounding unsafe");
                BigInt::from(rounded as i64)
            })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// Criterion 1: the rational-value table over all reduced a/b with b <= 60.
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_niven_table() {
    criterion("criterion 1 (rational-value sweep, b <= 60)", check_niven_table);
}

fn check_niven_table() {
    let entry = |a: u64, b: u64, num: i64, den: i64| NivenEntry {
        a,
        b,
        value: frac(num, den),
    };
    let expected_cos = vec![
        entry(0, 1, 1, 1),
        entry(1, 1, -1, 1),
        entry(1, 2, 0, 1),
        entry(3, 2, 0, 1),
        entry(1, 3, 1, 2),
        entry(2, 3, -1, 2),
        entry(4, 3, -1, 2),
        entry(5, 3, 1, 2),
    ];
    let expected_sin = vec![
        entry(0, 1, 0, 1),
        entry(1, 1, 0, 1),
        entry(1, 2, 1, 1),
        entry(3, 2, -1, 1),
        entry(1, 6, 1, 2),
        entry(5, 6, 1, 2),
        entry(7, 6, -1, 2),
        entry(11, 6, -1, 2),
    ];
    let expected_tan = vec![
        entry(0, 1, 0, 1),
        entry(1, 1, 0, 1),
        entry(1, 4, 1, 1),
        entry(3, 4, -1, 1),
        entry(5, 4, 1, 1),
        entry(7, 4, -1, 1),
    ];
    for (func, expected) in [
        (TrigFunc::Cos, expected_cos),
        (TrigFunc::Sin, expected_sin),
        (TrigFunc::Tan, expected_tan),
    ] {
        let table = niven_table(func, 60).unwrap();
        assert_eq!(table, expected, "rational {func} table over b <= 60");
        let allowed: &[Fraction] = &match func {
            TrigFunc::Tan => vec![frac(0, 1), frac(1, 1), frac(-1, 1)],
            _ => vec![frac(0, 1), frac(1, 1), frac(-1, 1), frac(1, 2), frac(-1, 2)],
        };
        for row in &table {
            assert!(allowed.contains(&row.value));
            assert!(matches!(row.b, 1 | 2 | 3 | 4 | 6));
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 2: degree and minimal polynomial of every root of unity d <= 100.
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_root_of_unity_degrees() {
    criterion("criterion 2 (degrees and minimal polynomials of roots of unity, d <= 100)", check_root_of_unity_degrees);
}

fn check_root_of_unity_degrees() {
    for d in 1..=100u64 {
        let phi_d = cyclotomic_poly(d).unwrap();
        let oracle = oracle_cyclotomic(d);
        assert_eq!(phi_d.coeffs(), &oracle[..], "Phi_{d} against the Moebius oracle");
        let zeta = CycloElement::zeta(d, 1).unwrap();
        let minpoly = minimal_polynomial(&zeta);
        assert_eq!(minpoly, phi_d, "minimal polynomial of zeta_{d}");
        assert_eq!(
            minpoly.degree(),
            Some(totient(d).unwrap() as usize),
            "degree of zeta_{d}"
        );
    }
    for d in 1..=100u64 {
        assert_eq!(
            totient(d).unwrap() <= 2,
            matches!(d, 1 | 2 | 3 | 4 | 6),
            "phi({d}) <= 2 exactly on the five small conductors"
        );
    }
}

// ---------------------------------------------------------------------------
// Criterion 3: the four closing identities, exactly and to 1e-30.
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_closing_identities() {
    criterion("criterion 3 (closing identities as canonical surds, 1e-30 at 128 bits)", check_closing_identities);
}

fn check_closing_identities() {
    let cases = [
        (TrigFunc::Cos, 1i64, 5i64, Surd::from_i64s(1, 1, 4, 5).unwrap()),
        (TrigFunc::Sin, 1, 10, Surd::from_i64s(-1, 1, 4, 5).unwrap()),
        (TrigFunc::Tan, 1, 8, Surd::from_i64s(-1, 1, 1, 2).unwrap()),
        (TrigFunc::Tan, 1, 12, Surd::from_i64s(2, -1, 1, 3).unwrap()),
    ];
    let tolerance = astro_float::BigFloat::from_f64(1e-30, 64);
    for (func, a, b, surd) in cases {
        let angle = normalize_angle(a, b).unwrap();
        let classified = classify(&TrigQuery::new(func, angle.clone()));
        assert_eq!(
            classified,
            Classification::Quadratic(surd.clone()),
            "{func}(pi*{a}/{b})"
        );
        let element = cyclotrig::trig::trig_element(func, &angle).unwrap();
        let via_field = numeric::eval_numeric(&element, 128);
        let via_radical = surd.eval_ball(128);
        let deviation = via_field.sub(&via_radical, 128).deviation_upper();
        assert!(
            deviation < tolerance,
            "{func}(pi*{a}/{b}) vs {surd}: deviation above 1e-30"
        );
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: the totient preimage of 4 and its degree-2 trig values.
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_inverse_totient() {
    criterion("criterion 4 (inverse totient of 4 and its degree-2 values)", check_inverse_totient);
}

fn check_inverse_totient() {
    assert_eq!(inverse_totient(4).unwrap(), vec![5, 8, 10, 12]);
    for d in [5u64, 8, 10, 12] {
        for c in 1..d {
            if c.gcd(&d) != 1 {
                continue;
            }
            let angle = normalize_angle(2 * c as i64, d as i64).unwrap();
            assert_eq!(degree(&cos_element(&angle)), 2, "cos(2*pi*{c}/{d})");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 5: the degree law over all conductors d <= 60.
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_degree_law() {
    criterion("criterion 5 (degree law phi(d)/2 for cosines, d <= 60)", check_degree_law);
}

fn check_degree_law() {
    for d in 1..=60u64 {
        let expected = if d <= 2 { 1 } else { totient(d).unwrap() / 2 };
        for c in 0..d.max(2) {
            if c.gcd(&d) != 1 {
                continue;
            }
            let angle = normalize_angle(2 * c as i64, d as i64).unwrap();
            assert_eq!(
                degree(&cos_element(&angle)),
                expected,
                "degree of cos(2*pi*{c}/{d})"
            );
        }
    }
    // spot-check the law itself against the numeric orbit oracle
    for (d, lead) in [(7u64, 8i64), (9, 8), (11, 32), (60, 256)] {
        let angle = normalize_angle(2, d as i64).unwrap();
        let expected = oracle_cos_minpoly(d, lead);
        assert_eq!(minimal_polynomial(&cos_element(&angle)), expected, "d = {d}");
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: witness agreement over dense rational grids.
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_witness_agreement() {
    criterion("criterion 6 (witness agreement on rational grids)", check_witness_agreement);
}

fn check_witness_agreement() {
    let special = [frac(0, 1), frac(1, 2), frac(-1, 2), frac(1, 1), frac(-1, 1)];
    for den in 1..=50i64 {
        for num in -den..=den {
            if num.gcd(&den) != 1 {
                continue;
            }
            let s = frac(num, den);
            let witnessed = cos_rationality_witness(&s).unwrap().is_some();
            assert_eq!(
                witnessed,
                special.contains(&s),
                "cos witness at s = {num}/{den}"
            );
        }
    }
    let tan_special = [frac(0, 1), frac(1, 1), frac(-1, 1)];
    for den in 1..=25i64 {
        for num in -25..=25i64 {
            if num.gcd(&den) != 1 {
                continue;
            }
            let r = frac(num, den);
            assert_eq!(
                tan_rationality_witness(&r).is_some(),
                tan_special.contains(&r),
                "tan witness at r = {num}/{den}"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 7: the squaring construction stays on the unit circle, exactly.
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_unit_circle() {
    criterion("criterion 7 (unit-circle identity on 100 pseudo-random rationals)", check_unit_circle);
}

fn check_unit_circle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let one = Fraction::from_integer(BigInt::one());
    for case in 0..100 {
        let r = frac(rng.gen_range(-100_000..=100_000), rng.gen_range(1..=100_000));
        let (x, y) = double_angle_point(&r);
        assert_eq!(&x * &x + &y * &y, one, "case {case}: r = {r}");
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: Pythagorean identity and randomized field axioms.
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_pythagorean_and_field_axioms() {
    criterion("criterion 8 (sin^2+cos^2=1 for b <= 24; >= 1000 field-axiom cases)", check_pythagorean_and_field_axioms);
}

fn check_pythagorean_and_field_axioms() {
    let pythagorean = pythagorean_suite(24);
    assert_eq!(pythagorean.failed, 0, "{:?}", pythagorean.first_failure);
    assert!(pythagorean.passed > 0);
    let axioms = field_axioms_suite(250);
    assert_eq!(axioms.failed, 0, "{:?}", axioms.first_failure);
    assert!(
        axioms.passed >= 1000,
        "need at least 1000 randomized cases, ran {}",
        axioms.passed
    );
}

// ---------------------------------------------------------------------------
// Criterion 9: the first cyclotomic coefficient outside {-1, 0, 1}.
// ---------------------------------------------------------------------------

#[test]
fn criterion_9_phi_105() {
    criterion("criterion 9 (Phi_105 carries the first coefficient -2)", check_phi_105);
}

fn check_phi_105() {
    let phi_105 = cyclotomic_poly(105).unwrap();
    // Confirmed by both oracles before pinning: the x^7 and x^41
    // coefficients equal -2, and no coefficient leaves {-2, ..., 1}.
    assert_eq!(phi_105.coeffs(), &oracle_cyclotomic(105)[..]);
    let f64_oracle = oracle_cyclotomic_f64(105);
    let as_i64: Vec<i64> = phi_105
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect();
    assert_eq!(as_i64, f64_oracle);
    assert_eq!(phi_105.coeff(7), BigInt::from(-2));
    assert_eq!(phi_105.coeff(41), BigInt::from(-2));
    assert!(phi_105.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    for n in 1..105u64 {
        assert!(
            cyclotomic_poly(n)
                .unwrap()
                .coeffs()
                .iter()
                .all(|c| c.abs() <= BigInt::one()),
            "Phi_{n} should have coefficients in -1..=1"
        );
    }
}
