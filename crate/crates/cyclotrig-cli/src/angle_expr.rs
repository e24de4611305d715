//! Parsing of angle expressions and plain fractions.
//!
//! Accepted angle grammar, whitespace-insensitive, all meaning `a*pi/b`:
//! `a/b`, `a*pi/b`, `pi/b` (a = 1), plain `a` or `a*pi` or `pi` (b = 1),
//! and `0`; one optional leading minus sign.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use cyclotrig::Fraction;

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses an angle expression into `(a, b)` meaning `a*pi/b`.
pub fn parse_angle(input: &str) -> Result<(BigInt, BigInt), String> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let (negative, body) = match compact.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, compact.as_str()),
    };
    let (head, tail) = match body.split_once('/') {
        Some((h, t)) => (h, Some(t)),
        None => (body, None),
    };
    let numerator = if head == "pi" {
        BigInt::one()
    } else if let Some(multiple) = head.strip_suffix("*pi") {
        parse_digits(multiple)
            .ok_or_else(|| format!("invalid angle {input:?}: bad multiplier before *pi"))?
    } else {
        parse_digits(head)
            .ok_or_else(|| format!("invalid angle {input:?}: expected a/b, a*pi/b, pi/b, or 0"))?
    };
    let denominator = match tail {
        Some(t) => parse_digits(t)
            .ok_or_else(|| format!("invalid angle {input:?}: bad denominator"))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(format!("invalid angle {input:?}: denominator is zero"));
    }
    Ok((
        if negative { -numerator } else { numerator },
        denominator,
    ))
}

/// Parses a plain rational value `num` or `num/den`, with one optional
/// leading minus sign.
pub fn parse_fraction(input: &str) -> Result<Fraction, String> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let (negative, body) = match compact.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, compact.as_str()),
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let numerator = parse_digits(num_text)
        .ok_or_else(|| format!("invalid rational {input:?}: expected num or num/den"))?;
    let denominator = match den_text {
        Some(d) => {
            parse_digits(d).ok_or_else(|| format!("invalid rational {input:?}: bad denominator"))?
        }
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(format!("invalid rational {input:?}: denominator is zero"));
    }
    Ok(Fraction::new(
        if negative { -numerator } else { numerator },
        denominator,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclotrig::frac;

    fn angle(s: &str) -> (i64, i64) {
        let (a, b) = parse_angle(s).unwrap();
        (i64::try_from(&a).unwrap(), i64::try_from(&b).unwrap())
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(angle("0"), (0, 1));
        assert_eq!(angle("7"), (7, 1));
        assert_eq!(angle("1/7"), (1, 7));
        assert_eq!(angle("pi"), (1, 1));
        assert_eq!(angle("pi/3"), (1, 3));
        assert_eq!(angle("2*pi/7"), (2, 7));
        assert_eq!(angle("-pi/4"), (-1, 4));
        assert_eq!(angle("- 2 * pi / 9"), (-2, 9));
        assert_eq!(angle("3*pi"), (3, 1));
    }

    #[test]
    fn rejected_forms() {
        for bad in ["", "-", "pi/0", "1/0", "*pi", "x/3", "1.5/2", "--1", "1/-3", "2pi/7"] {
            assert!(parse_angle(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn parse_inverts_rendering_on_reduced_pairs() {
        for (a, b) in [(0i64, 1i64), (1, 1), (-1, 4), (3, 8), (999_983, 999_979), (-5, 6)] {
            let rendered = format!("{a}*pi/{b}");
            let (pa, pb) = parse_angle(&rendered).unwrap();
            let reduced = Fraction::new(pa, pb);
            assert_eq!(reduced, frac(a, b), "{rendered}");
        }
    }

    #[test]
    fn fractions() {
        assert_eq!(parse_fraction("1/2").unwrap(), frac(1, 2));
        assert_eq!(parse_fraction("-3").unwrap(), frac(-3, 1));
        assert_eq!(parse_fraction(" - 9 / 12 ").unwrap(), frac(-3, 4));
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("pi").is_err());
    }
}
