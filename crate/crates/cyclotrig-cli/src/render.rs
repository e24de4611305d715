//! Text rendering: polynomials with caret powers and explicit signs, and
//! informational numeric approximations.

use num_traits::{One, Signed, Zero};

use cyclotrig::IntPoly;

/// Renders a polynomial in descending powers, e.g. `8x^3 - 4x^2 - 4x + 1`.
pub fn poly_text(poly: &IntPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let degree = poly.degree().expect("nonzero polynomial");
    let mut out = String::new();
    for power in (0..=degree).rev() {
        let coeff = poly.coeff(power);
        if coeff.is_zero() {
            continue;
        }
        if out.is_empty() {
            if coeff.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if coeff.is_negative() { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        match power {
            0 => out.push_str(&magnitude.to_string()),
            _ => {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                }
                out.push('x');
                if power > 1 {
                    out.push_str(&format!("^{power}"));
                }
            }
        }
    }
    out
}

/// Formats with a fixed number of significant digits, as plain decimal.
/// Informational only; never used for decisions.
pub fn format_significant(value: f64, digits: u32) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).clamp(0, 60) as usize;
    format!("{value:.decimals$}")
}
