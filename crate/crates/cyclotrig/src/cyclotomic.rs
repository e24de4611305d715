//! Euler's totient, its preimages, divisors, and cyclotomic polynomials.
//!
//! Cyclotomic polynomials are computed by the exact division recurrence
//! `Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d` and memoized; everything
//! here is desk-scale, so factorization is plain trial division.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// Euler's totient `phi(n)`, the count of `1 <= k <= n` coprime to `n`.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("totient of 0".into()));
    }
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("divisors of 0".into()));
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    Ok(divs)
}

static PHI_CACHE: LazyLock<Mutex<HashMap<u64, Arc<IntPoly>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The n-th cyclotomic polynomial `Phi_n`, monic of degree `phi(n)`.
pub fn cyclotomic_poly(n: u64) -> Result<IntPoly> {
    Ok((*cyclotomic_arc(n)?).clone())
}

/// Shared handle used by the field layer; results are memoized. Concurrent
/// callers may recompute, but the first insert wins so readers always agree.
pub(crate) fn cyclotomic_arc(n: u64) -> Result<Arc<IntPoly>> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclotomic polynomial of 0".into()));
    }
    if let Some(p) = PHI_CACHE.lock().expect("cache poisoned").get(&n) {
        return Ok(Arc::clone(p));
    }
    let mut poly = IntPoly::x_pow_minus_one(n);
    for d in divisors(n)? {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_arc(d)?;
        poly = poly
            .exact_div(&phi_d)
            .expect("cyclotomic recurrence divides exactly");
    }
    let arc = Arc::new(poly);
    let mut cache = PHI_CACHE.lock().expect("cache poisoned");
    Ok(Arc::clone(cache.entry(n).or_insert(arc)))
}

/// All `n` with `phi(n) = k`, ascending. Exhaustive search over
/// `n <= max(6, k^2)`, which suffices because `phi(n) >= sqrt(n)` for `n > 6`.
pub fn inverse_totient(k: u64) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("inverse totient of 0".into()));
    }
    let bound = 6.max(k.saturating_mul(k));
    let mut out = Vec::new();
    for n in 1..=bound {
        if totient(n)? == k {
            out.push(n);
        }
    }
    Ok(out)
}
