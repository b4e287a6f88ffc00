//! Cyclotomic polynomials and their values at t^-2.

use super::gauss::Gauss;
use super::laurent::Poly;
use super::ratfunc::RatFunc;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

pub fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

static PHI_CACHE: Lazy<Mutex<HashMap<u32, Poly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The d-th cyclotomic polynomial as a polynomial in one variable.
pub fn cyclotomic_poly(d: u32) -> Poly {
    assert!(d >= 1);
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&d) {
        return p.clone();
    }
    // x^d - 1 divided by the product of the lower cyclotomic factors.
    let mut c = vec![Gauss::zero(); d as usize + 1];
    c[0] = Gauss::from_int(-1);
    c[d as usize] = Gauss::one();
    let mut p = Poly::from_coeffs(c);
    for e in divisors(d) {
        if e < d {
            p = p.exact_div(&cyclotomic_poly(e));
        }
    }
    PHI_CACHE.lock().unwrap().insert(d, p.clone());
    p
}

/// Phi_d(t^-2) as a rational function of t.
pub fn phi_at_inv_t2(d: u32) -> RatFunc {
    let p = cyclotomic_poly(d);
    let mut terms: BTreeMap<i64, Gauss> = BTreeMap::new();
    for (j, g) in p.c.iter().enumerate() {
        if !g.is_zero() {
            terms.insert(-2 * j as i64, g.clone());
        }
    }
    RatFunc::from_laurent(&terms)
}

/// t^(2 phi(d)) * Phi_d(t^-2): a polynomial in t with constant term +-1.
/// Used for trial division when extracting square roots.
pub fn phi_poly_in_t(d: u32) -> Poly {
    let p = cyclotomic_poly(d);
    let deg = p.deg().unwrap();
    debug_assert_eq!(deg as u32, totient(d));
    let mut c = vec![Gauss::zero(); 2 * deg + 1];
    for (j, g) in p.c.iter().enumerate() {
        c[2 * (deg - j)] = g.clone();
    }
    Poly::from_coeffs(c)
}
