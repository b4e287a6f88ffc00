//! The quantized enveloping superalgebra on generators e, f, k, k^-1.
//!
//! Defining relations, with q = -t^2:
//!   k k^-1 = k^-1 k = 1
//!   k e k^-1 = q e
//!   k f k^-1 = q^-1 f
//!   e f + f e = (k - k^-1)/(q - q^-1)
//! e and f are odd, k is even.  Normal monomials are e^r f^s k^m.

use super::{FreeElement, Mono, MonoMul};
use crate::scalar::Scalar;
use once_cell::sync::Lazy;
use std::fmt;
use std::sync::Mutex;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct UMono {
    pub e: u32,
    pub f: u32,
    pub k: i64,
}

impl UMono {
    pub fn new(e: u32, f: u32, k: i64) -> Self {
        UMono { e, f, k }
    }

    pub fn k_pow(k: i64) -> Self {
        UMono::new(0, 0, k)
    }
}

impl Mono for UMono {
    fn parity(&self) -> u8 {
        ((self.e + self.f) % 2) as u8
    }

    fn unit() -> Self {
        UMono::new(0, 0, 0)
    }
}

impl fmt::Display for UMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.e {
            0 => {}
            1 => parts.push("e".to_string()),
            r => parts.push(format!("e^{}", r)),
        }
        match self.f {
            0 => {}
            1 => parts.push("f".to_string()),
            s => parts.push(format!("f^{}", s)),
        }
        match self.k {
            0 => {}
            1 => parts.push("k".to_string()),
            m => parts.push(format!("k^{}", m)),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type UElement = FreeElement<UMono>;

/// 1/(q - q^-1).
fn qdiff_inv() -> Scalar {
    Scalar::q_pow(1)
        .sub(&Scalar::q_pow(-1))
        .inv()
        .expect("q - q^-1 is invertible")
}

/// f * e^r in normal form, memoized.
fn f_times_e_pow(r: u32) -> UElement {
    static CACHE: Lazy<Mutex<Vec<UElement>>> = Lazy::new(|| {
        Mutex::new(vec![FreeElement::from_mono(UMono::new(0, 1, 0))])
    });
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= r as usize {
        let r1 = cache.len() as u32; // computing f e^r1
        let prev = cache[r1 as usize - 1].clone();
        // f e^r = -e (f e^(r-1)) + (q^(r-1) e^(r-1) k - q^(1-r) e^(r-1) k^-1)/(q - q^-1)
        let mut out = lmul_e(&prev).neg();
        let iv = qdiff_inv();
        out.add_term(
            UMono::new(r1 - 1, 0, 1),
            Scalar::q_pow(r1 as i64 - 1).mul(&iv),
        );
        out.add_term(
            UMono::new(r1 - 1, 0, -1),
            Scalar::q_pow(1 - r1 as i64).mul(&iv).neg(),
        );
        cache.push(out);
    }
    cache[r as usize].clone()
}

fn lmul_e(x: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (m, c) in x.terms() {
        out.add_term(UMono::new(m.e + 1, m.f, m.k), c.clone());
    }
    out
}

fn lmul_f(x: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (m, c) in x.terms() {
        // f * e^r f^s k^m = (f e^r) * f^s k^m; appending f^s k^m to a
        // normal monomial e^r1 f^s1 k^m1 costs q^(-m1 s).
        for (m1, c1) in f_times_e_pow(m.e).terms() {
            out.add_term(
                UMono::new(m1.e, m1.f + m.f, m1.k + m.k),
                c.mul(c1).mul(&Scalar::q_pow(-m1.k * m.f as i64)),
            );
        }
    }
    out
}

fn lmul_k_pow(p: i64, x: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (m, c) in x.terms() {
        // k^p e^r f^s = q^(p(r-s)) e^r f^s k^p
        let w = p * (m.e as i64 - m.f as i64);
        out.add_term(
            UMono::new(m.e, m.f, m.k + p),
            c.mul(&Scalar::q_pow(w)),
        );
    }
    out
}

impl MonoMul for UMono {
    fn mul_mono(x: &Self, y: &Self) -> UElement {
        let mut acc = lmul_k_pow(x.k, &FreeElement::from_mono(y.clone()));
        for _ in 0..x.f {
            acc = lmul_f(&acc);
        }
        for _ in 0..x.e {
            acc = lmul_e(&acc);
        }
        acc
    }
}

/// Generator shorthands.
pub fn gen_e() -> UElement {
    FreeElement::from_mono(UMono::new(1, 0, 0))
}

pub fn gen_f() -> UElement {
    FreeElement::from_mono(UMono::new(0, 1, 0))
}

pub fn gen_k(p: i64) -> UElement {
    FreeElement::from_mono(UMono::k_pow(p))
}

/// (k - k^-1)/(q - q^-1), the right side of the mixed relation.
pub fn kappa() -> UElement {
    let iv = qdiff_inv();
    let mut out = UElement::zero();
    out.add_term(UMono::k_pow(1), iv.clone());
    out.add_term(UMono::k_pow(-1), iv.neg());
    out
}
