//! The coordinate superalgebra of quantum 2x2 matrices dual to the
//! enveloping algebra, on generators a, b, c, d, sigma.
//!
//! Defining relations:
//!   ab = t ba    ac = t ca    bc = -cb
//!   bd = -t db   cd = -t dc
//!   ad - da = (t^-1 - t) bc
//!   ad + t bc = sigma,  sigma^2 = 1
//! b and c are odd; a, d, sigma are even.  sigma is group-like and
//! implements the parity automorphism: sigma x sigma = (-1)^p(x) x.
//! Normal monomials are a^i b^j c^k d^l sigma^s with i = 0 or l = 0.

use super::{FreeElement, Mono, MonoMul};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct AMono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub s: u8,
}

impl AMono {
    pub fn new(a: u32, b: u32, c: u32, d: u32, s: u8) -> Self {
        assert!(a == 0 || d == 0, "normal monomials carry no mixed a,d powers");
        assert!(s <= 1);
        AMono { a, b, c, d, s }
    }

    /// Total degree in the four matrix generators.
    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }
}

impl Mono for AMono {
    fn parity(&self) -> u8 {
        ((self.b + self.c) % 2) as u8
    }

    fn unit() -> Self {
        AMono::new(0, 0, 0, 0, 0)
    }
}

impl fmt::Display for AMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, pow) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            match pow {
                0 => {}
                1 => parts.push(sym.to_string()),
                p => parts.push(format!("{}^{}", sym, p)),
            }
        }
        if self.s == 1 {
            parts.push("sigma".to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

pub type AElement = FreeElement<AMono>;

fn lmul_a(x: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, cf) in x.terms() {
        if m.d == 0 {
            out.add_term(AMono::new(m.a + 1, m.b, m.c, 0, m.s), cf.clone());
        } else {
            // a b^j c^k d^l = t^(j+k) b^j c^k (a d) d^(l-1)
            // with a d = sigma - t bc.
            let base = Scalar::t_pow((m.b + m.c) as i64);
            out.add_term(
                AMono::new(0, m.b, m.c, m.d - 1, m.s ^ 1),
                cf.mul(&base),
            );
            let sign = if m.c % 2 == 1 { -1 } else { 1 };
            out.add_term(
                AMono::new(0, m.b + 1, m.c + 1, m.d - 1, m.s),
                cf.mul(&base)
                    .mul(&Scalar::t_pow(1))
                    .mul(&Scalar::from_int(-sign)),
            );
        }
    }
    out
}

fn lmul_b(x: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, cf) in x.terms() {
        out.add_term(
            AMono::new(m.a, m.b + 1, m.c, m.d, m.s),
            cf.mul(&Scalar::t_pow(-(m.a as i64))),
        );
    }
    out
}

fn lmul_c(x: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, cf) in x.terms() {
        let sign = if m.b % 2 == 1 { -1 } else { 1 };
        out.add_term(
            AMono::new(m.a, m.b, m.c + 1, m.d, m.s),
            cf.mul(&Scalar::t_pow(-(m.a as i64)))
                .mul(&Scalar::from_int(sign)),
        );
    }
    out
}

fn lmul_d(x: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, cf) in x.terms() {
        if m.a == 0 {
            let sign = if (m.b + m.c) % 2 == 1 { -1 } else { 1 };
            out.add_term(
                AMono::new(0, m.b, m.c, m.d + 1, m.s),
                cf.mul(&Scalar::t_pow(-((m.b + m.c) as i64)))
                    .mul(&Scalar::from_int(sign)),
            );
        } else {
            // d a^i = a^(i-1) sigma - t^(1-2i) a^(i-1) bc
            let sign_sigma = if (m.b + m.c) % 2 == 1 { -1 } else { 1 };
            out.add_term(
                AMono::new(m.a - 1, m.b, m.c, 0, m.s ^ 1),
                cf.mul(&Scalar::from_int(sign_sigma)),
            );
            let sign_bc = if m.b % 2 == 1 { -1 } else { 1 };
            out.add_term(
                AMono::new(m.a - 1, m.b + 1, m.c + 1, 0, m.s),
                cf.mul(&Scalar::t_pow(1 - 2 * m.a as i64))
                    .mul(&Scalar::from_int(-sign_bc)),
            );
        }
    }
    out
}

fn lmul_sigma(x: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, cf) in x.terms() {
        let sign = if (m.b + m.c) % 2 == 1 { -1 } else { 1 };
        out.add_term(
            AMono::new(m.a, m.b, m.c, m.d, m.s ^ 1),
            cf.mul(&Scalar::from_int(sign)),
        );
    }
    out
}

impl MonoMul for AMono {
    fn mul_mono(x: &Self, y: &Self) -> AElement {
        let mut acc = FreeElement::from_mono(y.clone());
        for _ in 0..x.s {
            acc = lmul_sigma(&acc);
        }
        for _ in 0..x.d {
            acc = lmul_d(&acc);
        }
        for _ in 0..x.c {
            acc = lmul_c(&acc);
        }
        for _ in 0..x.b {
            acc = lmul_b(&acc);
        }
        for _ in 0..x.a {
            acc = lmul_a(&acc);
        }
        acc
    }
}

pub fn gen_a() -> AElement {
    FreeElement::from_mono(AMono::new(1, 0, 0, 0, 0))
}

pub fn gen_b() -> AElement {
    FreeElement::from_mono(AMono::new(0, 1, 0, 0, 0))
}

pub fn gen_c() -> AElement {
    FreeElement::from_mono(AMono::new(0, 0, 1, 0, 0))
}

pub fn gen_d() -> AElement {
    FreeElement::from_mono(AMono::new(0, 0, 0, 1, 0))
}

pub fn gen_sigma() -> AElement {
    FreeElement::from_mono(AMono::new(0, 0, 0, 0, 1))
}
