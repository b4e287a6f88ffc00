//! Hopf superalgebra structure on both algebras and the pairing between
//! them.
//!
//! Enveloping side:
//!   De = e(x)1 + k(x)e,  Df = f(x)k^-1 + 1(x)f,  Dk = k(x)k
//!   S(e) = -k^-1 e,  S(f) = -f k,  S(k) = k^-1
//!   eps(e) = eps(f) = 0, eps(k) = 1
//! Matrix side:
//!   Da = a(x)a + b(x)c        Db = a(x)b + b(x)d
//!   Dc = c(x)a + d(x)c        Dd = c(x)b + d(x)d
//!   Dsigma = sigma(x)sigma
//!   S(a) = d sigma, S(b) = -t^-1 b sigma, S(c) = t c sigma, S(d) = a sigma
//!   eps(a) = eps(d) = eps(sigma) = 1, eps(b) = eps(c) = 0
//! The antipode is a graded anti-homomorphism; on a product of homogeneous
//! factors it reverses order with the Koszul reversal sign.
//!
//! Pairing: on generators
//!   <k^(+-1), a> = t^(+-1),  <k^(+-1), d> = -t^(-+1),  <k^(+-1), sigma> = -1,
//!   <e, b> = (t - t^-1)/(q - q^-1),  <f, c> = 1,
//! all other generator pairs vanish; <1, x> = eps(x), <u, 1> = eps(u).
//! Products pair through the coproduct of the other side with no extra
//! signs: <u u', x> = sum <u, x_1><u', x_2> and <u, x y> = sum
//! <u_1, x><u_2, y>.  The pairing vanishes across parities.

use crate::algebra::tensor::{tensor_of, TMono};
use crate::algebra::u::{self, UMono};
use crate::algebra::a::{self, AMono};
use crate::algebra::{AElement, ATensor, FreeElement, Mono, UElement, UTensor};
use crate::qpoly::gauss_binomial;
use crate::scalar::Scalar;
use std::cell::RefCell;
use std::collections::HashMap;

// ---------- coproducts ----------

fn coproduct_u_gen_e() -> UTensor {
    let e = u::gen_e();
    let one = UElement::one();
    let k = u::gen_k(1);
    tensor_of(&e, &one).add(&tensor_of(&k, &e))
}

fn coproduct_u_gen_f() -> UTensor {
    let f = u::gen_f();
    let one = UElement::one();
    let ki = u::gen_k(-1);
    tensor_of(&f, &ki).add(&tensor_of(&one, &f))
}

fn coproduct_u_mono(m: &UMono) -> UTensor {
    // group-like start: k^p (x) k^p
    let mut acc = tensor_of(&u::gen_k(m.k), &u::gen_k(m.k));
    let df = coproduct_u_gen_f();
    for _ in 0..m.f {
        acc = df.mul(&acc);
    }
    let de = coproduct_u_gen_e();
    for _ in 0..m.e {
        acc = de.mul(&acc);
    }
    acc
}

pub fn coproduct_u(x: &UElement) -> UTensor {
    let mut out = UTensor::zero();
    for (m, c) in x.terms() {
        for (tm, tc) in coproduct_u_mono(m).terms() {
            out.add_term(tm.clone(), tc.mul(c));
        }
    }
    out
}

fn coproduct_a_gen(g: char) -> ATensor {
    let (a, b, c, d, s) = (a::gen_a(), a::gen_b(), a::gen_c(), a::gen_d(), a::gen_sigma());
    match g {
        'a' => tensor_of(&a, &a).add(&tensor_of(&b, &c)),
        'b' => tensor_of(&a, &b).add(&tensor_of(&b, &d)),
        'c' => tensor_of(&c, &a).add(&tensor_of(&d, &c)),
        'd' => tensor_of(&c, &b).add(&tensor_of(&d, &d)),
        's' => tensor_of(&s, &s),
        _ => unreachable!(),
    }
}

thread_local! {
    static A_COPRODUCT_CACHE: RefCell<HashMap<AMono, ATensor>> = RefCell::new(HashMap::new());
}

pub fn coproduct_a_mono(m: &AMono) -> ATensor {
    if let Some(v) = A_COPRODUCT_CACHE.with(|c| c.borrow().get(m).cloned()) {
        return v;
    }
    let mut acc = ATensor::one();
    for _ in 0..m.s {
        acc = acc.mul(&coproduct_a_gen('s'));
    }
    for _ in 0..m.d {
        acc = coproduct_a_gen('d').mul(&acc);
    }
    for _ in 0..m.c {
        acc = coproduct_a_gen('c').mul(&acc);
    }
    for _ in 0..m.b {
        acc = coproduct_a_gen('b').mul(&acc);
    }
    for _ in 0..m.a {
        acc = coproduct_a_gen('a').mul(&acc);
    }
    A_COPRODUCT_CACHE.with(|c| c.borrow_mut().insert(m.clone(), acc.clone()));
    acc
}

pub fn coproduct_a(x: &AElement) -> ATensor {
    let mut out = ATensor::zero();
    for (m, c) in x.terms() {
        for (tm, tc) in coproduct_a_mono(m).terms() {
            out.add_term(tm.clone(), tc.mul(c));
        }
    }
    out
}

/// Apply the coproduct to the left leg of every tensor term.
pub fn expand_left<M, F>(x: &FreeElement<TMono<M, M>>, delta: F) -> FreeElement<TMono<TMono<M, M>, M>>
where
    M: Mono,
    F: Fn(&M) -> FreeElement<TMono<M, M>>,
{
    let mut out = FreeElement::zero();
    for (tm, c) in x.terms() {
        for (inner, ic) in delta(&tm.l).terms() {
            out.add_term(TMono::new(inner.clone(), tm.r.clone()), ic.mul(c));
        }
    }
    out
}

/// Apply the coproduct to the right leg of every tensor term.
pub fn expand_right<M, F>(x: &FreeElement<TMono<M, M>>, delta: F) -> FreeElement<TMono<M, TMono<M, M>>>
where
    M: Mono,
    F: Fn(&M) -> FreeElement<TMono<M, M>>,
{
    let mut out = FreeElement::zero();
    for (tm, c) in x.terms() {
        for (inner, ic) in delta(&tm.r).terms() {
            out.add_term(TMono::new(tm.l.clone(), inner.clone()), ic.mul(c));
        }
    }
    out
}

/// Reassociate (M (x) M) (x) M -> M (x) (M (x) M) for comparison.
pub fn reassociate<M: Mono>(
    x: &FreeElement<TMono<TMono<M, M>, M>>,
) -> FreeElement<TMono<M, TMono<M, M>>> {
    let mut out = FreeElement::zero();
    for (tm, c) in x.terms() {
        out.add_term(
            TMono::new(tm.l.l.clone(), TMono::new(tm.l.r.clone(), tm.r.clone())),
            c.clone(),
        );
    }
    out
}

// ---------- counits ----------

pub fn counit_u(x: &UElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in x.terms() {
        if m.e == 0 && m.f == 0 {
            acc = acc.add(c);
        }
    }
    acc
}

pub fn counit_a(x: &AElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (m, c) in x.terms() {
        if m.b == 0 && m.c == 0 {
            acc = acc.add(c);
        }
    }
    acc
}

// ---------- antipodes ----------

/// Koszul reversal sign for a product of n odd factors.
fn reversal_sign(n: u32) -> Scalar {
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

pub fn antipode_u(x: &UElement) -> UElement {
    let s_e = UElement::from_mono_scaled(UMono::new(1, 0, -1), Scalar::q_pow(-1).neg());
    let s_f = UElement::from_mono_scaled(UMono::new(0, 1, 1), Scalar::from_int(-1));
    let mut out = UElement::zero();
    for (m, c) in x.terms() {
        let mut img = u::gen_k(-m.k);
        for _ in 0..m.f {
            img = img.mul(&s_f);
        }
        for _ in 0..m.e {
            img = img.mul(&s_e);
        }
        let sign = reversal_sign(m.e + m.f);
        for (im, ic) in img.terms() {
            out.add_term(im.clone(), ic.mul(c).mul(&sign));
        }
    }
    out
}

pub fn antipode_a(x: &AElement) -> AElement {
    let sig = a::gen_sigma();
    let s_a = a::gen_d().mul(&sig);
    let s_b = a::gen_b().mul(&sig).scale(&Scalar::t_pow(-1).neg());
    let s_c = a::gen_c().mul(&sig).scale(&Scalar::t_pow(1));
    let s_d = a::gen_a().mul(&sig);
    let mut out = AElement::zero();
    for (m, c) in x.terms() {
        let mut img = AElement::one();
        for _ in 0..m.s {
            img = img.mul(&sig);
        }
        for _ in 0..m.d {
            img = img.mul(&s_d);
        }
        for _ in 0..m.c {
            img = img.mul(&s_c);
        }
        for _ in 0..m.b {
            img = img.mul(&s_b);
        }
        for _ in 0..m.a {
            img = img.mul(&s_a);
        }
        let sign = reversal_sign(m.b + m.c);
        for (im, ic) in img.terms() {
            out.add_term(im.clone(), ic.mul(c).mul(&sign));
        }
    }
    out
}

// ---------- pairing ----------

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum UGen {
    E,
    F,
    K,
    KInv,
}

/// <e, b>: the normalization forced by the mixed relation.
fn e_on_b() -> Scalar {
    Scalar::t_pow(1)
        .sub(&Scalar::t_pow(-1))
        .mul(
            &Scalar::q_pow(1)
                .sub(&Scalar::q_pow(-1))
                .inv()
                .unwrap(),
        )
}

/// <k^(+-1), -> on a normal monomial: multiplicative over the factors.
fn k_on_mono(inv: bool, m: &AMono) -> Scalar {
    if m.b > 0 || m.c > 0 {
        return Scalar::zero();
    }
    let e = if inv { -1i64 } else { 1 };
    // a -> t^e, d -> -t^-e, sigma -> -1
    let mut acc = Scalar::t_pow(e * m.a as i64);
    let dsign = if m.d % 2 == 1 { -1 } else { 1 };
    acc = acc.mul(&Scalar::t_pow(-e * m.d as i64)).mul(&Scalar::from_int(dsign));
    if m.s == 1 {
        acc = acc.neg();
    }
    acc
}

fn counit_mono(m: &AMono) -> Scalar {
    if m.b == 0 && m.c == 0 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// Split the leftmost generator off a normal monomial.
fn peel_a(m: &AMono) -> Option<(char, AMono)> {
    if m.a > 0 {
        Some(('a', AMono::new(m.a - 1, m.b, m.c, m.d, m.s)))
    } else if m.b > 0 {
        Some(('b', AMono::new(0, m.b - 1, m.c, m.d, m.s)))
    } else if m.c > 0 {
        Some(('c', AMono::new(0, 0, m.c - 1, m.d, m.s)))
    } else if m.d > 0 {
        Some(('d', AMono::new(0, 0, 0, m.d - 1, m.s)))
    } else if m.s > 0 {
        Some(('s', AMono::new(0, 0, 0, 0, 0)))
    } else {
        None
    }
}

thread_local! {
    static GEN_PAIR_CACHE: RefCell<HashMap<(UGen, AMono), Scalar>> = RefCell::new(HashMap::new());
    static MONO_PAIR_CACHE: RefCell<HashMap<(UMono, AMono), Scalar>> = RefCell::new(HashMap::new());
}

/// Pairing of a single enveloping generator with a normal monomial, by
/// peeling the monomial with the generator's own coproduct rule.
fn gen_pair(g: UGen, m: &AMono) -> Scalar {
    match g {
        UGen::K => return k_on_mono(false, m),
        UGen::KInv => return k_on_mono(true, m),
        _ => {}
    }
    if let Some(v) = GEN_PAIR_CACHE.with(|c| c.borrow().get(&(g, m.clone())).cloned()) {
        return v;
    }
    let result = match peel_a(m) {
        None => Scalar::zero(), // eps of e, f
        Some((gen, rest)) => match g {
            UGen::E => {
                // e(xy) = e(x) eps(y) + k(x) e(y)
                let direct = if gen == 'b' {
                    e_on_b().mul(&counit_mono(&rest))
                } else {
                    Scalar::zero()
                };
                let kx = match gen {
                    'a' => Scalar::t_pow(1),
                    'd' => Scalar::t_pow(-1).neg(),
                    's' => Scalar::from_int(-1),
                    _ => Scalar::zero(),
                };
                direct.add(&kx.mul(&gen_pair(UGen::E, &rest)))
            }
            UGen::F => {
                // f(xy) = f(x) k^-1(y) + eps(x) f(y)
                let direct = if gen == 'c' {
                    k_on_mono(true, &rest)
                } else {
                    Scalar::zero()
                };
                let ex = match gen {
                    'a' | 'd' | 's' => Scalar::one(),
                    _ => Scalar::zero(),
                };
                direct.add(&ex.mul(&gen_pair(UGen::F, &rest)))
            }
            _ => unreachable!(),
        },
    };
    GEN_PAIR_CACHE.with(|c| c.borrow_mut().insert((g, m.clone()), result.clone()));
    result
}

fn mono_pair(u: &UMono, x: &AMono) -> Scalar {
    if u.e == 0 && u.f == 0 && u.k == 0 {
        return counit_mono(x);
    }
    if let Some(v) = MONO_PAIR_CACHE.with(|c| c.borrow().get(&(u.clone(), x.clone())).cloned()) {
        return v;
    }
    // split u = g * rest with g the leftmost generator
    let (g, rest) = if u.e > 0 {
        (UGen::E, UMono::new(u.e - 1, u.f, u.k))
    } else if u.f > 0 {
        (UGen::F, UMono::new(0, u.f - 1, u.k))
    } else if u.k > 0 {
        (UGen::K, UMono::new(0, 0, u.k - 1))
    } else {
        (UGen::KInv, UMono::new(0, 0, u.k + 1))
    };
    let result = if rest == UMono::unit() {
        gen_pair(g, x)
    } else {
        // <g rest, x> = sum <g, x_1><rest, x_2>
        let mut acc = Scalar::zero();
        for (tm, c) in coproduct_a_mono(x).terms() {
            let left = gen_pair(g, &tm.l);
            if left.is_zero() {
                continue;
            }
            acc = acc.add(&left.mul(&mono_pair(&rest, &tm.r)).mul(c));
        }
        acc
    };
    MONO_PAIR_CACHE.with(|c| c.borrow_mut().insert((u.clone(), x.clone()), result.clone()));
    result
}

/// The Hopf pairing, bilinear in both arguments.
pub fn pair(u: &UElement, x: &AElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (um, uc) in u.terms() {
        for (am, ac) in x.terms() {
            let p = mono_pair(um, am);
            if !p.is_zero() {
                acc = acc.add(&p.mul(uc).mul(ac));
            }
        }
    }
    acc
}

// ---------- closed-form monomial coproduct ----------

/// Closed form of D(e^r f^s k^p) as a double sum with Gauss binomial
/// coefficients at base -q:
///   sum_{i<=r, j<=s} (-1)^((r-i+j)(s-j)) q^((i-r)(s-j))
///     [r;i]_{-q} [s;j]_{-q}
///     e^i f^(s-j) k^(r-i+p) (x) e^(r-i) f^j k^(j-s+p).
pub fn monomial_coproduct_u(r: u32, s: u32, p: i64) -> UTensor {
    let mq = Scalar::q_pow(1).neg(); // -q = t^2
    let mut out = UTensor::zero();
    for i in 0..=r {
        for j in 0..=s {
            let sign_exp = ((r - i) as i64 + j as i64) * (s - j) as i64;
            let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
            let qexp = (i as i64 - r as i64) * (s - j) as i64;
            let coeff = Scalar::from_int(sign)
                .mul(&Scalar::q_pow(qexp))
                .mul(&gauss_binomial(r, i, &mq))
                .mul(&gauss_binomial(s, j, &mq));
            let left = UMono::new(i, s - j, (r - i) as i64 + p);
            let right = UMono::new(r - i, j, j as i64 - s as i64 + p);
            out.add_term(TMono::new(left, right), coeff);
        }
    }
    out
}
