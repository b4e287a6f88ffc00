//! The exact coefficient field.
//!
//! Scalars live in Q(i)(t^(1/2)) extended by the square roots of the
//! cyclotomic values Phi_d(t^-2).  The second deformation parameter is
//! always q = -t^2, substituted on construction.  Every scalar is a finite
//! sum of terms r * sqrt(t)^a * prod_d sqrt(Phi_d(t^-2))^b_d with r a
//! rational function of t over Q(i) and a, b_d in {0, 1}; the radical
//! multi-flags are the keys of the term map.  Since no nonempty product of
//! t and the Phi_d(t^-2) is a square in Q(i)(t), the representation is
//! unique and the zero test is exact.

pub mod cyclotomic;
pub mod expr;
pub mod gauss;
pub mod laurent;
pub mod numeric;
pub mod ratfunc;

pub use gauss::Gauss;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};
use cyclotomic::{phi_at_inv_t2, phi_poly_in_t, totient};
use laurent::Poly;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Which square-root generators a term carries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct RadicalClass {
    pub t_half: bool,
    pub phi: BTreeSet<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Axis {
    THalf,
    Phi(u32),
}

impl RadicalClass {
    pub fn empty() -> Self {
        RadicalClass::default()
    }

    pub fn is_empty(&self) -> bool {
        !self.t_half && self.phi.is_empty()
    }

    /// Product of two radical monomials: the xor class plus the rational
    /// factor produced by squared generators.
    fn mul(&self, o: &RadicalClass) -> (RadicalClass, RatFunc) {
        let mut extra = RatFunc::one();
        if self.t_half && o.t_half {
            extra = extra.mul(&RatFunc::t_pow(1));
        }
        let mut phi = BTreeSet::new();
        for d in self.phi.union(&o.phi) {
            if self.phi.contains(d) && o.phi.contains(d) {
                extra = extra.mul(&phi_at_inv_t2(*d));
            } else {
                phi.insert(*d);
            }
        }
        (
            RadicalClass {
                t_half: self.t_half ^ o.t_half,
                phi,
            },
            extra,
        )
    }

    fn has_axis(&self, axis: Axis) -> bool {
        match axis {
            Axis::THalf => self.t_half,
            Axis::Phi(d) => self.phi.contains(&d),
        }
    }

    fn first_axis(&self) -> Option<Axis> {
        if self.t_half {
            Some(Axis::THalf)
        } else {
            self.phi.iter().next().map(|&d| Axis::Phi(d))
        }
    }

    /// The rational value of the squared radical monomial.
    fn squared_value(&self) -> RatFunc {
        let mut v = RatFunc::one();
        if self.t_half {
            v = v.mul(&RatFunc::t_pow(1));
        }
        for &d in &self.phi {
            v = v.mul(&phi_at_inv_t2(d));
        }
        v
    }
}

/// An element of the scalar field.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    terms: BTreeMap<RadicalClass, RatFunc>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_ratfunc(RatFunc::one())
    }

    pub fn i() -> Self {
        Scalar::from_gauss(Gauss::i())
    }

    pub fn from_gauss(g: Gauss) -> Self {
        Scalar::from_ratfunc(RatFunc::from_gauss(g))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_ratfunc(RatFunc::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_gauss(Gauss::from_ratio(n, d))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        Scalar::single(RadicalClass::empty(), r)
    }

    pub fn single(class: RadicalClass, r: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(class, r);
        }
        Scalar { terms }
    }

    /// t^k.
    pub fn t_pow(k: i64) -> Self {
        Scalar::from_ratfunc(RatFunc::t_pow(k))
    }

    /// t^(k/2).
    pub fn t_half_pow(k: i64) -> Self {
        let a = k.div_euclid(2);
        if k.rem_euclid(2) == 0 {
            Scalar::t_pow(a)
        } else {
            Scalar::single(
                RadicalClass {
                    t_half: true,
                    phi: BTreeSet::new(),
                },
                RatFunc::t_pow(a),
            )
        }
    }

    /// q^k with q = -t^2.
    pub fn q_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Scalar::from_ratfunc(RatFunc::t_pow(2 * k).scale(&Gauss::from_int(sign)))
    }

    /// The cyclotomic value Phi_d(t^-2).
    pub fn phi(d: u32) -> Self {
        Scalar::from_ratfunc(phi_at_inv_t2(d))
    }

    /// sqrt(Phi_d(t^-2)) as a radical generator.
    pub fn sqrt_phi(d: u32) -> Self {
        let mut phi = BTreeSet::new();
        phi.insert(d);
        Scalar::single(
            RadicalClass {
                t_half: false,
                phi,
            },
            RatFunc::one(),
        )
    }

    pub fn sqrt_t() -> Self {
        Scalar::t_half_pow(1)
    }

    /// 1 - t^(-2m), for any integer m.
    pub fn one_minus_u_pow(m: i64) -> Self {
        Scalar::one().sub(&Scalar::t_pow(-2 * m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&RadicalClass::empty())
                .map_or(false, |r| r.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RadicalClass, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The rational-function part, when no radical generator is present.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let (c, r) = self.terms.iter().next().unwrap();
            if c.is_empty() {
                return Some(r.clone());
            }
        }
        None
    }

    pub fn as_gauss(&self) -> Option<Gauss> {
        self.as_ratfunc().and_then(|r| r.as_gauss())
    }

    fn add_term(&mut self, class: RadicalClass, r: RatFunc) {
        if r.is_zero() {
            return;
        }
        let entry = self.terms.entry(class.clone()).or_insert_with(RatFunc::zero);
        *entry = entry.add(&r);
        if entry.is_zero() {
            self.terms.remove(&class);
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (c, r) in &o.terms {
            out.add_term(c.clone(), r.clone());
        }
        out
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(c, r)| (c.clone(), r.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (c1, r1) in &self.terms {
            for (c2, r2) in &o.terms {
                let (class, extra) = c1.mul(c2);
                out.add_term(class, r1.mul(r2).mul(&extra));
            }
        }
        out
    }

    pub fn scale_gauss(&self, g: &Gauss) -> Scalar {
        if g.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(c, r)| (c.clone(), r.scale(g)))
                .collect(),
        }
    }

    /// Negate every term carrying the given radical axis.
    fn conj_axis(&self, axis: Axis) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(c, r)| {
                    let r = if c.has_axis(axis) { r.neg() } else { r.clone() };
                    (c.clone(), r)
                })
                .collect(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (class, r) = self.terms.iter().next().unwrap();
            // 1/(r sqrt(R)) = sqrt(R)/(r R)
            let denom = r.mul(&class.squared_value());
            return Ok(Scalar::single(class.clone(), denom.inv().unwrap()));
        }
        // Multiply by the conjugate along some active axis; the product is
        // even in that axis, so recursion strictly shrinks the axis support.
        let axis = self
            .terms
            .keys()
            .find_map(|c| c.first_axis())
            .expect("multi-term scalar must carry a radical axis");
        let sig = self.conj_axis(axis);
        let prod = self.mul(&sig);
        assert!(
            !prod.is_zero(),
            "radical independence violated: x * conj(x) = 0 for nonzero x"
        );
        debug_assert!(prod.terms.keys().all(|c| !c.has_axis(axis)));
        Ok(sig.mul(&prod.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Canonical square root.
    ///
    /// Defined for single-term scalars with no radical flags whose rational
    /// part factors as rational-square times t-power times cyclotomic values
    /// Phi_d(t^-2); the root is returned with each radical generator split
    /// off factor-wise.  Other inputs are rejected.
    pub fn sqrt(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if self.terms.len() != 1 {
            return Err(Error::SqrtNotRepresentable(
                "sum of several radical terms".into(),
            ));
        }
        let (class, rf) = self.terms.iter().next().unwrap();
        if !class.is_empty() {
            return Err(Error::SqrtNotRepresentable("nested radical".into()));
        }
        sqrt_ratfunc(rf)
    }
}

/// Factor a polynomial in t as constant * prod_d (t^(2 phi(d)) Phi_d(t^-2))^e_d.
fn cyclo_factor(p: &Poly) -> Result<(Gauss, BTreeMap<u32, i64>)> {
    let mut p = p.clone();
    let mut exps: BTreeMap<u32, i64> = BTreeMap::new();
    let orig_deg = p.deg().expect("zero polynomial has no cyclotomic factorization");
    let dmax = 3 * orig_deg as u32 + 8;
    for d in 1..=dmax {
        if 2 * totient(d) as usize > p.deg().unwrap_or(0) {
            continue;
        }
        let g = phi_poly_in_t(d);
        loop {
            let (q, r) = p.div_rem(&g);
            if r.is_zero() {
                *exps.entry(d).or_insert(0) += 1;
                p = q;
            } else {
                break;
            }
        }
    }
    if p.deg() != Some(0) {
        return Err(Error::SqrtNotRepresentable(format!(
            "non-cyclotomic factor of degree {}",
            p.deg().unwrap_or(0)
        )));
    }
    Ok((p.coeff(0), exps))
}

fn sqrt_ratfunc(rf: &RatFunc) -> Result<Scalar> {
    let (cn, en) = cyclo_factor(rf.num())?;
    let (cd, ed) = cyclo_factor(rf.den())?;
    let c = &cn * &cd.inv().unwrap();
    if !c.is_real() {
        return Err(Error::SqrtNotRepresentable(format!(
            "non-real constant content {}",
            c
        )));
    }
    let mut shift_eff = rf.shift();
    let mut g_exp: BTreeMap<u32, i64> = BTreeMap::new();
    for (d, e) in &en {
        *g_exp.entry(*d).or_insert(0) += e;
    }
    for (d, e) in &ed {
        *g_exp.entry(*d).or_insert(0) -= e;
    }
    for (d, e) in &g_exp {
        shift_eff += 2 * totient(*d) as i64 * e;
    }
    // Rational content: sign -> i, magnitude must be a perfect square.
    let r = c.re;
    let negative = r.is_negative();
    let mag = r.abs();
    let (pn, pd) = (mag.numer().clone(), mag.denom().clone());
    let sn = pn.sqrt();
    let sd = pd.sqrt();
    if &sn * &sn != pn || &sd * &sd != pd {
        return Err(Error::SqrtNotRepresentable(format!(
            "rational content {} is not a perfect square",
            mag
        )));
    }
    let root = num::BigRational::new(sn, sd);
    let mut coeff = Gauss::from_rational(root);
    if negative {
        coeff = &coeff * &Gauss::i();
    }
    let mut base = RatFunc::from_gauss(coeff).mul(&RatFunc::t_pow(shift_eff.div_euclid(2)));
    let mut class = RadicalClass {
        t_half: shift_eff.rem_euclid(2) == 1,
        phi: BTreeSet::new(),
    };
    for (d, e) in &g_exp {
        let half = e.div_euclid(2);
        if half != 0 {
            base = base.mul(&phi_at_inv_t2(*d).pow(half).unwrap());
        }
        if e.rem_euclid(2) == 1 {
            class.phi.insert(*d);
        }
    }
    Ok(Scalar::single(class, base))
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn radical_suffix(class: &RadicalClass) -> Vec<String> {
    let mut out = Vec::new();
    if class.t_half {
        out.push("t^(1/2)".to_string());
    }
    for d in &class.phi {
        out.push(format!("phi{}^(1/2)", d));
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (class, rf) in &self.terms {
            let rads = radical_suffix(class);
            let rf_str = rf.to_string();
            let mut piece = if rads.is_empty() {
                rf_str
            } else {
                let single_monomial = rf.is_laurent() && rf.num_terms().len() == 1;
                let head = if rf.is_one() {
                    None
                } else if rf == &RatFunc::from_int(-1) {
                    Some("-".to_string())
                } else if single_monomial || rf_str.starts_with('(') {
                    Some(format!("{}*", rf_str))
                } else {
                    Some(format!("({})*", rf_str))
                };
                match head {
                    None => rads.join("*"),
                    Some(h) if h == "-" => format!("-{}", rads.join("*")),
                    Some(h) => format!("{}{}", h, rads.join("*")),
                }
            };
            if first {
                first = false;
            } else if let Some(rest) = piece.strip_prefix('-') {
                piece = format!(" - {}", rest);
                write!(f, "{}", piece)?;
                continue;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", piece)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
