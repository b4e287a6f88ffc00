//! Polynomials and fractions in three opaque symbols over the scalar field.
//!
//! The symbols (displayed alpha, beta, gamma) are adjoined transcendentals:
//! no relations beyond commuting with everything. `SymPoly` is kept in
//! canonical form (sorted exponent keys, no zero coefficients), so equality
//! is structural. `SymRat` is a lazy fraction: no gcd reduction, equality by
//! cross-multiplication. Sizes stay tiny (3x3 determinants), so laziness
//! never hurts.

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 3;
const NAMES: [&str; NVARS] = ["alpha", "beta", "gamma"];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SymPoly {
    terms: BTreeMap<[u32; NVARS], Scalar>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = SymPoly::default();
        if !c.is_zero() {
            p.terms.insert([0; NVARS], c);
        }
        p
    }

    pub fn one() -> Self {
        SymPoly::constant(Scalar::one())
    }

    pub fn var(idx: usize) -> Self {
        assert!(idx < NVARS);
        let mut key = [0; NVARS];
        key[idx] = 1;
        let mut p = SymPoly::default();
        p.terms.insert(key, Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| *k == [0; NVARS])
    }

    fn insert(&mut self, key: [u32; NVARS], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = SymPoly::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let key = [k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]];
                out.insert(key, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = SymPoly::default();
        for (k, v) in &self.terms {
            out.insert(*k, v.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SymPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, vals: [&Scalar; NVARS]) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(vals[idx]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; NVARS], &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (idx, &e) in k.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", NAMES[idx])?,
                    _ => write!(f, "*{}^{}", NAMES[idx], e)?,
                }
            }
        }
        Ok(())
    }
}

/// Fraction of two `SymPoly`s with nonzero denominator.
#[derive(Debug, Clone)]
pub struct SymRat {
    num: SymPoly,
    den: SymPoly,
}

impl SymRat {
    pub fn new(num: SymPoly, den: SymPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SymRat { num, den })
    }

    pub fn from_poly(p: SymPoly) -> Self {
        SymRat {
            num: p,
            den: SymPoly::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        SymRat::from_poly(SymPoly::constant(c))
    }

    pub fn var(idx: usize) -> Self {
        SymRat::from_poly(SymPoly::var(idx))
    }

    pub fn num(&self) -> &SymPoly {
        &self.num
    }

    pub fn den(&self) -> &SymPoly {
        &self.den
    }

    /// Equality in the fraction field: cross-multiplication.
    pub fn eq_rat(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    pub fn eval(&self, vals: [&Scalar; NVARS]) -> Result<Scalar> {
        let d = self.den.eval(vals);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(vals).mul(&d.inv()?))
    }
}

impl fmt::Display for SymRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == SymPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl Field for SymRat {
    fn zero() -> Self {
        SymRat::from_poly(SymPoly::zero())
    }
    fn one() -> Self {
        SymRat::from_poly(SymPoly::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        SymRat {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        SymRat {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        }
    }
    fn neg(&self) -> Self {
        SymRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SymRat {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
