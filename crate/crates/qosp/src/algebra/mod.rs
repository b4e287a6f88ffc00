//! Super-algebra elements as exact linear combinations of normal monomials.
//!
//! Each algebra supplies a monomial type with a Z/2 parity and a structured
//! product that rewrites any monomial pair into normal form.  Elements,
//! tensor squares, and higher tensor powers all share one generic container;
//! the tensor product multiplies with the Koszul sign rule.

pub mod a;
pub mod tensor;
pub mod u;

pub use a::AMono;
pub use tensor::TMono;
pub use u::UMono;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Normal monomial of a graded algebra.
pub trait Mono: Ord + Eq + Clone + fmt::Display + fmt::Debug {
    fn parity(&self) -> u8;
    fn unit() -> Self;
    fn is_unit(&self) -> bool {
        *self == Self::unit()
    }
}

/// Monomial with a structured product into normal form.
pub trait MonoMul: Mono {
    fn mul_mono(x: &Self, y: &Self) -> FreeElement<Self>
    where
        Self: Sized;
}

/// Finite linear combination of normal monomials with scalar coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement<M: Mono> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Mono> Default for FreeElement<M> {
    fn default() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Mono> FreeElement<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_mono(M::unit())
    }

    pub fn from_mono(m: M) -> Self {
        Self::from_mono_scaled(m, Scalar::one())
    }

    pub fn from_mono_scaled(m: M, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Scalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(s));
        }
        out
    }

    /// Parity of a homogeneous element; zero counts as even.
    pub fn parity(&self) -> Result<u8> {
        let mut p = None;
        for m in self.terms.keys() {
            match p {
                None => p = Some(m.parity()),
                Some(q) if q == m.parity() => {}
                _ => {
                    return Err(Error::MixedParity(format!("{}", self)))
                }
            }
        }
        Ok(p.unwrap_or(0))
    }

    /// The two parity-homogeneous components (even, odd).
    pub fn parity_split(&self) -> (Self, Self) {
        let mut even = Self::zero();
        let mut odd = Self::zero();
        for (m, c) in &self.terms {
            if m.parity() == 0 {
                even.add_term(m.clone(), c.clone());
            } else {
                odd.add_term(m.clone(), c.clone());
            }
        }
        (even, odd)
    }
}

impl<M: MonoMul> FreeElement<M> {
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let prod = M::mul_mono(m1, m2);
                let c = c1.mul(c2);
                for (m, pc) in prod.terms {
                    out.add_term(m, pc.mul(&c));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<M: Mono> fmt::Display for FreeElement<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = c.to_string();
            let (sign, mag) = if let Some(rest) = cs.strip_prefix('-') {
                if rest.contains(" + ") || rest.contains(" - ") {
                    ("+", format!("({})", cs))
                } else {
                    ("-", rest.to_string())
                }
            } else if cs.contains(" + ") || cs.contains(" - ") {
                ("+", format!("({})", cs))
            } else {
                ("+", cs)
            };
            let needs_star = !m.is_unit();
            let body = if !needs_star {
                mag
            } else if mag == "1" {
                format!("{}", m)
            } else {
                // wrap composite coefficient factors like t^2*phi1^(1/2)
                let wrapped = if mag.contains('*') && !mag.starts_with('(') {
                    format!("({})", mag)
                } else {
                    mag
                };
                format!("{}*{}", wrapped, m)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

impl<M: Mono> fmt::Debug for FreeElement<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of the enveloping algebra.
pub type UElement = FreeElement<UMono>;
/// Element of the matrix quantum supergroup.
pub type AElement = FreeElement<AMono>;
/// Tensor square elements.
pub type UTensor = FreeElement<TMono<UMono, UMono>>;
pub type ATensor = FreeElement<TMono<AMono, AMono>>;
/// Left- and right-nested triple tensors, for coassociativity checks.
pub type UTensor3L = FreeElement<TMono<TMono<UMono, UMono>, UMono>>;
pub type UTensor3R = FreeElement<TMono<UMono, TMono<UMono, UMono>>>;
pub type ATensor3L = FreeElement<TMono<TMono<AMono, AMono>, AMono>>;
pub type ATensor3R = FreeElement<TMono<AMono, TMono<AMono, AMono>>>;
