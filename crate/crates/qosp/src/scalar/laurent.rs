//! Dense univariate polynomials over Q(i) with Euclidean division and gcd.

use super::gauss::Gauss;
use std::fmt;

/// Polynomial with coefficient of x^j at index j; trailing (highest) zeros trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub c: Vec<Gauss>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Gauss::one())
    }

    pub fn constant(g: Gauss) -> Self {
        Poly { c: vec![g] }.trimmed()
    }

    pub fn x_pow(n: usize) -> Self {
        let mut c = vec![Gauss::zero(); n + 1];
        c[n] = Gauss::one();
        Poly { c }
    }

    pub fn from_coeffs(c: Vec<Gauss>) -> Self {
        Poly { c }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.c.last().map_or(false, |g| g.is_zero()) {
            self.c.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Gauss {
        self.c.last().cloned().unwrap_or_else(Gauss::zero)
    }

    /// Number of leading zero coefficients at x^0 (the order of vanishing at 0).
    pub fn trailing_zeros(&self) -> usize {
        self.c.iter().take_while(|g| g.is_zero()).count()
    }

    /// Divide by x^k; requires the low k coefficients to vanish.
    pub fn shift_down(&self, k: usize) -> Poly {
        assert!(self.c.iter().take(k).all(|g| g.is_zero()));
        Poly {
            c: self.c.iter().skip(k).cloned().collect(),
        }
        .trimmed()
    }

    pub fn coeff(&self, j: usize) -> Gauss {
        self.c.get(j).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for j in 0..n {
            c.push(&self.coeff(j) + &o.coeff(j));
        }
        Poly { c }.trimmed()
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|g| -g).collect(),
        }
    }

    pub fn scale(&self, g: &Gauss) -> Poly {
        if g.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|x| x * g).collect(),
        }
        .trimmed()
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Gauss::zero(); self.c.len() + o.c.len() - 1];
        for (j, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                c[j + k] = &c[j + k] + &(x * y);
            }
        }
        Poly { c }.trimmed()
    }

    pub fn eval(&self, x: &Gauss) -> Gauss {
        let mut acc = Gauss::zero();
        for g in self.c.iter().rev() {
            acc = &(&acc * x) + g;
        }
        acc
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg().unwrap();
        let lead_inv = d.lead().inv().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![Gauss::zero(); self.c.len().saturating_sub(dd)];
        while let Some(rd) = rem.deg() {
            if rd < dd {
                break;
            }
            let q = &rem.lead() * &lead_inv;
            let pos = rd - dd;
            quo[pos] = q.clone();
            // rem -= q x^pos d
            let mut c = rem.c;
            for (j, g) in d.c.iter().enumerate() {
                c[pos + j] = &c[pos + j] - &(&q * g);
            }
            rem = Poly { c }.trimmed();
        }
        (Poly { c: quo }.trimmed(), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().inv().unwrap())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(j, g)| match j {
                0 => format!("({})", g),
                1 => format!("({})x", g),
                _ => format!("({})x^{}", g, j),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
