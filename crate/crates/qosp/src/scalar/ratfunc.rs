//! Rational functions of t over Q(i), kept in a canonical factored form.

use super::gauss::Gauss;
use super::laurent::Poly;
use std::collections::BTreeMap;
use std::fmt;

/// t^shift * num(t) / den(t).
///
/// Canonical invariants: zero is (0, 0, 1); otherwise num(0) != 0, den(0) != 0,
/// den is monic, and gcd(num, den) = 1.  All t-power content lives in `shift`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut shift = shift;
        let mut num = num;
        let mut den = den;
        let zn = num.trailing_zeros();
        if zn > 0 {
            shift += zn as i64;
            num = num.shift_down(zn);
        }
        let zd = den.trailing_zeros();
        if zd > 0 {
            shift -= zd as i64;
            den = den.shift_down(zd);
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g);
            den = den.exact_div(&g);
        }
        let lead_inv = den.lead().inv().unwrap();
        den = den.scale(&lead_inv);
        num = num.scale(&lead_inv);
        RatFunc { shift, num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_gauss(Gauss::one())
    }

    pub fn from_gauss(g: Gauss) -> Self {
        RatFunc::new(0, Poly::constant(g), Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_gauss(Gauss::from_int(n))
    }

    pub fn t_pow(k: i64) -> Self {
        RatFunc::new(k, Poly::one(), Poly::one())
    }

    /// Sum of monomials c_j t^j.
    pub fn from_laurent(terms: &BTreeMap<i64, Gauss>) -> Self {
        let min = match terms.iter().find(|(_, g)| !g.is_zero()) {
            None => return RatFunc::zero(),
            Some((&j, _)) => j,
        };
        let max = *terms.keys().last().unwrap();
        let mut c = vec![Gauss::zero(); (max - min) as usize + 1];
        for (&j, g) in terms {
            c[(j - min) as usize] = g.clone();
        }
        RatFunc::new(min, Poly::from_coeffs(c), Poly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// True when the denominator is 1 (a Laurent polynomial in t).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Constant term as a Gaussian rational, if the value is one.
    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::zero());
        }
        if self.shift == 0 && self.num.deg() == Some(0) && self.den.is_one() {
            return Some(self.num.coeff(0));
        }
        None
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let base = self.shift.min(o.shift);
        let a = Poly::x_pow((self.shift - base) as usize).mul(&self.num).mul(&o.den);
        let b = Poly::x_pow((o.shift - base) as usize).mul(&o.num).mul(&self.den);
        RatFunc::new(base, a.add(&b), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(
            self.shift + o.shift,
            self.num.mul(&o.num),
            self.den.mul(&o.den),
        )
    }

    pub fn scale(&self, g: &Gauss) -> RatFunc {
        if g.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            shift: self.shift,
            num: self.num.scale(g),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn pow(&self, k: i64) -> Option<RatFunc> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Some(acc)
    }

    /// Numerator terms as (t-exponent, coefficient), shift folded in, ascending.
    pub fn num_terms(&self) -> Vec<(i64, Gauss)> {
        self.num
            .c
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(j, g)| (self.shift + j as i64, g.clone()))
            .collect()
    }

    /// Denominator terms as (t-exponent, coefficient), ascending from 0.
    pub fn den_terms(&self) -> Vec<(i64, Gauss)> {
        self.den
            .c
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(j, g)| (j as i64, g.clone()))
            .collect()
    }
}

fn fmt_laurent(terms: &[(i64, Gauss)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (j, g) in terms {
        let (sign, mag) = {
            let s = g.to_string();
            if let Some(rest) = s.strip_prefix('-') {
                if !s.contains(" + ") && !s.contains(" - ") {
                    ("-", rest.to_string())
                } else {
                    ("", format!("({})", s))
                }
            } else if s.contains(" + ") || s.contains(" - ") {
                ("", format!("({})", s))
            } else {
                ("", s)
            }
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
        let coeff_is_one = mag == "1";
        match (*j, coeff_is_one) {
            (0, _) => write!(f, "{}", mag)?,
            (1, true) => write!(f, "t")?,
            (1, false) => write!(f, "{}*t", mag)?,
            (j, true) => write!(f, "t^{}", j)?,
            (j, false) => write!(f, "{}*t^{}", mag, j)?,
        }
    }
    Ok(())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let nt = self.num_terms();
        if self.den.is_one() {
            if nt.len() == 1 {
                fmt_laurent(&nt, f)
            } else {
                fmt_laurent(&nt, f)
            }
        } else {
            if nt.len() == 1 {
                fmt_laurent(&nt, f)?;
            } else {
                write!(f, "(")?;
                fmt_laurent(&nt, f)?;
                write!(f, ")")?;
            }
            write!(f, "/(")?;
            fmt_laurent(&self.den_terms(), f)?;
            write!(f, ")")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
