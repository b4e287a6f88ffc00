//! High-precision complex evaluation of scalars at a numeric q.
//!
//! Values are complex numbers in fixed-point form: integer real and
//! imaginary parts at a shared power-of-two scale.  The context fixes
//! t = i sqrt(q) (principal branch) and evaluates each radical generator
//! once, so evaluation is a homomorphism on canonical scalars.

use super::{RadicalClass, RatFunc, Scalar};
use num::BigRational;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

/// Complex number with both parts scaled by 2^scale.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
}

impl FixedComplex {
    pub fn zero() -> Self {
        FixedComplex {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// Round-to-nearest integer division.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    assert!(!d.is_zero(), "numeric division by zero");
    let (q, r) = num_integer::Integer::div_rem(n, d);
    let r2: BigInt = &r * 2;
    if r2.magnitude() >= d.magnitude() {
        let bump = if (n.sign() == Sign::Minus) ^ (d.sign() == Sign::Minus) {
            -1
        } else {
            1
        };
        q + bump
    } else {
        q
    }
}

/// Integer square root rounding down; exact for perfect squares.
fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

/// Evaluation context at a fixed numeric q.
pub struct NumericContext {
    pub scale: u32,
    pub precision_bits: u32,
    one: BigInt,
    t: FixedComplex,
    sqrt_t: FixedComplex,
    phi_cache: RefCell<HashMap<u32, FixedComplex>>,
    sqrt_phi_cache: RefCell<HashMap<u32, FixedComplex>>,
}

impl NumericContext {
    /// Context at q = q_re + i q_im with the given working precision.
    pub fn new(q_re: &BigRational, q_im: &BigRational, precision_bits: u32) -> Self {
        let scale = precision_bits + 64;
        let one = BigInt::from(1) << scale;
        let mut ctx = NumericContext {
            scale,
            precision_bits,
            one: one.clone(),
            t: FixedComplex::zero(),
            sqrt_t: FixedComplex::zero(),
            phi_cache: RefCell::new(HashMap::new()),
            sqrt_phi_cache: RefCell::new(HashMap::new()),
        };
        let q = FixedComplex {
            re: ctx.from_rational(q_re),
            im: ctx.from_rational(q_im),
        };
        assert!(!q.is_zero(), "q must be nonzero");
        let sq = ctx.sqrt(&q);
        // t = i sqrt(q)
        ctx.t = FixedComplex {
            re: -sq.im.clone(),
            im: sq.re.clone(),
        };
        ctx.sqrt_t = ctx.sqrt(&ctx.t.clone());
        ctx
    }

    pub fn from_rational(&self, r: &BigRational) -> BigInt {
        div_round(&(r.numer() << self.scale), r.denom())
    }

    pub fn real(&self, r: &BigRational) -> FixedComplex {
        FixedComplex {
            re: self.from_rational(r),
            im: BigInt::zero(),
        }
    }

    pub fn add(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        FixedComplex {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    pub fn sub(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        FixedComplex {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    pub fn mul(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        let half = BigInt::from(1) << (self.scale - 1);
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        FixedComplex {
            re: (re + &half) >> self.scale,
            im: (im + &half) >> self.scale,
        }
    }

    pub fn div(&self, a: &FixedComplex, b: &FixedComplex) -> FixedComplex {
        assert!(!b.is_zero(), "numeric division by zero");
        let den = &b.re * &b.re + &b.im * &b.im; // scale 2S
        let re = (&a.re * &b.re + &a.im * &b.im) << self.scale;
        let im = (&a.im * &b.re - &a.re * &b.im) << self.scale;
        FixedComplex {
            re: div_round(&re, &den),
            im: div_round(&im, &den),
        }
    }

    pub fn pow(&self, a: &FixedComplex, k: i64) -> FixedComplex {
        let base = if k < 0 {
            self.div(
                &FixedComplex {
                    re: self.one.clone(),
                    im: BigInt::zero(),
                },
                a,
            )
        } else {
            a.clone()
        };
        let mut acc = FixedComplex {
            re: self.one.clone(),
            im: BigInt::zero(),
        };
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// |z| at the working scale.
    fn abs(&self, z: &FixedComplex) -> BigInt {
        isqrt(&(&z.re * &z.re + &z.im * &z.im))
    }

    /// Principal square root: nonnegative real part; for negative reals,
    /// the root with positive imaginary part.
    pub fn sqrt(&self, z: &FixedComplex) -> FixedComplex {
        if z.is_zero() {
            return FixedComplex::zero();
        }
        let r = self.abs(z); // scale S
        let two = BigInt::from(2);
        let hre: BigInt = (&r + &z.re) << self.scale; // scale 2S
        let hre = div_round(&hre, &two);
        let wre = isqrt(&hre.max(BigInt::zero()));
        let him: BigInt = (&r - &z.re) << self.scale;
        let him = div_round(&him, &two);
        let wim_mag = isqrt(&him.max(BigInt::zero()));
        let wim = if z.im.is_negative() { -wim_mag } else { wim_mag };
        FixedComplex { re: wre, im: wim }
    }

    fn t_pow(&self, k: i64) -> FixedComplex {
        self.pow(&self.t, k)
    }

    fn phi_value(&self, d: u32) -> FixedComplex {
        if let Some(v) = self.phi_cache.borrow().get(&d) {
            return v.clone();
        }
        let u = self.t_pow(-2);
        let p = super::cyclotomic::cyclotomic_poly(d);
        let mut acc = FixedComplex::zero();
        for g in p.c.iter().rev() {
            acc = self.add(&self.mul(&acc, &u), &self.gauss(g));
        }
        self.phi_cache.borrow_mut().insert(d, acc.clone());
        acc
    }

    fn sqrt_phi_value(&self, d: u32) -> FixedComplex {
        if let Some(v) = self.sqrt_phi_cache.borrow().get(&d) {
            return v.clone();
        }
        let v = self.sqrt(&self.phi_value(d));
        self.sqrt_phi_cache.borrow_mut().insert(d, v.clone());
        v
    }

    pub fn gauss(&self, g: &super::Gauss) -> FixedComplex {
        FixedComplex {
            re: self.from_rational(&g.re),
            im: self.from_rational(&g.im),
        }
    }

    fn eval_ratfunc(&self, rf: &RatFunc) -> FixedComplex {
        if rf.is_zero() {
            return FixedComplex::zero();
        }
        let mut num = FixedComplex::zero();
        for (j, g) in rf.num_terms() {
            num = self.add(&num, &self.mul(&self.gauss(&g), &self.t_pow(j)));
        }
        if rf.is_laurent() {
            return num;
        }
        let mut den = FixedComplex::zero();
        for (j, g) in rf.den_terms() {
            den = self.add(&den, &self.mul(&self.gauss(&g), &self.t_pow(j)));
        }
        self.div(&num, &den)
    }

    fn eval_class(&self, class: &RadicalClass) -> FixedComplex {
        let mut acc = FixedComplex {
            re: self.one.clone(),
            im: BigInt::zero(),
        };
        if class.t_half {
            acc = self.mul(&acc, &self.sqrt_t);
        }
        for &d in &class.phi {
            acc = self.mul(&acc, &self.sqrt_phi_value(d));
        }
        acc
    }

    /// Evaluate a canonical scalar.  Radical generators are evaluated
    /// factor-wise from their cached principal roots, so the map is
    /// multiplicative on the whole field.
    pub fn eval(&self, s: &Scalar) -> FixedComplex {
        let mut acc = FixedComplex::zero();
        for (class, rf) in s.terms() {
            acc = self.add(&acc, &self.mul(&self.eval_ratfunc(rf), &self.eval_class(class)));
        }
        acc
    }

    /// Relative residual |a - b| / max(1, |a|, |b|) as a comparison against
    /// a decimal threshold 10^-digits, plus an approximate f64 for reports.
    pub fn residual(&self, a: &FixedComplex, b: &FixedComplex) -> Residual {
        let d = self.sub(a, b);
        let d2 = &d.re * &d.re + &d.im * &d.im;
        let a2 = &a.re * &a.re + &a.im * &a.im;
        let b2 = &b.re * &b.re + &b.im * &b.im;
        let one2 = &self.one * &self.one;
        let m2 = a2.max(b2).max(one2);
        Residual { d2, m2 }
    }

    pub fn check(&self, a: &FixedComplex, b: &FixedComplex, digits: u32) -> bool {
        self.residual(a, b).below_decimal(digits)
    }
}

/// Squared residual data: |a-b|^2 and the squared normalizer.
pub struct Residual {
    d2: BigInt,
    m2: BigInt,
}

impl Residual {
    /// True when |a-b|/max(1,|a|,|b|) < 10^-digits.
    pub fn below_decimal(&self, digits: u32) -> bool {
        let bound = BigInt::from(10).pow(2 * digits);
        &self.d2 * bound < self.m2
    }

    /// Approximate value for reporting.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.d2.is_zero() {
            return 0.0;
        }
        let scaled: BigInt = (&self.d2 << 512) / &self.m2;
        let f = scaled.to_f64().unwrap_or(f64::MAX);
        (f * 2f64.powi(-512)).sqrt()
    }
}

impl fmt::Display for FixedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fixed({}, {})", self.re, self.im)
    }
}

/// The two standard evaluation contexts used by the verification suites.
pub fn default_contexts() -> Vec<NumericContext> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let zero = BigRational::zero();
    let re = BigRational::new(BigInt::from(3), BigInt::from(10));
    let im = BigRational::new(BigInt::from(1), BigInt::from(10));
    vec![
        NumericContext::new(&half, &zero, 256),
        NumericContext::new(&re, &im, 256),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn ctx_real_half() -> NumericContext {
        NumericContext::new(
            &BigRational::new(BigInt::from(1), BigInt::from(2)),
            &BigRational::zero(),
            256,
        )
    }

    #[test]
    fn t_squared_is_minus_q() {
        let ctx = ctx_real_half();
        let t2 = ctx.eval(&Scalar::t_pow(2));
        let minus_q = ctx.real(&BigRational::new(BigInt::from(-1), BigInt::from(2)));
        assert!(ctx.check(&t2, &minus_q, 60));
    }

    #[test]
    fn homomorphism_spot() {
        for ctx in default_contexts() {
            let x = Scalar::sqrt_phi(1)
                .mul(&Scalar::sqrt_t())
                .add(&Scalar::q_pow(2));
            let y = Scalar::sqrt_phi(2).sub(&Scalar::t_pow(-3));
            let lhs = ctx.eval(&x.mul(&y));
            let rhs = ctx.mul(&ctx.eval(&x), &ctx.eval(&y));
            assert!(ctx.check(&lhs, &rhs, 60));
            // inverse evaluates to reciprocal
            let xi = x.inv().unwrap();
            let prod = ctx.mul(&ctx.eval(&xi), &ctx.eval(&x));
            let one = ctx.real(&BigRational::from_integer(BigInt::from(1)));
            assert!(ctx.check(&prod, &one, 60));
        }
    }

    #[test]
    fn sqrt_square_recovers_value() {
        for ctx in default_contexts() {
            // the canonical root squares back to the value numerically
            let v = Scalar::one_minus_u_pow(3);
            let r = v.sqrt().unwrap();
            let lhs = ctx.mul(&ctx.eval(&r), &ctx.eval(&r));
            let rhs = ctx.eval(&v);
            assert!(ctx.check(&lhs, &rhs, 60));
        }
    }

    #[test]
    fn division_rounding() {
        let n = BigInt::from(7);
        let d = BigInt::from(2);
        assert_eq!(div_round(&n, &d), BigInt::from(4));
        assert_eq!(div_round(&-n.clone(), &d), BigInt::from(-4));
        assert_eq!(div_round(&BigInt::from(5), &BigInt::from(3)), BigInt::from(2));
        assert_eq!(div_round(&BigInt::from(-5), &BigInt::from(3)), BigInt::from(-2));
    }

    #[test]
    fn principal_sqrt() {
        let ctx = ctx_real_half();
        // sqrt(-4) = 2i
        let m4 = ctx.real(&BigRational::from_integer(BigInt::from(-4)));
        let r = ctx.sqrt(&m4);
        let two_i = FixedComplex {
            re: BigInt::zero(),
            im: BigInt::from(2) << ctx.scale,
        };
        assert!(ctx.check(&r, &two_i, 60));
        // sqrt(i) has positive real and imaginary parts
        let i = FixedComplex {
            re: BigInt::zero(),
            im: BigInt::from(1) << ctx.scale,
        };
        let ri = ctx.sqrt(&i);
        assert!(ri.re > BigInt::zero() && ri.im > BigInt::zero());
        let sq = ctx.mul(&ri, &ri);
        assert!(ctx.check(&sq, &i, 60));
    }
}
