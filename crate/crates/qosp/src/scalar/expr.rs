//! Scalar expression trees and their canonical evaluation.

use super::Scalar;
use crate::error::{Error, Result};

/// Unevaluated scalar expression.  Exponents are half-integers stored as
/// twice their value, so t^(1/2) is Pow(T, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarExpr {
    Int(i64),
    Ratio(i64, i64),
    I,
    T,
    Q,
    Phi(u32),
    Neg(Box<ScalarExpr>),
    Add(Vec<ScalarExpr>),
    Mul(Vec<ScalarExpr>),
    /// base raised to twice_exp / 2.
    Pow(Box<ScalarExpr>, i64),
}

impl ScalarExpr {
    pub fn canonicalize(&self) -> Result<Scalar> {
        match self {
            ScalarExpr::Int(n) => Ok(Scalar::from_int(*n)),
            ScalarExpr::Ratio(n, d) => {
                if *d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::from_ratio(*n, *d))
            }
            ScalarExpr::I => Ok(Scalar::i()),
            ScalarExpr::T => Ok(Scalar::t_pow(1)),
            ScalarExpr::Q => Ok(Scalar::q_pow(1)),
            ScalarExpr::Phi(d) => {
                if *d == 0 {
                    return Err(Error::InvalidArgument("phi0 is not defined".into()));
                }
                Ok(Scalar::phi(*d))
            }
            ScalarExpr::Neg(x) => Ok(x.canonicalize()?.neg()),
            ScalarExpr::Add(xs) => {
                let mut acc = Scalar::zero();
                for x in xs {
                    acc = acc.add(&x.canonicalize()?);
                }
                Ok(acc)
            }
            ScalarExpr::Mul(xs) => {
                let mut acc = Scalar::one();
                for x in xs {
                    acc = acc.mul(&x.canonicalize()?);
                }
                Ok(acc)
            }
            ScalarExpr::Pow(base, twice) => {
                let b = base.canonicalize()?;
                if twice.rem_euclid(2) == 0 {
                    b.pow(twice / 2)
                } else {
                    // b^(k/2) = sqrt(b)^k
                    let r = b.sqrt()?;
                    r.pow(*twice)
                }
            }
        }
    }
}
