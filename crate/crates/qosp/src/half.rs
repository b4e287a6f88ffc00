//! Half-integers, stored as twice their value.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    pub fn from_twice(n: i64) -> Self {
        Half(n)
    }

    pub fn from_int(n: i64) -> Self {
        Half(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, when it is one.
    pub fn integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Indices m with |m| <= l and l - m an integer, ascending.
    pub fn range_sym(l: Half) -> Vec<Half> {
        let mut v = Vec::new();
        let mut m = -l.0;
        while m <= l.0 {
            v.push(Half(m));
            m += 2;
        }
        v
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |txt: &str| -> Result<i64> {
            txt.parse().map_err(|_| Error::InvalidArgument(format!("not a half-integer: {:?}", s)))
        };
        if let Some((n, d)) = s.split_once('/') {
            if d.trim() != "2" {
                return Err(Error::InvalidArgument(format!(
                    "half-integer denominator must be 2: {:?}",
                    s
                )));
            }
            Ok(Half(parse_int(n.trim())?))
        } else {
            Ok(Half::from_int(parse_int(s)?))
        }
    }
}
