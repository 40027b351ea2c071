use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational in lowest terms with a positive denominator.
///
/// Serialized as the string `"num/den"` (or `"num"` when the denominator is 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    /// `numer / denom` for unsigned counts.
    pub fn ratio(numer: &BigUint, denom: &BigUint) -> Result<Self> {
        Self::new(BigInt::from(numer.clone()), BigInt::from(denom.clone()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(ExactRational(self.0.recip()))
    }

    /// Decimal rendering truncated toward zero after `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.0.is_negative();
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();
        let (int, mut rem) = num.div_rem(&den);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&int.to_string());
        if digits > 0 {
            out.push('.');
            let ten = BigInt::from(10);
            for _ in 0..digits {
                rem *= &ten;
                let (d, r) = rem.div_rem(&den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str, position: usize| {
            t.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                position,
                message: format!("expected an integer, found {t:?}"),
            })
        };
        match s.split_once('/') {
            Some((n, d)) => ExactRational::new(parse(n, 0)?, parse(d, n.len() + 1)?),
            None => Ok(ExactRational::from_integer(parse(s, 0)?)),
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_renders() {
        let r = ExactRational::new(22, 36).unwrap();
        assert_eq!(r.to_string(), "11/18");
        assert_eq!(ExactRational::new(4, 2).unwrap().to_string(), "2");
        assert_eq!(ExactRational::new(1, -2).unwrap().to_string(), "-1/2");
        assert!(ExactRational::new(1, 0).is_err());
    }

    #[test]
    fn decimal_rendering() {
        let r: ExactRational = "11/18".parse().unwrap();
        assert_eq!(r.to_decimal(5), "0.61111");
        assert_eq!("-9/4".parse::<ExactRational>().unwrap().to_decimal(3), "-2.250");
        assert_eq!("3".parse::<ExactRational>().unwrap().to_decimal(0), "3");
    }

    #[test]
    fn serde_as_string() {
        let r: ExactRational = "9/4".parse().unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"9/4\"");
        let back: ExactRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
