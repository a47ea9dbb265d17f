//! Arbitrary-precision rational scalars.
//!
//! [`Rat`] wraps `num_rational::BigRational` and fixes the external text
//! form used everywhere in this crate: `"p/q"` with `q > 0` and
//! `gcd(p, q) = 1`, or just `"p"` when the value is an integer.  Serde
//! serialization uses that string form, never floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number with canonical reduced representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`.  Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Integer value, if the denominator is 1.
    pub fn to_bigint(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.0.numer().clone())
        } else {
            None
        }
    }

    /// Integer value as `i64`, if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        self.to_bigint().and_then(|n| i64::try_from(n).ok())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().numer().clone()
    }

    pub fn pow(&self, exp: i32) -> Self {
        if exp == 0 {
            return Rat::one();
        }
        assert!(!self.is_zero() || exp > 0, "zero to a negative power");
        Rat(num_traits::Pow::pow(&self.0, exp))
    }

    /// Largest positive rational `g` with `a, b` both integer multiples of
    /// `g`.  `gcd(0, b) = |b|`; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Rat, b: &Rat) -> Rat {
        if a.is_zero() {
            return b.abs();
        }
        if b.is_zero() {
            return a.abs();
        }
        let num = (a.numer() * b.denom()).gcd(&(b.numer() * a.denom()));
        Rat(BigRational::new(num, a.denom() * b.denom()))
    }

    /// Remainder of `self` modulo a positive rational `modulus`, normalized
    /// into `[0, modulus)`.
    pub fn rem_euclid(&self, modulus: &Rat) -> Rat {
        assert!(modulus.is_positive(), "modulus must be positive");
        let q = (self / modulus).floor();
        self - &(modulus * &Rat::from_bigint(q))
    }
}

// ---- Arithmetic ----

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div<&Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        &self / rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

// ---- Text form ----

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRatError {
    pub input: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRatError {
            input: s.to_owned(),
        };
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num: BigInt = num_str.parse().map_err(|_| bad())?;
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: ParseRatError| D::Error::custom(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-1", "3/2", "-7/3", "12345678901234567890/7"] {
            assert_eq!(r(s).to_string(), s);
        }
        assert_eq!(r("4/6").to_string(), "2/3");
        assert_eq!(r("-4/-6").to_string(), "2/3");
        assert_eq!(r("5/-10").to_string(), "-1/2");
        assert_eq!(r(" 3 / 4 ").to_string(), "3/4");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "a", "1/0", "1/2/3", "1.5", "--3"] {
            assert!(s.parse::<Rat>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
        assert_eq!(r("1/2") - r("1/3"), r("1/6"));
        assert_eq!(r("2/3") * r("9/4"), r("3/2"));
        assert_eq!(r("2/3") / r("4/3"), r("1/2"));
        assert_eq!(-r("2/3"), r("-2/3"));
        assert_eq!(r("-5/2").abs(), r("5/2"));
        assert_eq!(r("2/3").recip(), r("3/2"));
        assert_eq!(r("-3/2").pow(2), r("9/4"));
        assert_eq!(r("2").pow(-2), r("1/4"));
    }

    #[test]
    fn gcd_of_rationals() {
        assert_eq!(Rat::gcd(&r("1/2"), &r("1/3")), r("1/6"));
        assert_eq!(Rat::gcd(&r("-1"), &r("2")), r("1"));
        assert_eq!(Rat::gcd(&r("-3"), &r("2")), r("1"));
        assert_eq!(Rat::gcd(&r("4"), &r("6")), r("2"));
        assert_eq!(Rat::gcd(&r("0"), &r("-5/3")), r("5/3"));
        assert_eq!(Rat::gcd(&r("0"), &r("0")), r("0"));
        assert_eq!(Rat::gcd(&r("3/4"), &r("1/2")), r("1/4"));
    }

    #[test]
    fn rem_euclid_lands_in_window() {
        assert_eq!(r("7/2").rem_euclid(&r("1")), r("1/2"));
        assert_eq!(r("-7/2").rem_euclid(&r("1")), r("1/2"));
        assert_eq!(r("-1/6").rem_euclid(&r("1/2")), r("1/3"));
        assert_eq!(r("5").rem_euclid(&r("5/2")), r("0"));
    }

    #[test]
    fn floor_matches_integer_division() {
        assert_eq!(r("7/2").floor(), BigInt::from(3));
        assert_eq!(r("-7/2").floor(), BigInt::from(-4));
        assert_eq!(r("4").floor(), BigInt::from(4));
    }

    #[test]
    fn serde_uses_strings() {
        let v: Vec<Rat> = vec![r("1/2"), r("-3")];
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"["1/2","-3"]"#);
        let back: Vec<Rat> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Rat>("0.5").is_err());
    }
}
