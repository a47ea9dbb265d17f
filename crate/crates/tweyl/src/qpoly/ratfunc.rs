//! Rational functions in one variable.
//!
//! Canonical form: the denominator is monic, coprime to the numerator,
//! and equal to 1 when the numerator is zero.  With that normalization,
//! `==` is semantic equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rat::Rat;
use super::QPolyError;

/// Quotient of two polynomials in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    // ---- Constructors ----

    /// `num / den`.  Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFunc { num, den }.normalized()
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    /// The variable itself.
    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lead = self.den.leading_coeff().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    // ---- Inspection ----

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Constant value, if the function is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_polynomial() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    // ---- Arithmetic ----

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of the zero function");
        RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalized()
    }

    pub fn pow(&self, exp: i64) -> RatFunc {
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `f(u + c)`.
    pub fn shift(&self, c: &Rat) -> RatFunc {
        RatFunc {
            num: self.num.shift(c),
            den: self.den.shift(c),
        }
    }

    /// Exact value at `at`; `None` at a pole of the reduced form.
    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(at) / d)
    }

    /// Order of vanishing at `at`: the multiplicity of `at` as a zero of
    /// the numerator minus its multiplicity in the denominator (negative
    /// at a pole).  Errors on the zero function.
    pub fn vanishing_order(&self, at: &Rat) -> Result<i64, QPolyError> {
        if self.is_zero() {
            return Err(QPolyError::ZeroFunction);
        }
        let up = self.num.root_multiplicity(at) as i64;
        let down = self.den.root_multiplicity(at) as i64;
        Ok(up - down)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.recip()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
