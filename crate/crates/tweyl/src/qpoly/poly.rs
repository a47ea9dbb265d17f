//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial is the empty vector.  Every operation
//! re-establishes that canonical form, so `==` is semantic equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::rat::Rat;

/// Polynomial in one variable with `Rat` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    // ---- Constructors ----

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// `c * u^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Coefficients in ascending degree order.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        Poly { coeffs }.normalized()
    }

    /// `u - root`.
    pub fn monic_linear(root: &Rat) -> Self {
        Poly {
            coeffs: vec![-root, Rat::one()],
        }
    }

    /// `scale * prod (u - root_i)^(mult_i)`.
    pub fn from_roots(roots: &[(Rat, u32)], scale: &Rat) -> Self {
        let mut p = Poly::constant(scale.clone());
        for (root, mult) in roots {
            let lin = Poly::monic_linear(root);
            for _ in 0..*mult {
                p = &p * &lin;
            }
        }
        p
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    // ---- Inspection ----

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `u^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient.  Panics on the zero polynomial.
    pub fn leading_coeff(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rat::is_one)
    }

    // ---- Arithmetic ----

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// `p(u + c)`.
    pub fn shift(&self, c: &Rat) -> Poly {
        if c.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len();
        for k in 0..n {
            for i in (k..n - 1).rev() {
                let t = &a[i + 1] * c;
                a[i] += &t;
            }
        }
        Poly { coeffs: a }
    }

    /// Quotient and remainder with `deg r < deg rhs`.  Panics if `rhs` is
    /// zero.
    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let drhs = rhs.degree().unwrap();
        let Some(dlhs) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if dlhs < drhs {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = rhs.leading_coeff().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); dlhs - drhs + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + drhs] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, rc) in rhs.coeffs.iter().enumerate() {
                let t = rc * &q;
                rem[k + i] -= &t;
            }
            quot[k] = q;
        }
        (
            Poly { coeffs: quot }.normalized(),
            Poly { coeffs: rem }.normalized(),
        )
    }

    /// Exact quotient.  Panics if the division leaves a remainder.
    pub fn div_exact(&self, rhs: &Poly) -> Poly {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (`gcd(0, 0) = 0`).
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Multiplicity of `root` as a zero of `self` (zero if not a root).
    /// Panics on the zero polynomial.
    pub fn root_multiplicity(&self, root: &Rat) -> u32 {
        assert!(!self.is_zero(), "root multiplicity in zero polynomial");
        let lin = Poly::monic_linear(root);
        let mut p = self.clone();
        let mut mult = 0;
        while p.eval(root).is_zero() {
            p = p.div_exact(&lin);
            mult += 1;
        }
        mult
    }

    /// Render with the given variable name, descending powers.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if mag.is_one() && k > 0 {
                String::new()
            } else if mag.is_integer() || k == 0 {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            out.push_str(&coeff_part);
            if k > 0 {
                if !coeff_part.is_empty() {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

// ---- Operator impls ----

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly { coeffs }.normalized()
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        Poly { coeffs }.normalized()
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Poly> for Poly {
    fn mul_assign(&mut self, rhs: &Poly) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("u"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn p(coeffs: &[&str]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|s| r(s)).collect())
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert!(p(&["0", "0"]).is_zero());
        assert_eq!(p(&["1", "2", "0"]).degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn ring_operations() {
        let a = p(&["1", "1"]);
        let b = p(&["-1", "1"]);
        assert_eq!(&a * &b, p(&["-1", "0", "1"]));
        assert_eq!(&a + &b, p(&["0", "2"]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), p(&["1", "3", "3", "1"]));
    }

    #[test]
    fn divrem_invariant() {
        let a = p(&["3", "-1", "0", "2", "5"]);
        let b = p(&["1", "2", "1"]);
        let (q, rem) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &rem, a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_common_divisor() {
        let common = p(&["-1", "1"]);
        let a = &common * &p(&["2", "2"]);
        let b = &common * &p(&["3", "0", "3"]);
        let g = a.gcd(&b);
        assert_eq!(g, common);
        assert!(a.divrem(&g).1.is_zero());
        assert!(b.divrem(&g).1.is_zero());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Poly::zero());
        assert_eq!(Poly::zero().gcd(&a), a.monic());
    }

    #[test]
    fn shift_is_substitution() {
        let a = p(&["2", "-3", "1"]);
        let c = r("5/2");
        let shifted = a.shift(&c);
        for t in ["-2", "0", "1/3", "7"] {
            let t = r(t);
            assert_eq!(shifted.eval(&t), a.eval(&(&t + &c)));
        }
        assert_eq!(a.shift(&r("0")), a);
        assert_eq!(a.shift(&c).shift(&-&c), a);
    }

    #[test]
    fn from_roots_and_multiplicity() {
        let q = Poly::from_roots(&[(r("1/2"), 2), (r("-3"), 1)], &r("4"));
        assert_eq!(q.degree(), Some(3));
        assert_eq!(q.root_multiplicity(&r("1/2")), 2);
        assert_eq!(q.root_multiplicity(&r("-3")), 1);
        assert_eq!(q.root_multiplicity(&r("7")), 0);
        assert!(q.eval(&r("1/2")).is_zero());
        assert_eq!(q.leading_coeff(), &r("4"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&["0"]).to_string(), "0");
        assert_eq!(p(&["-1", "0", "1"]).to_string(), "u^2 - 1");
        assert_eq!(p(&["1/2", "-1"]).to_string(), "-u + 1/2");
        assert_eq!(p(&["0", "3/2"]).to_string(), "(3/2)*u");
        assert_eq!(p(&["2", "0", "0", "-4"]).display_with("H"), "-4*H^3 + 2");
    }
}
