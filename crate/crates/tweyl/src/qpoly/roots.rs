//! Exact rational root extraction.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rat::Rat;
use super::{arith, QPolyError};

/// Divisor enumeration bound for root candidates.  Desk-scale inputs sit
/// far below this; exceeding it means the input was adversarial rather
/// than mathematical, and we stop instead of silently dropping roots.
const DIVISOR_CAP: usize = 1 << 20;

/// A polynomial presented by its rational roots: `scale * prod (u - r)^m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootMultiset {
    /// Roots with multiplicities, sorted by root value.
    pub roots: Vec<(Rat, u32)>,
    /// Leading coefficient of the expanded polynomial.
    #[serde(rename = "factor", default = "Rat::one")]
    pub scale: Rat,
}

impl RootMultiset {
    pub fn to_poly(&self) -> Poly {
        Poly::from_roots(&self.roots, &self.scale)
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| *m as usize).sum()
    }

    /// Multiplicity of `r` (zero if absent).
    pub fn multiplicity(&self, r: &Rat) -> u32 {
        self.roots
            .iter()
            .find(|(root, _)| root == r)
            .map_or(0, |(_, m)| *m)
    }
}

/// All rational roots of a nonzero polynomial, with multiplicities.
///
/// Succeeds exactly when `p` splits over the rationals; otherwise reports
/// the monic irrational residual factor.  Panics on the zero polynomial.
pub fn roots_rational(p: &Poly) -> Result<RootMultiset, QPolyError> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let scale = p.leading_coeff().clone();
    let mut roots: Vec<(Rat, u32)> = Vec::new();

    // Strip roots at zero first so the constant term below is nonzero.
    let zero_mult = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult as u32));
    }
    let mut q = Poly::from_coeffs(p.coeffs()[zero_mult..].to_vec()).monic();

    if !q.is_constant() {
        let (int_coeffs, a0, an) = integerize(&q);
        let p_at_one: BigInt = int_coeffs.iter().sum();
        let p_at_minus_one: BigInt = int_coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum();

        let num_divs = arith::divisors(&a0.abs(), DIVISOR_CAP)
            .unwrap_or_else(|| panic!("root candidate explosion for constant term {a0}"));
        let den_divs = arith::divisors(&an.abs(), DIVISOR_CAP)
            .unwrap_or_else(|| panic!("root candidate explosion for leading term {an}"));

        let mut candidates: BTreeSet<Rat> = BTreeSet::new();
        for a in &num_divs {
            for b in &den_divs {
                if !a.gcd(b).is_one() {
                    continue;
                }
                // Screens: a root a/b (or -a/b) forces (a - b) | P(1) and
                // (a + b) | P(-1), and symmetrically for the negative.
                let diff = a - b;
                let sum = a + b;
                let pos_ok = divides_or_zero(&diff, &p_at_one)
                    && divides_or_zero(&sum, &p_at_minus_one);
                let neg_ok = divides_or_zero(&sum, &p_at_one)
                    && divides_or_zero(&diff, &p_at_minus_one);
                if pos_ok {
                    candidates.insert(Rat::from_big(BigRational::new(a.clone(), b.clone())));
                }
                if neg_ok {
                    candidates.insert(Rat::from_big(BigRational::new(-a.clone(), b.clone())));
                }
            }
        }

        for r in candidates {
            if q.is_constant() {
                break;
            }
            let mult = q.root_multiplicity(&r);
            if mult > 0 {
                for _ in 0..mult {
                    q = q.div_exact(&Poly::monic_linear(&r));
                }
                roots.push((r, mult));
            }
        }
    }

    if !q.is_constant() {
        return Err(QPolyError::IrrationalRoots { residual: q });
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootMultiset { roots, scale })
}

/// `d | v`, treating a zero candidate divisor as matching only `v == 0`
/// (that case means 1 or -1 was itself a root, which the main loop finds
/// regardless).
fn divides_or_zero(d: &BigInt, v: &BigInt) -> bool {
    if d.is_zero() {
        return v.is_zero();
    }
    (v % d).is_zero()
}

/// Primitive integer coefficient vector of a monic rational polynomial,
/// plus its (nonzero) constant and leading entries.
fn integerize(q: &Poly) -> (Vec<BigInt>, BigInt, BigInt) {
    let mut lcm = BigInt::one();
    for c in q.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for c in &scaled {
        gcd = gcd.gcd(c);
    }
    let prim: Vec<BigInt> = scaled.iter().map(|c| c / &gcd).collect();
    let a0 = prim.first().expect("nonempty").clone();
    let an = prim.last().expect("nonempty").clone();
    (prim, a0, an)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn splits_simple_products() {
        let p = Poly::from_roots(&[(r("1/2"), 2), (r("-3"), 1), (r("0"), 1)], &r("-6"));
        let rm = roots_rational(&p).unwrap();
        assert_eq!(rm.scale, r("-6"));
        assert_eq!(
            rm.roots,
            vec![(r("-3"), 1), (r("0"), 1), (r("1/2"), 2)]
        );
        assert_eq!(rm.to_poly(), p);
    }

    #[test]
    fn constant_polynomials() {
        let rm = roots_rational(&Poly::constant(r("7/3"))).unwrap();
        assert!(rm.roots.is_empty());
        assert_eq!(rm.scale, r("7/3"));
    }

    #[test]
    fn reports_irrational_residual() {
        // (u^2 - 2)(u - 1)
        let p = Poly::from_coeffs(vec![r("2"), r("-2"), r("-1"), r("1")]);
        let err = roots_rational(&p).unwrap_err();
        match err {
            QPolyError::IrrationalRoots { residual } => {
                assert_eq!(residual, Poly::from_coeffs(vec![r("-2"), r("0"), r("1")]));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn large_prime_roots() {
        // Roots at 1000003/7 and -1000033, reachable only through the
        // factorization path.
        let p = Poly::from_roots(&[(r("1000003/7"), 1), (r("-1000033"), 1)], &r("7"));
        let rm = roots_rational(&p).unwrap();
        assert_eq!(rm.roots, vec![(r("-1000033"), 1), (r("1000003/7"), 1)]);
        assert_eq!(rm.to_poly(), p);
    }

    #[test]
    fn root_at_one_and_minus_one() {
        let p = Poly::from_roots(&[(r("1"), 3), (r("-1"), 2)], &r("1"));
        let rm = roots_rational(&p).unwrap();
        assert_eq!(rm.roots, vec![(r("-1"), 2), (r("1"), 3)]);
    }
}
