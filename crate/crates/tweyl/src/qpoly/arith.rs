//! Big-integer factorization support for rational root extraction.
//!
//! Root candidates for an integer polynomial are ratios of divisors of the
//! constant and leading coefficients, so we need complete factorizations
//! of those two integers.  Trial division handles the small part; larger
//! cofactors go through Miller-Rabin and Brent's variant of Pollard rho.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

const TRIAL_LIMIT: u64 = 100_000;

/// Complete factorization of `n > 0` as prime -> exponent.
pub fn factorize(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(n.is_positive(), "factorize requires a positive integer");
    let mut factors = BTreeMap::new();
    let mut rest = n.clone();

    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let big_d = BigInt::from(d);
        if (&big_d * &big_d) > rest {
            break;
        }
        while (&rest % &big_d).is_zero() {
            *factors.entry(big_d.clone()).or_insert(0) += 1;
            rest /= &big_d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        split_factor(&rest, &mut factors);
    }

    let mut check = BigInt::one();
    for (p, e) in &factors {
        check *= p.pow(*e);
    }
    assert_eq!(&check, n, "factorization consistency");
    factors
}

fn split_factor(n: &BigInt, factors: &mut BTreeMap<BigInt, u32>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(n) {
        *factors.entry(n.clone()).or_insert(0) += 1;
        return;
    }
    let d = brent_rho(n);
    split_factor(&d, factors);
    split_factor(&(n / &d), factors);
}

/// Miller-Rabin with a fixed witness set.  Deterministic for all inputs
/// below 3.3e24; beyond that the witnesses make a false positive
/// vanishingly unlikely, and the product check in `factorize` still
/// guards overall consistency.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let w = BigInt::from(w);
        if n == &w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigInt::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Nontrivial factor of an odd composite `n` via Brent's cycle method.
fn brent_rho(n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    if (n % &two).is_zero() {
        return two;
    }
    // Deterministic restarts over increment constants; a composite that
    // survives every restart would indicate a logic error upstream.
    for c in 1u64..64 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = two.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut r: u64 = 1;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let step = 128.min(r - k);
                for _ in 0..step {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += step;
            }
            r *= 2;
        }
        if &g == n {
            // The batched gcd jumped past the factor; replay one step at
            // a time from the last checkpoint.
            g = BigInt::one();
            while g.is_one() {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
            }
        }
        if &g != n {
            return g;
        }
    }
    panic!("factor search exhausted restarts for {n}");
}

/// All positive divisors of `n > 0`, unordered.  Returns `None` if the
/// divisor count would exceed `cap`.
pub fn divisors(n: &BigInt, cap: usize) -> Option<Vec<BigInt>> {
    let factors = factorize(n);
    let mut count: usize = 1;
    for e in factors.values() {
        count = count.checked_mul(*e as usize + 1)?;
        if count > cap {
            return None;
        }
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in &factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    Some(out)
}
