//! Greatest common divisors with canonical Bezout cofactors.
//!
//! `bezout` returns the monic gcd `d` of a family `f_1, ..., f_k` together
//! with cofactors `g_i` satisfying `sum g_i f_i = d`.  The cofactors are
//! pinned to a canonical choice: the common degree bound on the `g_i` is
//! the smallest for which a solution exists, and among those solutions we
//! take the one produced by reduced row echelon elimination with free
//! variables set to zero, under a fixed variable order.  The output is
//! therefore reproducible across runs and platforms.

use super::poly::Poly;
use super::rat::Rat;

/// Monic gcd and canonical cofactors for `sum g_i f_i = gcd`.
///
/// All-zero input yields `(0, [0, ...])`.  Zero members always receive the
/// zero cofactor.
pub fn bezout(fs: &[Poly]) -> (Poly, Vec<Poly>) {
    let mut d = Poly::zero();
    for f in fs {
        d = d.gcd(f);
    }
    if d.is_zero() {
        return (d, vec![Poly::zero(); fs.len()]);
    }

    let active: Vec<usize> = (0..fs.len()).filter(|&i| !fs[i].is_zero()).collect();
    let bound: usize = active
        .iter()
        .map(|&i| fs[i].degree().unwrap())
        .sum::<usize>()
        + 1;
    let max_f_deg = active
        .iter()
        .map(|&i| fs[i].degree().unwrap())
        .max()
        .unwrap();

    for cof_deg in 0..=bound {
        let cols = active.len() * (cof_deg + 1);
        let rows = max_f_deg + cof_deg + 1;
        let mut a = vec![vec![Rat::zero(); cols]; rows];
        let mut b = vec![Rat::zero(); rows];
        for (slot, &i) in active.iter().enumerate() {
            for k in 0..=cof_deg {
                let col = slot * (cof_deg + 1) + k;
                for (t, c) in fs[i].coeffs().iter().enumerate() {
                    a[t + k][col] = c.clone();
                }
            }
        }
        for (t, row) in b.iter_mut().enumerate() {
            *row = d.coeff(t);
        }
        if let Some(x) = solve_linear(a, b) {
            let mut gs = vec![Poly::zero(); fs.len()];
            for (slot, &i) in active.iter().enumerate() {
                let start = slot * (cof_deg + 1);
                gs[i] = Poly::from_coeffs(x[start..start + cof_deg + 1].to_vec());
            }
            debug_assert_eq!(
                fs.iter()
                    .zip(&gs)
                    .fold(Poly::zero(), |acc, (f, g)| acc + &(f * g)),
                d
            );
            return (d, gs);
        }
    }
    unreachable!("Bezout cofactors must exist within the degree bound");
}

/// Solve `A x = b` exactly.  Returns the canonical solution with all free
/// variables zero, or `None` if the system is inconsistent.
pub(crate) fn solve_linear(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        b.swap(rank, pr);
        let inv = a[rank][c].recip();
        for entry in a[rank].iter_mut() {
            *entry *= &inv;
        }
        b[rank] *= &inv;
        for r in 0..rows {
            if r == rank || a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].clone();
            for k in 0..cols {
                let t = &a[rank][k] * &factor;
                a[r][k] -= &t;
            }
            let t = &b[rank] * &factor;
            b[r] -= &t;
        }
        pivot_row_of_col[c] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    for r in rank..rows {
        if !b[r].is_zero() {
            return None;
        }
    }
    Some(
        (0..cols)
            .map(|c| match pivot_row_of_col[c] {
                Some(r) => b[r].clone(),
                None => Rat::zero(),
            })
            .collect(),
    )
}
