//! Exact search for constant-coefficient linear recurrences
//! `a_n = c_1 a_{n-1} + ... + c_d a_{n-d}` satisfied by an integer sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// Solves the equations for `n` in `order..end` (0-based indices into `seq`).
/// Returns coefficients `c_1..c_d` if the system is consistent.
pub fn fit_recurrence(seq: &[BigInt], order: usize, end: usize) -> Option<Vec<BigRational>> {
    let end = end.min(seq.len());
    if order == 0 {
        return seq[..end].iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut rows: Vec<Vec<BigRational>> = (order..end)
        .map(|n| {
            let mut row: Vec<BigRational> =
                (1..=order).map(|i| BigRational::from_integer(seq[n - i].clone())).collect();
            row.push(BigRational::from_integer(seq[n].clone()));
            row
        })
        .collect();
    solve(&mut rows, order)
}

/// Gaussian elimination on an augmented matrix with `vars` unknowns; free
/// variables are set to zero.
#[allow(clippy::needless_range_loop)]
fn solve(rows: &mut [Vec<BigRational>], vars: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..=vars {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[vars].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); vars];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][vars].clone();
    }
    Some(sol)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order: usize,
    /// Some recurrence of this order holds on the training prefix.
    pub fits_train: bool,
    /// Some recurrence of this order holds on the whole sequence.
    pub fits_all: bool,
}

/// For each order up to `max_order`, whether a recurrence fits the first
/// `train` terms and whether one fits all of `seq`.
pub fn recurrence_report(seq: &[BigInt], max_order: usize, train: usize) -> Vec<OrderReport> {
    (1..=max_order)
        .map(|order| OrderReport {
            order,
            fits_train: fit_recurrence(seq, order, train).is_some(),
            fits_all: fit_recurrence(seq, order, seq.len()).is_some(),
        })
        .collect()
}

/// The smallest order whose recurrence holds on all of `seq`.
pub fn minimal_recurrence(seq: &[BigInt], max_order: usize) -> Option<(usize, Vec<BigRational>)> {
    (1..=max_order).find_map(|d| fit_recurrence(seq, d, seq.len()).map(|c| (d, c)))
}
