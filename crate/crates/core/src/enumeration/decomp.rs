//! Counting `D_n(mu)` through rectangular decompositions, and the
//! unrestricted representation counts `nu_k(n)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{Partition, RectDecomp};

fn check_pattern(mu: &Partition) -> Result<usize> {
    if !mu.is_strict() {
        return Err(Error::NotStrict(mu.to_string()));
    }
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(mu.largest() as usize - 1)
}

/// `thin[i]` is true when rectangle `i + 1` of a `D(mu)` member has width 1,
/// i.e. `mu` has no part of size `i + 1`.
pub fn thin_indices(mu: &Partition) -> Result<Vec<bool>> {
    let k = check_pattern(mu)?;
    Ok((1..=k as u32).map(|i| !mu.has_part(i)).collect())
}

/// Membership in `D(mu)`: exactly `mu_1 - 1` distinct magnitudes and width 1
/// at every thin rectangle.
pub fn in_d_set(mu: &Partition, alpha: &Partition) -> Result<bool> {
    let thin = thin_indices(mu)?;
    if alpha.is_empty() || alpha.distinct_magnitudes() != thin.len() {
        return Ok(false);
    }
    let d = alpha.rect_decomp()?;
    Ok(thin.iter().zip(&d.widths).all(|(&t, &w)| !t || w == 1))
}

struct DCounter<'a> {
    thin: &'a [bool],
    divisors: Vec<Vec<u32>>,
    memo: HashMap<(usize, u64, u64), u128>,
}

impl DCounter<'_> {
    /// Ways to fill rectangles `i..` with heights below `bound` and weight `r`.
    fn count(&mut self, i: usize, bound: u64, r: u64) -> u128 {
        let k = self.thin.len();
        let remaining = (k - i) as u64;
        // the heights left must be distinct, so at least remaining..1
        if bound <= remaining || r < remaining * (remaining + 1) / 2 {
            return 0;
        }
        if i + 1 == k {
            return if self.thin[i] {
                u128::from(r < bound)
            } else {
                self.divisors[r as usize].iter().filter(|&&d| u64::from(d) < bound).count() as u128
            };
        }
        if let Some(&c) = self.memo.get(&(i, bound, r)) {
            return c;
        }
        let below = remaining - 1;
        let floor = below * (below + 1) / 2;
        let mut total = 0u128;
        let top = (bound - 1).min(r);
        for y in remaining..=top {
            if self.thin[i] {
                if r >= y + floor {
                    total += self.count(i + 1, y, r - y);
                }
            } else {
                let mut used = y;
                while used + floor <= r {
                    total += self.count(i + 1, y, r - used);
                    used += y;
                }
            }
        }
        self.memo.insert((i, bound, r), total);
        total
    }
}

fn divisor_lists(n: usize) -> Vec<Vec<u32>> {
    let mut divs = vec![Vec::new(); n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            divs[m].push(d as u32);
        }
    }
    divs
}

/// `|D_n(mu)|` for nonempty strict `mu`: the number of rectangular
/// decompositions `n = sum x_i y_i` with `y_1 > ... > y_{mu_1 - 1} > 0`,
/// `x_i >= 1`, and `x_i = 1` at thin indices.
pub fn d_count(mu: &Partition, n: u64) -> Result<u128> {
    let thin = thin_indices(mu)?;
    // with mu = (1) no nonempty partition qualifies
    if n == 0 || thin.is_empty() {
        return Ok(0);
    }
    if thin.len() >= 3 && n <= DENSE_CAP {
        return Ok(dense_count(&thin, n as usize));
    }
    let mut counter = DCounter { thin: &thin, divisors: divisor_lists(n as usize), memo: HashMap::new() };
    Ok(counter.count(0, n + 1, n))
}

/// Largest `n` for the layered count; its two tables hold about `n^2 / 2`
/// entries each.
pub const DENSE_CAP: u64 = 3000;

/// `table[b][r]`, stored only for `b <= r + 1` since heights never exceed `r`.
struct Layer {
    cells: Vec<u128>,
}

impl Layer {
    fn new(n: usize) -> Self {
        Layer { cells: vec![0; (n + 1) * (n + 4) / 2] }
    }

    fn index(r: usize, b: usize) -> usize {
        r * (r + 3) / 2 + b.min(r + 1)
    }

    fn get(&self, b: usize, r: usize) -> u128 {
        self.cells[Self::index(r, b)]
    }

    fn set(&mut self, b: usize, r: usize, v: u128) {
        self.cells[Self::index(r, b)] = v;
    }
}

/// The same count by filling one rectangle per layer, from the last. Layer
/// `i` holds the number of ways to place rectangles `i..` with heights below
/// `b` and total weight `r`; each height `y` contributes `f_y(r)`, the ways
/// with top height exactly `y`, which obeys `f_y(r) = g(y, r - y) + f_y(r - y)`
/// for wide rectangles.
#[allow(clippy::needless_range_loop)]
fn dense_count(thin: &[bool], n: usize) -> u128 {
    let mut next = Layer::new(n);
    for b in 0..=1 {
        next.set(b, 0, 1);
    }
    let mut f = vec![0u128; n + 1];
    for &is_thin in thin.iter().rev() {
        let mut cur = Layer::new(n);
        // rows b = 0 and b = 1 stay zero: every height is at least 1
        for y in 1..=n {
            f[..y].fill(0);
            for r in y..=n {
                let rest = next.get(y, r - y);
                f[r] = if is_thin { rest } else { rest + f[r - y] };
            }
            for r in y..=n {
                cur.set(y + 1, r, cur.get(y, r) + f[r]);
            }
        }
        next = cur;
    }
    next.get(n + 1, n)
}

/// The members of `D_n(mu)`, built from their rectangular decompositions.
pub fn d_members(mu: &Partition, n: u64) -> Result<Vec<Partition>> {
    let thin = thin_indices(mu)?;
    let mut out = Vec::new();
    let mut d = RectDecomp { widths: Vec::new(), heights: Vec::new() };
    fill(&thin, n + 1, n, &mut d, &mut out)?;
    Ok(out)
}

fn fill(
    thin: &[bool],
    bound: u64,
    r: u64,
    d: &mut RectDecomp,
    out: &mut Vec<Partition>,
) -> Result<()> {
    let i = d.len();
    if i == thin.len() {
        if r == 0 {
            out.push(Partition::from_rect_decomp(d)?);
        }
        return Ok(());
    }
    let remaining = (thin.len() - i) as u64;
    for y in remaining..bound.min(r + 1) {
        let max_w = if thin[i] { 1 } else { r / y };
        for w in 1..=max_w {
            if w * y > r {
                break;
            }
            d.widths.push(w as u32);
            d.heights.push(y as u32);
            fill(thin, y, r - w * y, d, out)?;
            d.widths.pop();
            d.heights.pop();
        }
    }
    Ok(())
}

/// `nu_k(n)` for `n = 0..=n_max`: ordered representations `n = sum_{i<=k} x_i y_i`
/// with all factors positive, by repeated convolution with `sigma_0`.
pub fn nu_table(k: usize, n_max: usize) -> Vec<u128> {
    let mut sigma0 = vec![0u128; n_max + 1];
    for d in 1..=n_max {
        for m in (d..=n_max).step_by(d) {
            sigma0[m] += 1;
        }
    }
    if k == 0 {
        let mut t = vec![0u128; n_max + 1];
        t[0] = 1;
        return t;
    }
    let mut cur = sigma0.clone();
    for _ in 1..k {
        let mut next = vec![0u128; n_max + 1];
        for n in 1..=n_max {
            next[n] = (1..n).map(|m| cur[m] * sigma0[n - m]).sum();
        }
        cur = next;
    }
    cur
}

pub fn nu(k: usize, n: usize) -> u128 {
    nu_table(k, n)[n]
}
