//! Rook equivalence: the multiset `{i + mu_i}`, rook polynomials, strict
//! class representatives and finite Wilf-equivalence checks.

use serde::{Deserialize, Serialize};

use crate::enumeration::{av_series_capped, partitions_of_capped, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default weight bound for representative search and rook polynomials.
pub const EQUIV_CAP: u64 = 40;

/// The sorted values `i + p_i` for `i = 1..=horizon`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FsMultiset {
    pub horizon: usize,
    pub values: Vec<u64>,
}

pub fn fs_multiset(p: &Partition, horizon: usize) -> Result<FsMultiset> {
    if horizon < p.len() || horizon == 0 {
        return Err(Error::HorizonTooSmall { horizon, len: p.len() });
    }
    let mut values: Vec<u64> = (1..=horizon).map(|i| i as u64 + u64::from(p.part(i - 1))).collect();
    values.sort_unstable();
    Ok(FsMultiset { horizon, values })
}

/// Rook equivalence via the multisets at the smallest common horizon.
pub fn rook_equivalent(p: &Partition, q: &Partition) -> bool {
    let h = p.len().max(q.len()).max(1);
    fs_multiset(p, h).expect("horizon covers both") == fs_multiset(q, h).expect("horizon covers both")
}

/// The unique strict partition rook equivalent to `p`.
pub fn strict_representative(p: &Partition) -> Result<Partition> {
    strict_representative_capped(p, EQUIV_CAP)
}

pub fn strict_representative_capped(p: &Partition, cap: u64) -> Result<Partition> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if p.is_strict() {
        return Ok(p.clone());
    }
    let n = p.weight();
    // no partition of n has more than n parts
    let target = fs_multiset(p, n as usize)?;
    let mut hits = partitions_of_capped(n, cap)?
        .filter(|nu| nu.is_strict() && fs_multiset(nu, n as usize).expect("n bounds the length") == target);
    let first = hits.next().ok_or_else(|| Error::Invariant(format!("no strict partition is rook equivalent to {p}")))?;
    if let Some(second) = hits.next() {
        return Err(Error::Invariant(format!("{p} is rook equivalent to both {first} and {second}")));
    }
    Ok(first)
}

/// `coeffs[j]` counts placements of `j` non-attacking rooks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RookPoly {
    pub coeffs: Vec<u128>,
}

/// Rook polynomial by adding columns from shortest to tallest: a new column
/// of height `c` at least as tall as all previous ones meets the `j - 1`
/// occupied rows, leaving `c - (j - 1)` free cells.
pub fn rook_poly(p: &Partition) -> Result<RookPoly> {
    rook_poly_capped(p, EQUIV_CAP)
}

pub fn rook_poly_capped(p: &Partition, cap: u64) -> Result<RookPoly> {
    if p.weight() > cap {
        return Err(Error::cap("rook board weight", p.weight(), cap));
    }
    let mut r = vec![1u128];
    for &c in p.columns().iter().rev() {
        let mut next = r.clone();
        next.push(0);
        for j in 1..next.len() {
            let free = i64::from(c) - (j as i64 - 1);
            if free > 0 {
                next[j] += free as u128 * r[j - 1];
            }
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        r = next;
    }
    Ok(RookPoly { coeffs: r })
}

/// Equal avoidance counts for `n = 1..=n_max`.
pub fn wilf_check(p: &Partition, q: &Partition, n_max: u64) -> Result<bool> {
    if p == q {
        return Ok(true);
    }
    let a = av_series_capped(p, n_max, ENUMERATION_CAP, 1)?;
    let b = av_series_capped(q, n_max, ENUMERATION_CAP, 1)?;
    Ok(a.counts == b.counts)
}
