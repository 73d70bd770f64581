//! The `(k, l, a_0, a_1, ...)` description of a strict pattern.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A strict pattern written `(k+1, k, ..., k-l+1, a_0, a_1, ...)` where
/// `k - l` is the largest size below `k + 1` that is missing (so `k - l > a_0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictShape {
    pub k: u32,
    pub ell: u32,
    pub tail: Vec<u32>,
    pub is_staircase: bool,
}

impl StrictShape {
    /// `a_j`, zero past the stored tail.
    pub fn a(&self, j: usize) -> u32 {
        self.tail.get(j).copied().unwrap_or(0)
    }

    /// The first omitted size, `k - l`.
    pub fn gap(&self) -> u32 {
        self.k - self.ell
    }

    pub fn reconstruct(&self) -> Partition {
        let mut parts: Vec<u32> = (0..=self.ell).map(|j| self.k + 1 - j).collect();
        parts.extend(self.tail.iter().copied().filter(|&a| a > 0));
        Partition::from_sorted(parts)
    }
}

pub fn shape_of(mu: &Partition) -> Result<StrictShape> {
    if !mu.is_strict() {
        return Err(Error::NotStrict(mu.to_string()));
    }
    if mu.largest() < 2 {
        return Err(Error::PatternTooSmall(mu.to_string()));
    }
    let k = mu.largest() - 1;
    let mut ell = 0;
    while ell < k && mu.has_part(k - ell) {
        ell += 1;
    }
    let tail = mu.parts()[1 + ell as usize..].to_vec();
    Ok(StrictShape { k, ell, tail, is_staircase: ell == k })
}
