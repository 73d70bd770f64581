//! Pattern containment between Ferrers boards.
//!
//! `alpha` contains `mu` when deleting some rows and columns of `alpha` and
//! top/left justifying what remains yields `mu`. [`contains_oracle`] decides
//! this by trying every deletion; [`contains`] uses a gap condition on a
//! chosen subsequence of rows and runs in `O(len(alpha) + len(mu))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default board size accepted by [`contains_oracle`].
pub const ORACLE_CAP: u64 = 16;

/// Rows and columns (1-based) to delete from `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionWitness {
    pub deleted_rows: Vec<usize>,
    pub deleted_cols: Vec<usize>,
}

/// Deletes the given rows and columns and justifies the remaining cells.
pub fn apply_deletion(alpha: &Partition, witness: &DeletionWitness) -> Partition {
    let cols = alpha.largest() as usize;
    let mut col_deleted = vec![false; cols + 1];
    for &c in &witness.deleted_cols {
        if c >= 1 && c <= cols {
            col_deleted[c] = true;
        }
    }
    // kept_upto[j] = number of surviving columns among 1..=j
    let mut kept_upto = vec![0u32; cols + 1];
    for j in 1..=cols {
        kept_upto[j] = kept_upto[j - 1] + u32::from(!col_deleted[j]);
    }
    let parts = alpha
        .parts()
        .iter()
        .enumerate()
        .filter(|(i, _)| !witness.deleted_rows.contains(&(i + 1)))
        .map(|(_, &p)| kept_upto[p as usize])
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted(parts)
}

/// Exhaustive containment test over all row and column deletions.
pub fn contains_oracle(alpha: &Partition, mu: &Partition) -> Result<bool> {
    contains_oracle_capped(alpha, mu, ORACLE_CAP)
}

pub fn contains_oracle_capped(alpha: &Partition, mu: &Partition, cap: u64) -> Result<bool> {
    if alpha.weight() > cap {
        return Err(Error::cap("oracle board weight", alpha.weight(), cap));
    }
    if mu.is_empty() {
        return Ok(true);
    }
    let rows = alpha.len();
    let cols = alpha.largest() as usize;
    let target = mu.parts();
    let mut kept_upto = vec![0u32; cols + 1];
    let mut remaining = Vec::with_capacity(rows);
    for col_mask in 0u64..(1u64 << cols) {
        for j in 1..=cols {
            let deleted = (col_mask >> (j - 1)) & 1 == 1;
            kept_upto[j] = kept_upto[j - 1] + u32::from(!deleted);
        }
        if kept_upto[cols] < mu.largest() {
            continue;
        }
        for row_mask in 0u64..(1u64 << rows) {
            remaining.clear();
            for (i, &p) in alpha.parts().iter().enumerate() {
                if (row_mask >> i) & 1 == 0 {
                    let len = kept_upto[p as usize];
                    if len > 0 {
                        remaining.push(len);
                    }
                }
            }
            if remaining == target {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// For each row of `mu` (top to bottom), the 0-based row of `alpha` it is
/// matched to. Rows are chosen bottom-up, each as low as possible.
fn match_rows(alpha: &Partition, mu: &Partition) -> Option<Vec<usize>> {
    let k = mu.len();
    if k > alpha.len() || mu.largest() > alpha.largest() {
        return None;
    }
    let a = alpha.parts();
    let mut chosen = vec![0usize; k];
    let mut next = alpha.len();
    let mut below = 0u32;
    for i in (0..k).rev() {
        let gap = mu.part(i) - mu.part(i + 1);
        let need = (below + gap).max(mu.part(i));
        loop {
            if next == 0 {
                return None;
            }
            next -= 1;
            if a[next] >= need {
                break;
            }
        }
        chosen[i] = next;
        below = a[next];
    }
    Some(chosen)
}

/// Fast containment test.
pub fn contains(alpha: &Partition, mu: &Partition) -> bool {
    mu.is_empty() || match_rows(alpha, mu).is_some()
}

pub fn avoids(alpha: &Partition, mu: &Partition) -> bool {
    !contains(alpha, mu)
}

/// A deletion turning `alpha` into `mu`, if one exists. `deleted_rows` lists
/// every row absent from the result, including rows that the column deletions
/// would erase anyway. Among such deletions the row set is lexicographically
/// smallest; within each column band the leftmost surplus columns are deleted.
pub fn witness(alpha: &Partition, mu: &Partition) -> Option<DeletionWitness> {
    let chosen = match_rows(alpha, mu)?;
    let a = alpha.parts();
    let deleted_rows = (0..alpha.len()).filter(|r| !chosen.contains(r)).map(|r| r + 1).collect();
    let mut deleted_cols = Vec::new();
    let mut lower = 0u32;
    for i in (0..mu.len()).rev() {
        let upper = a[chosen[i]];
        let keep = mu.part(i) - mu.part(i + 1);
        let surplus = upper - lower - keep;
        deleted_cols.extend((lower + 1..=lower + surplus).map(|c| c as usize));
        lower = upper;
    }
    Some(DeletionWitness { deleted_rows, deleted_cols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::partitions_of;
    use crate::part;

    fn alpha_ex() -> Partition {
        part![6, 5, 5, 5, 4, 4, 2, 2]
    }

    #[test]
    fn introduction_example() {
        let mu = part![4, 3, 3, 2, 2];
        // the oracle cap is 16 cells, this board has 33
        assert!(contains_oracle(&alpha_ex(), &mu).unwrap_err().is_cap_exceeded());
        assert!(contains_oracle_capped(&alpha_ex(), &mu, 40).unwrap());
        assert!(contains(&alpha_ex(), &mu));
        let other = DeletionWitness { deleted_rows: vec![2, 5, 7], deleted_cols: vec![3, 4] };
        assert_eq!(apply_deletion(&alpha_ex(), &other), mu);
        let w = witness(&alpha_ex(), &mu).unwrap();
        assert_eq!(apply_deletion(&alpha_ex(), &w), mu);
        assert_eq!(w.deleted_rows, vec![1, 2, 3]);
    }

    #[test]
    fn rectangles_avoid_21() {
        assert!(!contains_oracle(&part![2, 2], &part![2, 1]).unwrap());
        assert!(!contains(&part![2, 2], &part![2, 1]));
        assert!(witness(&part![2, 2], &part![2, 1]).is_none());
    }

    #[test]
    fn reflexive_and_empty() {
        for p in [part![3, 1], part![4, 4, 2], part![1]] {
            assert!(contains(&p, &p));
            assert!(contains_oracle(&p, &p).unwrap());
            assert!(contains(&p, &Partition::empty()));
        }
        assert!(contains(&Partition::empty(), &Partition::empty()));
        assert!(!contains(&Partition::empty(), &part![1]));
    }

    /// Every row set that can be deleted to reach `mu` with no kept row
    /// erased by the column deletions, by brute force.
    fn all_deleted_row_sets(alpha: &Partition, mu: &Partition) -> Vec<Vec<usize>> {
        let rows = alpha.len();
        let cols = alpha.largest() as usize;
        let mut out = Vec::new();
        for row_mask in 0u64..(1 << rows) {
            let deleted_rows: Vec<usize> =
                (0..rows).filter(|i| (row_mask >> i) & 1 == 1).map(|i| i + 1).collect();
            let hit = (0u64..(1 << cols)).any(|cm| {
                let deleted_cols = (0..cols).filter(|j| (cm >> j) & 1 == 1).map(|j| j + 1).collect();
                let w = DeletionWitness { deleted_rows: deleted_rows.clone(), deleted_cols };
                apply_deletion(alpha, &w) == *mu && alpha.len() - deleted_rows.len() == mu.len()
            });
            if hit {
                out.push(deleted_rows);
            }
        }
        out
    }

    #[test]
    fn witness_rows_are_lexicographically_smallest() {
        for n in 1..=9 {
            for alpha in partitions_of(n).unwrap() {
                for m in 1..=n.min(5) {
                    for mu in partitions_of(m).unwrap() {
                        let all = all_deleted_row_sets(&alpha, &mu);
                        match witness(&alpha, &mu) {
                            None => assert!(all.is_empty(), "{alpha:?} {mu:?}"),
                            Some(w) => {
                                assert_eq!(apply_deletion(&alpha, &w), mu);
                                assert_eq!(Some(&w.deleted_rows), all.iter().min(), "{alpha:?} {mu:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
