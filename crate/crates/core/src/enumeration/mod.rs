//! Exhaustive generators and counters over partitions of `n`.

mod decomp;
mod hat;
mod sets;

pub use decomp::{d_count, d_members, in_d_set, nu, nu_table, thin_indices, DENSE_CAP};
pub use hat::{hat_removed_part, mu_hat, mu_sup, psi};
pub use sets::{set_e, set_m, set_n};

use serde::{Deserialize, Serialize};

use crate::containment::contains;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default largest `n` for exhaustive enumeration (`p(60)` is about 966k).
pub const ENUMERATION_CAP: u64 = 60;
/// Default weight bound used by the per-pattern property sweeps.
pub const PROPERTY_CAP: u64 = 25;

/// Avoidance counts for `n = 1..=N`; `counts[0]` is the count at `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSeries {
    pub pattern: Partition,
    pub counts: Vec<u64>,
}

impl CountSeries {
    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    /// The count at weight `n >= 1`.
    pub fn get(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.counts.get(i).copied())
    }
}

/// Partitions of `n` in reverse lexicographic order, starting from `(n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = successor(&parts);
        Some(Partition::from_sorted(parts))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let last_big = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..last_big].to_vec();
    let v = parts[last_big] - 1;
    next.push(v);
    let mut rest = (parts.len() - last_big - 1) as u32 + 1;
    while rest > 0 {
        let p = v.min(rest);
        next.push(p);
        rest -= p;
    }
    Some(next)
}

pub fn partitions_of(n: u64) -> Result<Partitions> {
    partitions_of_capped(n, ENUMERATION_CAP)
}

pub fn partitions_of_capped(n: u64, cap: u64) -> Result<Partitions> {
    if n > cap {
        return Err(Error::cap("partition weight", n, cap));
    }
    let first = if n == 0 { Vec::new() } else { vec![n as u32] };
    Ok(Partitions { current: Some(first) })
}

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partition_count(n: u64) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut acc: i128 = 0;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[i - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * p[i - g2] as i128;
            }
        }
        p[i] = acc as u128;
    }
    p[n]
}

fn count_avoiders(mu: &Partition, n: u64, cap: u64) -> Result<u64> {
    Ok(partitions_of_capped(n, cap)?.filter(|a| !contains(a, mu)).count() as u64)
}

/// `|Av_n(mu)|` for `n = 1..=n_max`.
pub fn av_series(mu: &Partition, n_max: u64) -> Result<CountSeries> {
    av_series_capped(mu, n_max, ENUMERATION_CAP, 1)
}

/// As [`av_series`], with an explicit cap and `jobs` worker threads.
pub fn av_series_capped(mu: &Partition, n_max: u64, cap: u64, jobs: usize) -> Result<CountSeries> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if n_max > cap {
        return Err(Error::cap("n_max", n_max, cap));
    }
    let jobs = jobs.max(1);
    let counts = if jobs == 1 {
        (1..=n_max).map(|n| count_avoiders(mu, n, cap)).collect::<Result<Vec<_>>>()?
    } else {
        let mut counts = vec![0u64; n_max as usize];
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    scope.spawn(move || {
                        (1..=n_max)
                            .rev()
                            .skip(j)
                            .step_by(jobs)
                            .map(|n| count_avoiders(mu, n, cap).map(|c| (n, c)))
                            .collect::<Result<Vec<_>>>()
                    })
                })
                .collect();
            for h in handles {
                for (n, c) in h.join().expect("worker panicked")? {
                    counts[n as usize - 1] = c;
                }
            }
            Ok::<_, Error>(())
        })?;
        counts
    };
    Ok(CountSeries { pattern: mu.clone(), counts })
}

/// The partitions of weight `n` that avoid `mu`.
pub fn av_set(mu: &Partition, n: u64) -> Result<Vec<Partition>> {
    Ok(partitions_of(n)?.filter(|a| !contains(a, mu)).collect())
}

/// Partitions of weight `n` containing `tau` and avoiding `mu`.
pub fn q_set(tau: &Partition, mu: &Partition, n: u64) -> Result<Vec<Partition>> {
    Ok(partitions_of(n)?.filter(|a| contains(a, tau) && !contains(a, mu)).collect())
}

pub fn q_count(tau: &Partition, mu: &Partition, n: u64) -> Result<u64> {
    Ok(partitions_of(n)?.filter(|a| contains(a, tau) && !contains(a, mu)).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::contains_oracle;
    use crate::part;

    #[test]
    fn small_enumerations() {
        let p4: Vec<_> = partitions_of(4).unwrap().collect();
        assert_eq!(
            p4,
            vec![part![4], part![3, 1], part![2, 2], part![2, 1, 1], part![1, 1, 1, 1]]
        );
        let p0: Vec<_> = partitions_of(0).unwrap().collect();
        assert_eq!(p0, vec![Partition::empty()]);
        assert!(partitions_of(61).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        assert_eq!(partition_count(20), 627);
        for n in 0..=30 {
            let all: Vec<_> = partitions_of(n).unwrap().collect();
            assert_eq!(all.len() as u128, partition_count(n), "n = {n}");
            assert!(all.iter().all(|p| p.weight() == n));
            // strictly decreasing in reverse lexicographic order, so no repeats
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    fn sigma0(n: u64) -> u64 {
        (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
    }

    #[test]
    fn sporadic_series() {
        let s = av_series(&part![2, 1], 30).unwrap();
        assert_eq!(s.get(12), Some(6));
        for n in 1..=30 {
            assert_eq!(s.get(n as usize), Some(sigma0(n)));
        }
        let s = av_series(&part![3, 1], 30).unwrap();
        assert!(s.counts.iter().enumerate().all(|(i, &c)| c == i as u64 + 1));
        let s = av_series(&part![1], 20).unwrap();
        assert!(s.counts.iter().all(|&c| c == 0));
        assert_eq!(av_series(&Partition::empty(), 5), Err(Error::EmptyPartition));
    }

    #[test]
    fn threaded_series_matches_serial() {
        let mu = part![4, 2, 1];
        let serial = av_series(&mu, 30).unwrap();
        let threaded = av_series_capped(&mu, 30, ENUMERATION_CAP, 4).unwrap();
        assert_eq!(serial, threaded);
    }

    #[test]
    fn q_counts() {
        for n in 1..=15 {
            assert_eq!(q_count(&part![1], &part![2], n).unwrap(), 1);
            assert_eq!(q_count(&part![3, 1], &part![3, 1], n).unwrap(), 0);
        }
        let oracle = partitions_of(10)
            .unwrap()
            .filter(|a| {
                contains_oracle(a, &part![3, 1]).unwrap() && !contains_oracle(a, &part![4, 3, 1]).unwrap()
            })
            .count() as u64;
        assert_eq!(q_count(&part![3, 1], &part![4, 3, 1], 10).unwrap(), oracle);
    }
}
