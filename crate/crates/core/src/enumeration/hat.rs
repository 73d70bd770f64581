//! The hat pattern `mu^`, the swapped patterns `mu^(i)` and the column
//! adjoining maps `Psi_m` defined on `D(mu^)`.

use crate::enumeration::in_d_set;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::shape::shape_of;

/// 1-based index `i > 1` of the least part with no part of size `mu_i + 1`.
/// `i` may be `len + 1`, in which case `mu_i = 0`.
fn hat_index(mu: &Partition) -> Result<usize> {
    if !mu.is_strict() {
        return Err(Error::NotStrict(mu.to_string()));
    }
    if mu.is_staircase() || mu.is_empty() {
        return Err(Error::StaircaseHasNoHat(mu.to_string()));
    }
    (2..=mu.len() + 1)
        .find(|&i| !mu.has_part(mu.part(i - 1) + 1))
        .ok_or_else(|| Error::StaircaseHasNoHat(mu.to_string()))
}

/// The part `mu_i` deleted when forming `mu^` (0 when a virtual zero part is used).
pub fn hat_removed_part(mu: &Partition) -> Result<u32> {
    Ok(mu.part(hat_index(mu)? - 1))
}

/// `(mu_1 - 1, ..., mu_{i-1} - 1, mu_{i+1}, ...)`.
pub fn mu_hat(mu: &Partition) -> Result<Partition> {
    let i = hat_index(mu)?;
    let p = mu.parts();
    let mut parts: Vec<u32> = p[..i - 1].iter().map(|&x| x - 1).collect();
    if i <= p.len() {
        parts.extend_from_slice(&p[i..]);
    }
    Ok(Partition::from_unsorted(parts))
}

/// `mu^(i)`: drop the part of size `i` and insert a part of size `k - l`,
/// for `k - l < i <= k`.
pub fn mu_sup(mu: &Partition, i: u32) -> Result<Partition> {
    let s = shape_of(mu)?;
    if s.is_staircase {
        return Err(Error::StaircaseHasNoHat(mu.to_string()));
    }
    if i <= s.gap() || i > s.k {
        return Err(Error::IndexOutOfRange { pattern: mu.to_string(), index: i, lo: s.gap(), hi: s.k });
    }
    let mut parts: Vec<u32> = mu.parts().iter().copied().filter(|&p| p != i).collect();
    parts.push(s.gap());
    Ok(Partition::from_unsorted(parts))
}

/// `Psi_m(alpha)` for `alpha` in `D(mu^)`.
pub fn psi(mu: &Partition, alpha: &Partition, m: u64) -> Result<Partition> {
    let hat = mu_hat(mu)?;
    if !in_d_set(&hat, alpha)? {
        return Err(Error::NotInDomain { alpha: alpha.to_string(), pattern: hat.to_string() });
    }
    let removed = hat_removed_part(mu)? as usize;
    let (q, d, r) = if removed == 0 {
        (0, 0, m)
    } else {
        let q = u64::from(alpha.rect_decomp()?.heights[removed - 1]);
        (q, m / q, m % q)
    };
    let mut extra = vec![q as u32; d as usize];
    extra.push(r as u32);
    Ok(alpha.with_columns(&extra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::contains;
    use crate::enumeration::{d_members, partitions_of};
    use crate::part;

    #[test]
    fn hat_examples() {
        assert_eq!(mu_hat(&part![7, 6, 4, 2]).unwrap(), part![6, 5, 2]);
        assert_eq!(hat_removed_part(&part![7, 6, 4, 2]).unwrap(), 4);
        assert_eq!(mu_hat(&part![4, 2]).unwrap(), part![3]);
        assert_eq!(mu_hat(&part![3, 2]).unwrap(), part![2, 1]);
        assert_eq!(hat_removed_part(&part![3, 2]).unwrap(), 0);
        assert!(matches!(mu_hat(&part![3, 2, 1]), Err(Error::StaircaseHasNoHat(_))));
        assert!(matches!(mu_hat(&part![3, 3]), Err(Error::NotStrict(_))));
        for mu in [part![6, 3, 2, 1], part![5, 2], part![4, 3, 1]] {
            assert!(mu_hat(&mu).unwrap().weight() < mu.weight());
        }
    }

    #[test]
    fn sup_examples() {
        assert_eq!(mu_sup(&part![4, 3, 2], 3).unwrap(), part![4, 2, 1]);
        assert_eq!(mu_sup(&part![4, 3, 1], 3).unwrap(), part![4, 2, 1]);
        let e = mu_sup(&part![4, 3, 1], 2).unwrap_err();
        assert!(matches!(e, Error::IndexOutOfRange { index: 2, .. }));
        for (mu, i) in [(part![4, 3, 2], 3), (part![6, 5, 4, 1], 4)] {
            let s = shape_of(&mu).unwrap();
            assert_eq!(mu_sup(&mu, i).unwrap().weight(), mu.weight() - u64::from(i) + u64::from(s.gap()));
        }
    }

    #[test]
    fn psi_lands_in_d_or_swapped_d_or_staircase_avoiders() {
        for mu in [part![6, 3, 2, 1], part![4, 2], part![4, 1], part![5, 3, 1], part![3, 2], part![5, 4, 1]] {
            let hat = mu_hat(&mu).unwrap();
            let s = shape_of(&mu).unwrap();
            let stair = Partition::staircase(s.k);
            let swapped: Vec<Partition> = (s.gap() + 1..=s.k).map(|i| mu_sup(&mu, i).unwrap()).collect();
            for w in 1..=12 {
                for alpha in d_members(&hat, w).unwrap() {
                    for m in 1..=8 {
                        let beta = psi(&mu, &alpha, m).unwrap();
                        assert_eq!(beta.weight(), w + m);
                        let ok = in_d_set(&mu, &beta).unwrap()
                            || swapped.iter().any(|p| in_d_set(p, &beta).unwrap())
                            || !contains(&beta, &stair);
                        assert!(ok, "{mu:?} {alpha:?} {m}");
                    }
                }
            }
        }
        let outside = partitions_of(6).unwrap().find(|a| !in_d_set(&part![3], a).unwrap()).unwrap();
        assert!(matches!(psi(&part![4, 2], &outside, 1), Err(Error::NotInDomain { .. })));
    }
}
