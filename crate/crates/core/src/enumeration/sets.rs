use crate::error::{Error, Result};
use crate::partition::Partition;

fn top_columns(alpha: &Partition) -> Result<usize> {
    match alpha.top_multiplicity() {
        0 => Err(Error::EmptyPartition),
        m => Ok(m),
    }
}

/// `{ alpha + (1^c) : 0 < c <= m(alpha) }`.
pub fn set_e(alpha: &Partition) -> Result<Vec<Partition>> {
    let m = top_columns(alpha)?;
    Ok((1..=m).map(|c| alpha.add(&Partition::rectangle(1, c))).collect())
}

/// `{ alpha + (w^m(alpha)) : 0 <= w <= wmax }`.
pub fn set_m(alpha: &Partition, wmax: u32) -> Result<Vec<Partition>> {
    let m = top_columns(alpha)?;
    Ok((0..=wmax).map(|w| alpha.add(&Partition::rectangle(w, m))).collect())
}

/// `{ alpha + (w^m(alpha)) + (1^c) : 0 <= w <= wmax, 0 < c < m(alpha) }`.
pub fn set_n(alpha: &Partition, wmax: u32) -> Result<Vec<Partition>> {
    let m = top_columns(alpha)?;
    let mut out = Vec::new();
    for w in 0..=wmax {
        let widened = alpha.add(&Partition::rectangle(w, m));
        for c in 1..m {
            out.push(widened.add(&Partition::rectangle(1, c)));
        }
    }
    Ok(out)
}
