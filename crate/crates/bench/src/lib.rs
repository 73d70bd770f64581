//! Fixtures shared by the benchmarks.

use partav::Partition;

/// Super-strict patterns with operator words of increasing length.
pub fn gf_patterns() -> Vec<Partition> {
    ["5,2", "6,3,1", "8,5,3", "9,6,3,1", "11,8,5,2"]
        .iter()
        .map(|s| partav::parse_partition(s).expect("fixture literal"))
        .collect()
}

/// All partitions of `n`, the usual haystacks for containment.
pub fn haystacks(n: u64) -> Vec<Partition> {
    partav::enumeration::partitions_of(n).expect("below the enumeration cap").collect()
}
