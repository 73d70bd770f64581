//! Divisor sums, exact counts for small patterns, and the leading terms of
//! `|Av_n(mu)|` for strict `mu`.
//!
//! Counts are exact integers; predictions are `f64` diagnostics.

use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::enumeration::{av_series, d_count, DENSE_CAP, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::gf::gf_avoid;
use crate::partition::Partition;
use crate::shape::shape_of;

/// Euler's constant.
pub const GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// `ZETA[s]` is `zeta(s)` for `2 <= s <= 10`; entries 0 and 1 are unused.
pub const ZETA: [f64; 11] = [
    f64::NAN,
    f64::INFINITY,
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_2,
    1.082_323_233_711_138_1,
    1.036_927_755_143_37,
    1.017_343_061_984_449_2,
    1.008_349_277_381_923,
    1.004_077_356_197_944_4,
    1.002_008_392_826_082_1,
    1.000_994_575_127_818,
];

pub fn zeta(s: u32) -> f64 {
    match s {
        0 | 1 => f64::NAN,
        2..=10 => ZETA[s as usize],
        _ => (1..200u32).map(|m| f64::from(m).powi(-(s as i32))).sum(),
    }
}

/// `sigma_k(n) = sum_{d | n} d^k`.
pub fn sigma(k: u32, n: u64) -> BigUint {
    divisors(n).into_iter().map(|d| BigUint::from(d).pow(k)).sum()
}

pub fn sigma_f64(k: u32, n: u64) -> f64 {
    divisors(n).into_iter().map(|d| (d as f64).powi(k as i32)).sum()
}

/// `sum_{d | n} log(d) / d`.
pub fn sigma_prime_m1(n: u64) -> f64 {
    divisors(n).into_iter().map(|d| (d as f64).ln() / d as f64).sum()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `sigma_0(m)` for `m = 0..=n` by sieve (`table[0] = 0`).
pub fn sigma0_table(n: usize) -> Vec<u32> {
    let mut t = vec![0u32; n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            t[m] += 1;
        }
    }
    t
}

/// `|Av_n((3,2))| = 1 + sum_{m <= n} (sigma_0(m) - 1)`.
pub fn av32_exact(n: u64) -> u64 {
    1 + sigma0_table(n as usize).iter().skip(1).map(|&s| u64::from(s) - 1).sum::<u64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedForm {
    Exact(u128),
    Unsupported,
}

/// Nearest integer to `num / den` (`den > 0`), ties to even.
fn round_half_even(num: i128, den: i128) -> i128 {
    let q = num.div_euclid(den);
    let r = num.rem_euclid(den);
    match (2 * r).cmp(&den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => q + (q & 1),
    }
}

/// Exact counts for the patterns that have them.
pub fn closed_form(mu: &Partition, n: u64) -> ClosedForm {
    if n == 0 {
        return ClosedForm::Unsupported;
    }
    let m = n as i128;
    let s: i128 = if n.is_multiple_of(2) { 1 } else { -1 };
    let v: i128 = match mu.parts() {
        [1] => 0,
        [2] => 1,
        [2, 1] => return ClosedForm::Exact(divisors(n).len() as u128),
        [3] => m / 2 + 1,
        [3, 1] => m,
        [4] => round_half_even(m * m + 6 * m + 9, 12),
        [4, 1] => {
            let num = 2 * m * m + 10 * m + 3 + s * (2 * m - 3);
            debug_assert_eq!(num % 16, 0);
            num / 16
        }
        [4, 2] => (m * m + 3 + 3) / 4,
        // doubled to clear the inner halves
        [5] => round_half_even(2 * m * m * m + 30 * m * m + (135 + 9 * s) * m + 188 + 36 * s, 288),
        _ => return ClosedForm::Unsupported,
    };
    ClosedForm::Exact(v as u128)
}

/// Leading term `c * f(n) * log^L n / zeta(s)`, where `f(n)` is `n^p` or `sigma_s(n)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub n_power: u32,
    pub log_power: u32,
    /// Rational coefficient `(numerator, denominator)`.
    pub constant: (u64, u64),
    pub zeta_divisor: Option<u32>,
    /// When set, `sigma_s(n)` replaces `n^n_power`.
    pub sigma_index: Option<u32>,
    pub label: String,
}

impl Prediction {
    pub fn eval(&self, n: u64) -> f64 {
        let base = match self.sigma_index {
            Some(s) => sigma_f64(s, n),
            None => (n as f64).powi(self.n_power as i32),
        };
        let c = self.constant.0 as f64 / self.constant.1 as f64;
        let z = self.zeta_divisor.map_or(1.0, zeta);
        c * base * (n as f64).ln().powi(self.log_power as i32) / z
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.constant;
        let mut s = if b == 1 { format!("{a}") } else { format!("{a}/{b}") };
        match self.sigma_index {
            Some(i) => s.push_str(&format!(" * sigma_{i}(n)")),
            None if self.n_power == 1 => s.push_str(" * n"),
            None if self.n_power > 1 => s.push_str(&format!(" * n^{}", self.n_power)),
            None => {}
        }
        match self.log_power {
            0 => {}
            1 => s.push_str(" * log n"),
            l => s.push_str(&format!(" * log^{l} n")),
        }
        if let Some(z) = self.zeta_divisor {
            s.push_str(&format!(" / zeta({z})"));
        }
        write!(f, "{s}")
    }
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).product()
}

fn reduced(num: u64, den: u64) -> (u64, u64) {
    let r = Ratio::new(num, den);
    (*r.numer(), *r.denom())
}

/// Leading term: divisor sums for staircases, the
/// `n^(k-1) log^l n / (l! (k-1)! prod (k-l-a_j-j))` form otherwise.
pub fn predict(mu: &Partition) -> Result<Prediction> {
    let s = shape_of(mu)?;
    let k = s.k;
    if s.is_staircase {
        return Ok(match k {
            1 => Prediction {
                n_power: 0,
                log_power: 0,
                constant: (1, 1),
                zeta_divisor: None,
                sigma_index: Some(0),
                label: "staircase k=1".into(),
            },
            2 => Prediction {
                n_power: 1,
                log_power: 2,
                constant: (1, 2),
                zeta_divisor: Some(2),
                sigma_index: Some(1),
                label: "staircase k=2".into(),
            },
            _ => Prediction {
                n_power: k - 1,
                log_power: k,
                constant: (1, factorial(k) * factorial(k - 1)),
                zeta_divisor: Some(k),
                sigma_index: Some(k - 1),
                label: format!("staircase k={k}"),
            },
        });
    }
    let gap = i64::from(s.gap());
    let mut prod: u64 = 1;
    for j in 0..s.gap() as usize {
        let factor = gap - i64::from(s.a(j)) - j as i64;
        if factor <= 0 {
            return Err(Error::DegenerateProduct { pattern: mu.to_string(), factor });
        }
        prod *= factor as u64;
    }
    Ok(Prediction {
        n_power: k - 1,
        log_power: s.ell,
        constant: reduced(1, factorial(s.ell) * factorial(k - 1) * prod),
        zeta_divisor: None,
        sigma_index: None,
        label: "general".into(),
    })
}

/// The leading term as printed in the table of small patterns, where it
/// differs from [`predict`].
pub fn table_variant(mu: &Partition) -> Option<Prediction> {
    let p = |n_power, log_power, constant, zeta_divisor, sigma_index| Prediction {
        n_power,
        log_power,
        constant,
        zeta_divisor,
        sigma_index,
        label: "table-variant".into(),
    };
    match mu.parts() {
        [4, 3, 1] => Some(p(3, 1, (1, 2), None, None)),
        [4, 3, 2] => Some(p(3, 2, (1, 4), None, None)),
        [4, 3, 2, 1] => Some(p(2, 3, (1, 6), Some(3), Some(2))),
        _ => None,
    }
}

/// Two-term expansions for `(3,2,1)`: the leading term plus
/// `sign * 2 n sigma'_{-1}(n) log n / zeta(2)`. `sign = -1` comes from expanding
/// the `D_n` count, `+1` is the sign printed in the table.
pub fn refined_321(n: u64, sign: f64) -> f64 {
    let nf = n as f64;
    let lead = sigma_f64(1, n) * nf.ln().powi(2) / (2.0 * ZETA[2]);
    lead + sign * 2.0 * nf * sigma_prime_m1(n) * nf.ln() / ZETA[2]
}

/// Where an exact count came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountSource {
    ClosedForm,
    Av32,
    StaircaseSplit,
    GeneratingFunction,
    BruteForce,
}

/// Largest `n` at which the staircase split is used. Up to two rectangles
/// the memoised count stays sparse; beyond that the layered count is used.
pub fn staircase_split_cap(k: u32) -> u64 {
    if k <= 2 {
        1 << 20
    } else {
        DENSE_CAP
    }
}

pub const GF_SERIES_CAP: u64 = 4000;
pub const AV32_CAP: u64 = 50_000_000;

/// `|Av_n(stair(k+1))| = sum_{j=1..=k} |D_n(stair(j+1))|`, by peeling off
/// partitions with exactly `j` distinct magnitudes.
pub fn staircase_count(k: u32, n: u64) -> Result<u128> {
    (1..=k).map(|j| d_count(&Partition::staircase(j + 1), n)).sum()
}

/// Exact `|Av_n(mu)|` from the cheapest applicable method.
pub fn exact_count(mu: &Partition, n: u64) -> Result<(u128, CountSource)> {
    if let ClosedForm::Exact(v) = closed_form(mu, n) {
        return Ok((v, CountSource::ClosedForm));
    }
    if mu.parts() == [3, 2] && n <= AV32_CAP {
        return Ok((u128::from(av32_exact(n)), CountSource::Av32));
    }
    if mu.is_staircase() && n <= staircase_split_cap(mu.largest() - 1) {
        return Ok((staircase_count(mu.largest() - 1, n)?, CountSource::StaircaseSplit));
    }
    if mu.is_super_strict() && n <= GF_SERIES_CAP {
        let s = gf_avoid(mu)?.integer_series(n as usize)?;
        let v = s[n as usize].to_u128().ok_or_else(|| Error::Invariant(format!("negative count at n = {n}")))?;
        return Ok((v, CountSource::GeneratingFunction));
    }
    if (1..=ENUMERATION_CAP).contains(&n) {
        let v = av_series(mu, n)?.counts[n as usize - 1];
        return Ok((u128::from(v), CountSource::BruteForce));
    }
    Err(Error::NoExactSource { pattern: mu.to_string(), n })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub n: u64,
    pub observed: u128,
    pub predicted: f64,
    pub ratio: f64,
    pub source: CountSource,
}

pub fn ratio_report(mu: &Partition, ns: &[u64]) -> Result<Vec<RatioRow>> {
    let pred = predict(mu)?;
    ns.iter()
        .map(|&n| {
            let (observed, source) = exact_count(mu, n)?;
            let predicted = pred.eval(n);
            Ok(RatioRow { n, observed, predicted, ratio: observed as f64 / predicted, source })
        })
        .collect()
}

/// One row of the table of small patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub pattern: &'static [u32],
    pub gf: Option<&'static str>,
    pub count: &'static str,
    pub oeis: &'static str,
}

pub const TABLE1: &[TableRow] = &[
    TableRow { pattern: &[1], gf: Some("0"), count: "0", oeis: "-" },
    TableRow { pattern: &[2], gf: Some("1/(1-z)"), count: "1", oeis: "A000012" },
    TableRow { pattern: &[2, 1], gf: None, count: "sigma_0(n)", oeis: "A000005" },
    TableRow { pattern: &[3], gf: Some("1/((1-z)(1-z^2))"), count: "floor(n/2) + 1", oeis: "A004526" },
    TableRow { pattern: &[3, 1], gf: Some("1/(1-z)^2"), count: "n", oeis: "A000027" },
    TableRow { pattern: &[3, 2], gf: None, count: "n log n + (2 gamma - 2) n + O(n^(131/416))", oeis: "A320226" },
    TableRow {
        pattern: &[3, 2, 1],
        gf: None,
        count: "sigma_1(n) log^2 n / (2 zeta(2)) + 2 n sigma'_{-1}(n) log n / zeta(2) + O(sigma_1(n) log n)",
        oeis: "A265250",
    },
    TableRow { pattern: &[4], gf: Some("1/((1-z)(1-z^2)(1-z^3))"), count: "[(n^2 + 6n + 9)/12]", oeis: "A001399" },
    TableRow {
        pattern: &[4, 1],
        gf: Some("z(z^2 - z - 1)/((z - 1)^3(z + 1)^2)"),
        count: "(2n^2 + 10n + 3 + (-1)^n (2n - 3))/16",
        oeis: "A117142",
    },
    TableRow { pattern: &[4, 2], gf: Some("(1-z+z^3)/((1-z)^2(1-z^2))"), count: "ceil((n^2 + 3)/4)", oeis: "A033638" },
    TableRow { pattern: &[4, 2, 1], gf: None, count: "n^2/2 - n log n + (3/2 - 2 gamma) n + O(n^(131/416))", oeis: "A309097" },
    TableRow { pattern: &[4, 3], gf: None, count: "n^2 log n / 4 - (9/8 - gamma/2) n^2 + O(n^(3/2))", oeis: "A309098" },
    TableRow { pattern: &[4, 3, 1], gf: None, count: "n^3 log n / 2 + O(n^3)", oeis: "A309099" },
    TableRow { pattern: &[4, 3, 2], gf: None, count: "n^3 log^2 n / 4 + O(n^3 log n)", oeis: "A309194" },
    TableRow {
        pattern: &[4, 3, 2, 1],
        gf: None,
        count: "sigma_2(n) log^3 n / (6 zeta(3)) + O(n^2 log^2 n)",
        oeis: "A309058",
    },
    TableRow {
        pattern: &[5],
        gf: Some("1/((1-z)(1-z^2)(1-z^3)(1-z^4))"),
        count: "[(n^3 + 15n^2 + ((135 + 9(-1)^n)/2) n + 94 + 18(-1)^n)/144]",
        oeis: "A001400",
    },
    TableRow {
        pattern: &[5, 1],
        gf: Some("z(z^5-z^4-z^3+z+1)/((z-1)^4(z+1)(z^2+z+1)^2)"),
        count: "quasi-polynomial in n and floor((n+2)/3) + O(1)",
        oeis: "A117143",
    },
    TableRow {
        pattern: &[5, 2],
        gf: Some("-z(z^7 - 2z^5 + z^3 + z^2 - z - 1)/((z - 1)^4(z + 1)^2(z^2 + z + 1))"),
        count: "(n^3 + 12n^2 + ((15 + 9(-1)^n)/2) n)/72 + O(1)",
        oeis: "A136185",
    },
];

impl TableRow {
    pub fn partition(&self) -> Partition {
        Partition::new(self.pattern.to_vec()).expect("table patterns are partitions")
    }
}

/// Partial sums `sum_{m <= n} sigma_k(m)` as `f64`, by sieve.
pub fn sigma_partial_sum(k: u32, n: u64) -> f64 {
    let n = n as usize;
    let mut total = 0.0;
    for d in 1..=n {
        // d divides floor(n / d) of the integers up to n
        total += (d as f64).powi(k as i32) * (n / d) as f64;
    }
    total
}
