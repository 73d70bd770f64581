//! Integer partitions viewed as Ferrers boards.
//!
//! A [`Partition`] stores its positive parts in weakly decreasing order and
//! caches its weight. Reads past the last stored part return 0, so a
//! partition behaves like the usual infinite sequence padded with zeros.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

/// Structural flags of a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeClass {
    pub is_strict: bool,
    pub is_super_strict: bool,
    pub is_staircase: bool,
    pub distinct_magnitudes: usize,
}

/// Side-by-side rectangles `widths[i] x heights[i]` with strictly decreasing
/// heights. Index 0 is the leftmost (tallest) rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectDecomp {
    pub widths: Vec<u32>,
    pub heights: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing(w[0], w[1]));
            }
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().map(|&p| u64::from(p)).sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The staircase `(j, j-1, ..., 1)`.
    pub fn staircase(j: u32) -> Self {
        Self::from_sorted((1..=j).rev().collect())
    }

    /// The rectangle with `rows` rows of length `width`, written `(width^rows)`.
    pub fn rectangle(width: u32, rows: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![width; rows])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// Componentwise sum; columns of the result are the columns of both.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Self::from_sorted(parts)
    }

    /// Multiplicity of the largest part.
    pub fn top_multiplicity(&self) -> usize {
        match self.parts.first() {
            None => 0,
            Some(&top) => self.parts.iter().take_while(|&&p| p == top).count(),
        }
    }

    /// `(p1 + 1, p1, p2, ...)`: the pattern reached by a north-east border step.
    pub fn ne_step(&self) -> Result<Partition> {
        let top = *self.parts.first().ok_or(Error::EmptyPartition)?;
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(top + 1);
        parts.extend_from_slice(&self.parts);
        Ok(Self::from_sorted(parts))
    }

    /// Transpose of the Ferrers board.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self::from_sorted(out)
    }

    /// Column heights, left to right.
    pub fn columns(&self) -> Vec<u32> {
        self.conjugate().into_parts()
    }

    /// Builds a partition from a multiset of column heights.
    pub fn from_columns(columns: Vec<u32>) -> Partition {
        Self::from_unsorted(columns).conjugate()
    }

    /// Adds columns of the given heights to the board.
    pub fn with_columns(&self, extra: &[u32]) -> Partition {
        let mut cols = self.columns();
        cols.extend(extra.iter().copied().filter(|&h| h > 0));
        Self::from_columns(cols)
    }

    pub fn distinct_magnitudes(&self) -> usize {
        let mut count = 0;
        let mut prev = None;
        for &p in &self.parts {
            if prev != Some(p) {
                count += 1;
                prev = Some(p);
            }
        }
        count
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_super_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1] + 2)
    }

    pub fn is_staircase(&self) -> bool {
        !self.is_empty()
            && self.part(self.len() - 1) == 1
            && self.parts.windows(2).all(|w| w[0] == w[1] + 1)
    }

    /// True if some part equals `size`.
    pub fn has_part(&self, size: u32) -> bool {
        size > 0 && self.parts.binary_search_by(|p| size.cmp(p)).is_ok()
    }

    pub fn classify(&self) -> ShapeClass {
        ShapeClass {
            is_strict: self.is_strict(),
            is_super_strict: self.is_super_strict(),
            is_staircase: self.is_staircase(),
            distinct_magnitudes: self.distinct_magnitudes(),
        }
    }

    /// The unique decomposition into rectangles of strictly decreasing height.
    pub fn rect_decomp(&self) -> Result<RectDecomp> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        // Runs of equal parts, read bottom to top, give the rectangles left to right.
        let mut widths = Vec::new();
        let mut heights = Vec::new();
        let mut prev = 0u32;
        let mut i = self.len();
        while i > 0 {
            let p = self.parts[i - 1];
            let mut j = i;
            while j > 0 && self.parts[j - 1] == p {
                j -= 1;
            }
            widths.push(p - prev);
            heights.push(i as u32);
            prev = p;
            i = j;
        }
        Ok(RectDecomp { widths, heights })
    }

    pub fn from_rect_decomp(d: &RectDecomp) -> Result<Partition> {
        d.validate()?;
        let rows = d.heights.first().copied().unwrap_or(0) as usize;
        let mut parts = vec![0u32; rows];
        for (&w, &h) in d.widths.iter().zip(&d.heights) {
            for p in parts.iter_mut().take(h as usize) {
                *p += w;
            }
        }
        Ok(Self::from_sorted(parts))
    }
}

impl RectDecomp {
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.widths.iter().zip(&self.heights).map(|(&w, &h)| u64::from(w) * u64::from(h)).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.widths.len() != self.heights.len() {
            return Err(Error::InvalidDecomp("widths and heights differ in length".into()));
        }
        if self.widths.is_empty() {
            return Err(Error::InvalidDecomp("no rectangles".into()));
        }
        if self.widths.iter().chain(&self.heights).any(|&v| v == 0) {
            return Err(Error::InvalidDecomp("entries must be positive".into()));
        }
        if self.heights.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidDecomp("heights must be strictly decreasing".into()));
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_partition(text)
    }
}

/// Parses `INT ("," INT)*` (commas or whitespace) or the literal `0`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::BadToken(text.to_string()));
    }
    if tokens == ["0"] {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let v: u32 = tok.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
        if v == 0 {
            return Err(Error::BadToken(tok.to_string()));
        }
        parts.push(v);
    }
    for w in parts.windows(2) {
        if w[0] < w[1] {
            return Err(Error::NotDecreasing(w[0], w[1]));
        }
    }
    Ok(Partition::from_sorted(parts))
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building a partition in tests and examples; panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("weakly decreasing parts")
    };
}
