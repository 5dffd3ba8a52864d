//! Integer partitions and the orders on them.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers; the
//! empty sequence is the zero partition. Partitions index Schur functors
//! throughout the crate. This module also provides:
//!
//! - [`delta`]: the inverse triangular-number staircase, the unique `d >= 1`
//!   with `C(d,2) <= x < C(d+1,2)`;
//! - [`HookIndex`] and [`hook_partition`]: hooks `(alpha+1, 1, ..., 1)` of
//!   weight `k`;
//! - [`staircase_partition`]: the near-rectangular partition of `k` with `m`
//!   rows, `s` of size `l+1` and `m-s` of size `l` where `k = m*l + s`;
//! - [`dominates`]: the dominance order generalized to arbitrary weights by
//!   scaling both partitions to total 1, evaluated with exact cross-multiplied
//!   integer sums.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0} precedes {1}")]
    NotWeaklyDecreasing(i64, i64),
    #[error("negative part: {0}")]
    NegativePart(i64),
    #[error("{name} out of range: {value}")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("floor(k/m) must be at least 1: k={k}, m={m}")]
    TooSmall { k: u32, m: u32 },
    #[error("dominance is not defined for the zero partition")]
    ZeroPartition,
    #[error("cannot parse partition from {0:?}")]
    InvalidText(String),
}

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from raw integers, stripping trailing zeros.
    /// Rejects negative entries and sequences that increase anywhere.
    pub fn make(raw: &[i64]) -> Result<Self, PartitionError> {
        for w in raw.windows(2) {
            if w[0] < w[1] {
                return Err(PartitionError::NotWeaklyDecreasing(w[0], w[1]));
            }
        }
        if let Some(&x) = raw.iter().find(|&&x| x < 0) {
            return Err(PartitionError::NegativePart(x));
        }
        let parts = raw
            .iter()
            .take_while(|&&x| x > 0)
            .map(|&x| x as u32)
            .collect();
        Ok(Partition { parts })
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_parts(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `idx` (0-based), or 0 beyond the length.
    pub fn part(&self, idx: usize) -> u32 {
        self.parts.get(idx).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts }
    }

    /// Every part multiplied by `factor`; `factor = 0` yields the zero partition.
    pub fn scaled(&self, factor: u32) -> Partition {
        if factor == 0 {
            return Partition::zero();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * factor).collect(),
        }
    }

    /// Canonical text syntax: comma-separated decreasing integers, empty
    /// string for the zero partition.
    pub fn from_text(text: &str) -> Result<Self, PartitionError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::zero());
        }
        let mut raw = Vec::new();
        for piece in trimmed.split(',') {
            let n: i64 = piece
                .trim()
                .parse()
                .map_err(|_| PartitionError::InvalidText(text.to_string()))?;
            raw.push(n);
        }
        Partition::make(&raw)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::from_text(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Partition::from_text(&text).map_err(serde::de::Error::custom)
    }
}

/// `x*(x-1)/2`, the binomial coefficient C(x,2) as a polynomial in `x`.
pub fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The unique `d >= 1` with `C(d,2) <= x < C(d+1,2)`.
pub fn delta(x: u64) -> u64 {
    // d(d-1)/2 <= x  <=>  d <= (1 + sqrt(1+8x)) / 2
    let mut d = (1 + 8 * x).isqrt().div_ceil(2);
    if d == 0 {
        d = 1;
    }
    while d * (d - 1) / 2 > x {
        d -= 1;
    }
    while d * (d + 1) / 2 <= x {
        d += 1;
    }
    d
}

/// Index of a hook: weight `k` and arm length `alpha` with `0 <= alpha < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookIndex {
    k: u32,
    alpha: u32,
}

impl HookIndex {
    pub fn new(k: u32, alpha: u32) -> Result<Self, PartitionError> {
        if k == 0 {
            return Err(PartitionError::OutOfRange {
                name: "k",
                value: k as i64,
            });
        }
        if alpha >= k {
            return Err(PartitionError::OutOfRange {
                name: "alpha",
                value: alpha as i64,
            });
        }
        Ok(HookIndex { k, alpha })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// The partition `(alpha+1, 1^(k-alpha-1))` of weight `k`.
    pub fn partition(&self) -> Partition {
        let mut parts = vec![1u32; (self.k - self.alpha) as usize];
        parts[0] = self.alpha + 1;
        Partition::from_parts(parts)
    }
}

/// Convenience wrapper: the hook partition `(alpha+1, 1^(k-alpha-1))`.
pub fn hook_partition(k: u32, alpha: u32) -> Result<Partition, PartitionError> {
    Ok(HookIndex::new(k, alpha)?.partition())
}

/// A partition of `k` into `m` nearly equal rows: `s` rows of size `l+1`
/// followed by `m-s` rows of size `l`, where `k = m*l + s` and `0 <= s < m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    pub l: u32,
    pub s: u32,
    pub partition: Partition,
}

pub fn staircase_partition(k: u32, m: u32) -> Result<Staircase, PartitionError> {
    if k == 0 {
        return Err(PartitionError::OutOfRange { name: "k", value: 0 });
    }
    if m == 0 {
        return Err(PartitionError::OutOfRange { name: "m", value: 0 });
    }
    let l = k / m;
    if l == 0 {
        return Err(PartitionError::TooSmall { k, m });
    }
    let s = k - m * l;
    let mut parts = vec![l; m as usize];
    for p in parts.iter_mut().take(s as usize) {
        *p = l + 1;
    }
    Ok(Staircase {
        l,
        s,
        partition: Partition::from_parts(parts),
    })
}

/// Outcome of a dominance comparison between two non-zero partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    StrictlyDominates,
    Equivalent,
    Dominated,
    Incomparable,
}

/// Compares `i` against `j` in the dominance order after scaling both to
/// weight 1. Partial sums are compared exactly as `|j| * sum(i, ..l)` versus
/// `|i| * sum(j, ..l)`; partial sums past a partition's length saturate at its
/// weight. `Equivalent` means mutual dominance, i.e. proportionality.
pub fn dominates(i: &Partition, j: &Partition) -> Result<Dominance, PartitionError> {
    if i.is_empty() || j.is_empty() {
        return Err(PartitionError::ZeroPartition);
    }
    let wi = i.weight();
    let wj = j.weight();
    let rows = i.len().max(j.len());
    let mut sum_i = 0u64;
    let mut sum_j = 0u64;
    let mut ge = true;
    let mut le = true;
    for idx in 0..rows {
        sum_i += i.part(idx) as u64;
        sum_j += j.part(idx) as u64;
        let lhs = wj * sum_i;
        let rhs = wi * sum_j;
        if lhs < rhs {
            ge = false;
        }
        if lhs > rhs {
            le = false;
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equivalent,
        (true, false) => Dominance::StrictlyDominates,
        (false, true) => Dominance::Dominated,
        (false, false) => Dominance::Incomparable,
    })
}

/// All partitions of `weight` with at most `max_len` parts, in lexicographic
/// order.
pub fn partitions_of_weight(weight: u64, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u64, max_part: u64, slots: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(stack.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = max_part.min(remaining);
        for next in 1..=hi {
            // the remaining weight must fit in the remaining slots
            if remaining - next <= next * (slots as u64 - 1) {
                stack.push(next as u32);
                rec(remaining - next, next, slots - 1, stack, out);
                stack.pop();
            }
        }
    }
    rec(weight, weight.max(1), max_len, &mut stack, &mut out);
    out.sort();
    out
}
