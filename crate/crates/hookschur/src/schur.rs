//! Exact GL_e character combinatorics in the Schur basis.
//!
//! A [`SchurVector`] is a finite integer combination of partitions, restricted
//! to a rank bound `e`: keys of length greater than `e` are dropped at
//! insertion, matching the vanishing of the corresponding GL_e functors.
//!
//! Products are computed by the Littlewood-Richardson rule: coefficients
//! `c^K_{I,J}` count skew tableaux of shape `K/I` and content `J` that are
//! column-strict and whose reverse reading word is a lattice word. The
//! expansion of `s_I * s_J` is enumerated as chains of horizontal strips and
//! memoized on `(I, J)` before any rank restriction; the restriction is
//! applied when a product is read off.
//!
//! [`oracle_product_monomial`] is a deliberately disjoint code path used to
//! cross-check the rule: it expands both factors into monomials via
//! semistandard tableaux, multiplies the polynomials, and decomposes the
//! result by repeated subtraction of the lexicographically leading Schur
//! polynomial.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;
use thiserror::Error;

use crate::guards::Guards;
use crate::partitions::{dominates, partitions_of_weight, Dominance, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("rank bounds differ: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("partition length {len} exceeds rank bound {rank}")]
    LengthExceedsRank { len: usize, rank: u32 },
    #[error("enumeration exceeds guard: {what} = {value}, limit {limit}")]
    OracleTooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A finite integer combination of partitions, viewed as a GL_e character in
/// the Schur basis. Partitions longer than the rank bound are dropped on
/// insertion; zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    rank: u32,
    terms: BTreeMap<Partition, i64>,
}

#[derive(Serialize)]
struct TermJson {
    partition: String,
    mult: i64,
}

impl SchurVector {
    pub fn zero(rank: u32) -> Self {
        SchurVector {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit element `s_()`.
    pub fn unit(rank: u32) -> Self {
        let mut v = SchurVector::zero(rank);
        v.add_term(Partition::zero(), 1);
        v
    }

    /// A single basis vector; errors when the partition does not fit the rank.
    pub fn single(i: &Partition, rank: u32) -> Result<Self, SchurError> {
        if i.len() > rank as usize {
            return Err(SchurError::LengthExceedsRank {
                len: i.len(),
                rank,
            });
        }
        let mut v = SchurVector::zero(rank);
        v.add_term(i.clone(), 1);
        Ok(v)
    }

    /// A single term, silently dropped when its length exceeds the rank.
    pub fn with_term(rank: u32, i: Partition, mult: i64) -> Self {
        let mut v = SchurVector::zero(rank);
        v.add_term(i, mult);
        v
    }

    /// Adds `mult * s_i`, applying the rank restriction.
    pub fn add_term(&mut self, i: Partition, mult: i64) {
        if mult == 0 || i.len() > self.rank as usize {
            return;
        }
        let entry = self.terms.entry(i);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn multiplicity(&self, i: &Partition) -> i64 {
        self.terms.get(i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// JSON form: a list of `{partition, mult}` objects sorted
    /// lexicographically by partition.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(p, &m)| TermJson {
                partition: p.to_string(),
                mult: m,
            })
            .collect();
        serde_json::to_value(rows).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson expansion by horizontal-strip chains
// ---------------------------------------------------------------------------

type LrMap = BTreeMap<Partition, u64>;
type LrCache = RwLock<HashMap<(Partition, Partition), Arc<LrMap>>>;

static LR_CACHE: OnceLock<LrCache> = OnceLock::new();

/// Full expansion of `s_i * s_j` with no rank bound, memoized on `(i, j)`.
pub(crate) fn lr_expand(i: &Partition, j: &Partition) -> Arc<LrMap> {
    let cache = LR_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (i.clone(), j.clone());
    if let Some(hit) = cache.read().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(lr_expand_uncached(i, j));
    let mut w = cache.write().expect("lr cache poisoned");
    w.entry(key).or_insert(computed).clone()
}

fn lr_expand_uncached(i: &Partition, j: &Partition) -> LrMap {
    let mut out = LrMap::new();
    let capacity = i.len() + j.len();
    let mut shape: Vec<u32> = i.parts().to_vec();
    shape.resize(capacity.max(1), 0);
    let mut labels: Vec<Vec<u8>> = vec![Vec::new(); capacity.max(1)];
    let strip_sizes: Vec<u32> = j.parts().to_vec();
    place_strips(&mut shape, &mut labels, &strip_sizes, 0, &mut out);
    out
}

fn place_strips(
    shape: &mut Vec<u32>,
    labels: &mut [Vec<u8>],
    strips: &[u32],
    level: usize,
    out: &mut LrMap,
) {
    if level == strips.len() {
        if ballot_ok(labels, strips.len()) {
            let parts: Vec<u32> = shape.iter().copied().take_while(|&p| p > 0).collect();
            *out.entry(Partition::from_parts(parts)).or_insert(0) += 1;
        }
        return;
    }
    let base = shape.clone();
    let extensions = horizontal_strip_extensions(&base, strips[level]);
    for ext in extensions {
        for (row, (&new, &old)) in ext.iter().zip(base.iter()).enumerate() {
            for _ in old..new {
                labels[row].push(level as u8 + 1);
            }
        }
        *shape = ext;
        place_strips(shape, labels, strips, level + 1, out);
        for (row, (&new, &old)) in shape.iter().zip(base.iter()).enumerate() {
            for _ in old..new {
                labels[row].pop();
            }
        }
        *shape = base.clone();
    }
}

/// All shapes obtained by adding a horizontal strip of `size` boxes: row `r`
/// may grow up to the previous row's *old* length, so no two added boxes share
/// a column.
fn horizontal_strip_extensions(base: &[u32], size: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = base.to_vec();
    fn rec(base: &[u32], cur: &mut Vec<u32>, row: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if row == base.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if row == 0 { left } else { base[row - 1].saturating_sub(base[row]).min(left) };
        for add in 0..=cap {
            cur[row] = base[row] + add;
            rec(base, cur, row + 1, left - add, out);
        }
        cur[row] = base[row];
    }
    rec(base, &mut cur, 0, size, &mut out);
    out
}

/// Reverse reading word (rows top to bottom, right to left) must be a lattice
/// word: every prefix has at least as many `t` as `t+1`.
fn ballot_ok(labels: &[Vec<u8>], num_labels: usize) -> bool {
    let mut counts = vec![0u32; num_labels + 1];
    for row in labels {
        for &l in row.iter().rev() {
            let l = l as usize;
            counts[l] += 1;
            if l >= 2 && counts[l] > counts[l - 1] {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Skew expansion: contents of LR fillings of a fixed skew shape
// ---------------------------------------------------------------------------

/// Multiplicities `c^outer_{inner, K}` for every content `K` with at most
/// `max_label` rows, by direct enumeration of lattice column-strict fillings
/// of `outer/inner`.
pub(crate) fn lr_skew_content(
    outer: &Partition,
    inner: &Partition,
    max_label: usize,
) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if inner.len() > outer.len() {
        return out;
    }
    for r in 0..inner.len() {
        if inner.part(r) > outer.part(r) {
            return out;
        }
    }
    // Reverse reading order: the incremental lattice check below is exact.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for row in 0..outer.len() {
        for col in (inner.part(row)..outer.part(row)).rev() {
            cells.push((row, col as usize));
        }
    }
    if cells.is_empty() {
        out.insert(Partition::zero(), 1);
        return out;
    }
    let cap = max_label.min(cells.len());
    if cap == 0 {
        return out;
    }
    let mut grid: Vec<Vec<u8>> = (0..outer.len())
        .map(|r| vec![0u8; outer.part(r) as usize])
        .collect();
    let mut counts = vec![0u32; cap + 1];

    struct Dfs<'a> {
        cells: &'a [(usize, usize)],
        inner: &'a Partition,
        cap: usize,
        grid: Vec<Vec<u8>>,
        counts: Vec<u32>,
        out: BTreeMap<Partition, u64>,
    }

    impl Dfs<'_> {
        fn go(&mut self, idx: usize) {
            if idx == self.cells.len() {
                let parts: Vec<u32> = self.counts[1..]
                    .iter()
                    .copied()
                    .take_while(|&c| c > 0)
                    .collect();
                *self.out.entry(Partition::from_parts(parts)).or_insert(0) += 1;
                return;
            }
            let (row, col) = self.cells[idx];
            let right_bound = if col + 1 < self.grid[row].len() {
                self.grid[row][col + 1] as usize
            } else {
                self.cap
            };
            for label in 1..=right_bound.min(self.cap) {
                if row > 0 && col >= self.inner.part(row - 1) as usize {
                    // cell above is part of the skew shape: columns are strict
                    if label <= self.grid[row - 1][col] as usize {
                        continue;
                    }
                }
                if label >= 2 && self.counts[label] + 1 > self.counts[label - 1] {
                    continue;
                }
                self.grid[row][col] = label as u8;
                self.counts[label] += 1;
                self.go(idx + 1);
                self.counts[label] -= 1;
                self.grid[row][col] = 0;
            }
        }
    }

    let mut dfs = Dfs {
        cells: &cells,
        inner,
        cap,
        grid: std::mem::take(&mut grid),
        counts: std::mem::take(&mut counts),
        out,
    };
    dfs.go(0);
    dfs.out
}

// ---------------------------------------------------------------------------
// Products and derived operations
// ---------------------------------------------------------------------------

/// Bilinear extension of the Littlewood-Richardson rule; the result is
/// restricted to partitions of length at most the shared rank bound.
pub fn lr_product(u: &SchurVector, v: &SchurVector) -> Result<SchurVector, SchurError> {
    if u.rank != v.rank {
        return Err(SchurError::RankMismatch {
            left: u.rank,
            right: v.rank,
        });
    }
    let rank = u.rank;
    let mut out = SchurVector::zero(rank);
    for (iu, mu) in u.terms() {
        for (iv, mv) in v.terms() {
            let expansion = lr_expand(iu, iv);
            for (k, &c) in expansion.iter() {
                if k.len() <= rank as usize {
                    out.add_term(k.clone(), mu * mv * c as i64);
                }
            }
        }
    }
    Ok(out)
}

/// The `t`-fold product of `s_i` with itself at rank `e`; `t = 0` yields the
/// unit.
pub fn tensor_power(i: &Partition, t: u32, e: u32) -> Result<SchurVector, SchurError> {
    let base = SchurVector::single(i, e)?;
    let mut acc = SchurVector::unit(e);
    for _ in 0..t {
        acc = lr_product(&acc, &base)?;
    }
    Ok(acc)
}

/// Decomposition of `S_i(A + B)` over ranks `(ea, eb)`: all pairs `(J, K)`
/// with positive coefficient `c^i_{J,K}`, `len(J) <= ea`, `len(K) <= eb`.
pub fn branch_direct_sum(
    i: &Partition,
    ea: u32,
    eb: u32,
) -> BTreeMap<(Partition, Partition), u64> {
    let mut out = BTreeMap::new();
    for j in subpartitions(i) {
        if j.len() > ea as usize {
            continue;
        }
        for (k, c) in lr_skew_content(i, &j, eb as usize) {
            out.insert((j.clone(), k), c);
        }
    }
    out
}

/// All partitions contained in the diagram of `i`.
fn subpartitions(i: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(i: &Partition, row: usize, prev: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_parts(stack.clone()));
        if row == i.len() {
            return;
        }
        let hi = i.part(row).min(prev);
        for v in (1..=hi).rev() {
            stack.push(v);
            rec(i, row + 1, v, stack, out);
            stack.pop();
        }
    }
    rec(i, 0, u32::MAX, &mut stack, &mut out);
    out
}

/// `dim S_i(C^e)` by the hook-content product formula, exactly.
pub fn dimension(i: &Partition, e: u32) -> Result<u128, SchurError> {
    if i.len() > e as usize {
        return Err(SchurError::LengthExceedsRank {
            len: i.len(),
            rank: e,
        });
    }
    let conj = i.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for r in 0..i.len() {
        for c in 0..i.part(r) as usize {
            let content = e as i64 + c as i64 - r as i64;
            let arm = i.part(r) as i64 - 1 - c as i64;
            let leg = conj.part(c) as i64 - 1 - r as i64;
            num *= content as u128;
            den *= (arm + leg + 1) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1, "hook-content product must be integral");
    Ok(num / den)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

// ---------------------------------------------------------------------------
// Monomial oracle
// ---------------------------------------------------------------------------

type MonomialMap = BTreeMap<Vec<u32>, u64>;
type SsytCache = RwLock<HashMap<(Partition, u32), Arc<MonomialMap>>>;

static SSYT_CACHE: OnceLock<SsytCache> = OnceLock::new();

/// Monomial expansion of the Schur polynomial `s_shape(x_1, ..., x_e)` by
/// enumeration of semistandard tableaux: content vector -> count.
fn ssyt_monomials(shape: &Partition, e: u32) -> Arc<MonomialMap> {
    let cache = SSYT_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (shape.clone(), e);
    if let Some(hit) = cache.read().expect("ssyt cache poisoned").get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(ssyt_monomials_uncached(shape, e));
    let mut w = cache.write().expect("ssyt cache poisoned");
    w.entry(key).or_insert(computed).clone()
}

fn ssyt_monomials_uncached(shape: &Partition, e: u32) -> MonomialMap {
    let mut out = MonomialMap::new();
    if shape.len() > e as usize {
        return out;
    }
    if shape.is_empty() {
        out.insert(vec![0; e as usize], 1);
        return out;
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; shape.part(r) as usize])
        .collect();
    let mut content = vec![0u32; e as usize];
    fn rec(
        shape: &Partition,
        e: u32,
        row: usize,
        col: usize,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        out: &mut MonomialMap,
    ) {
        if row == shape.len() {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        let (nrow, ncol) = if col + 1 < shape.part(row) as usize {
            (row, col + 1)
        } else {
            (row + 1, 0)
        };
        let left = if col > 0 { grid[row][col - 1] } else { 1 };
        let above = if row > 0 && col < shape.part(row - 1) as usize {
            grid[row - 1][col] + 1
        } else {
            1
        };
        for v in left.max(above)..=e {
            grid[row][col] = v;
            content[v as usize - 1] += 1;
            rec(shape, e, nrow, ncol, grid, content, out);
            content[v as usize - 1] -= 1;
        }
        grid[row][col] = 0;
    }
    rec(shape, e, 0, 0, &mut grid, &mut content, &mut out);
    out
}

/// Independent cross-check for [`lr_product`]: multiply the monomial
/// expansions of `s_i` and `s_j` in `e` variables and decompose the product
/// by repeated subtraction of the lexicographically leading Schur polynomial.
pub fn oracle_product_monomial(
    i: &Partition,
    j: &Partition,
    e: u32,
) -> Result<SchurVector, SchurError> {
    oracle_product_monomial_with_guards(i, j, e, &Guards::default())
}

pub fn oracle_product_monomial_with_guards(
    i: &Partition,
    j: &Partition,
    e: u32,
    guards: &Guards,
) -> Result<SchurVector, SchurError> {
    let w = i.weight() + j.weight();
    if w > guards.max_oracle_weight {
        return Err(SchurError::OracleTooLarge {
            what: "combined weight",
            value: w,
            limit: guards.max_oracle_weight,
        });
    }
    if e > guards.max_oracle_rank {
        return Err(SchurError::OracleTooLarge {
            what: "rank",
            value: e as u64,
            limit: guards.max_oracle_rank as u64,
        });
    }
    let pi = ssyt_monomials(i, e);
    let pj = ssyt_monomials(j, e);
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (vi, &ci) in pi.iter() {
        for (vj, &cj) in pj.iter() {
            let sum: Vec<u32> = vi.iter().zip(vj.iter()).map(|(a, b)| a + b).collect();
            *acc.entry(sum).or_insert(0) += (ci * cj) as i64;
        }
    }
    let mut out = SchurVector::zero(e);
    while let Some((lead, coeff)) = acc.iter().next_back().map(|(v, &c)| (v.clone(), c)) {
        assert!(coeff > 0, "leading coefficient of a Schur-positive remainder");
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "leading exponent of a symmetric polynomial is dominant"
        );
        let lam = Partition::from_parts(lead.iter().copied().take_while(|&x| x > 0).collect());
        let expansion = ssyt_monomials(&lam, e);
        for (mv, &mc) in expansion.iter() {
            let newv = acc.get(mv).copied().unwrap_or(0) - coeff * mc as i64;
            if newv == 0 {
                acc.remove(mv);
            } else {
                acc.insert(mv.clone(), newv);
            }
        }
        out.add_term(lam, coeff);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// One-dimensional summands and dominance spot checks
// ---------------------------------------------------------------------------

/// Total multiplicity, in `s_i^t` at rank `e`, of the one-dimensional GL_e
/// characters: rectangles `(c, ..., c)` of length exactly `e`, with the zero
/// partition counting as the `c = 0` rectangle.
pub fn one_dim_multiplicity(i: &Partition, t: u32, e: u32) -> Result<i64, SchurError> {
    let power = tensor_power(i, t, e)?;
    let mut total = 0;
    for (k, m) in power.terms() {
        let rectangular = k.is_empty() || (k.len() == e as usize && k.part(0) == k.part(k.len() - 1));
        if rectangular {
            total += m;
        }
    }
    Ok(total)
}

/// Result of a [`dominance_spot_check`] run.
#[derive(Debug, Clone)]
pub struct SpotCheckReport {
    pub pass: bool,
    /// Partitions of the target weight dominated by the scaled partition.
    pub candidates: Vec<Partition>,
    /// Candidates that failed to appear in the tensor power.
    pub missing: Vec<Partition>,
}

/// Checks that every partition of weight `|j| * kfactor * |i|` with at most
/// as many rows as `i` dominated by `(kfactor * |j|) * i` occurs with
/// positive multiplicity in `s_i ^ (kfactor * |j|)` at rank `e`.
///
/// The row bound is the length of the scaled partition: candidates with more
/// rows than `i` need not occur unless the exponent is a large multiple of
/// `lcm(1, ..., e)` (the second symmetric power of a rank-3 bundle, squared,
/// has no three-row summand even though `(2,1,1)` is dominated by `(4)`).
pub fn dominance_spot_check(
    i: &Partition,
    j: &Partition,
    kfactor: u32,
    e: u32,
) -> Result<SpotCheckReport, SchurError> {
    dominance_spot_check_with_guards(i, j, kfactor, e, &Guards::default())
}

pub fn dominance_spot_check_with_guards(
    i: &Partition,
    j: &Partition,
    kfactor: u32,
    e: u32,
    guards: &Guards,
) -> Result<SpotCheckReport, SchurError> {
    if i.is_empty() || j.is_empty() {
        return Err(SchurError::Partition(PartitionError::ZeroPartition));
    }
    let target_weight = j.weight() * kfactor as u64 * i.weight();
    if target_weight > guards.max_spot_weight {
        return Err(SchurError::OracleTooLarge {
            what: "target weight",
            value: target_weight,
            limit: guards.max_spot_weight,
        });
    }
    let exponent = kfactor * j.weight() as u32;
    let scaled = i.scaled(exponent);
    let power = tensor_power(i, exponent, e)?;
    let max_rows = i.len().min(e as usize);
    let mut candidates = Vec::new();
    let mut missing = Vec::new();
    for cand in partitions_of_weight(target_weight, max_rows) {
        match dominates(&scaled, &cand)? {
            Dominance::StrictlyDominates | Dominance::Equivalent => {
                if power.multiplicity(&cand) <= 0 {
                    missing.push(cand.clone());
                }
                candidates.push(cand);
            }
            _ => {}
        }
    }
    Ok(SpotCheckReport {
        pass: missing.is_empty(),
        candidates,
        missing,
    })
}

/// Multiplicity of `S_j(A) (x) L^b` inside `S_i(A + L + ... + L)` with
/// `b = |i| - |j|` line-bundle copies, computed by peeling one rank-1 factor
/// at a time; `ea` is the rank of `A`. Intermediate steps use the rank of the
/// not-yet-peeled sum.
pub fn line_summand_multiplicity(i: &Partition, j: &Partition, ea: u32) -> u64 {
    if j.weight() > i.weight() {
        return 0;
    }
    let b = (i.weight() - j.weight()) as u32;
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(i.clone(), 1);
    for step in 0..b {
        let rank = ea + (b - step - 1);
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (shape, mult) in &acc {
            for ((peeled, _line_part), c) in branch_direct_sum(shape, rank, 1) {
                *next.entry(peeled).or_insert(0) += mult * c;
            }
        }
        acc = next;
    }
    acc.get(j).copied().unwrap_or(0)
}
