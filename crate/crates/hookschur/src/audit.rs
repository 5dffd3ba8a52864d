//! Mechanical bookkeeping audit for the induction behind the `2.2` guarantee.
//!
//! The induction runs over the finite set
//! `B = {(alpha, p, q) : max(0, k-e) <= alpha <= alpha0 + r0 - m,
//!       p0 + Q(alpha) <= p <= n, q0 + Q(alpha) <= q <= n}`
//! with `Q(alpha) = r0*(alpha - alpha0) - C(|alpha - alpha0|, 2)` and
//! `r0 = delta(n - p0 + C(m,2))` (or `q0` in q-mode). Each triple carries a
//! flag geometry `r = r0 + alpha0 - alpha`, `l = floor(k/r)`, `s = k - l*r`,
//! and the first-page decomposition of the associated spectral sequence is a
//! sum of hook terms weighted by the multiplicity function `n_s` generated by
//! `prod_{i=1..r} (1 + x^(r+1-i) z)`.
//!
//! The audits verify, point by point over a parameter grid, the integer facts
//! the induction relies on: every morphism target lands back in `B`, the
//! induction variable `L` strictly decreases along morphisms, the two `Q`
//! inequalities and the cutoff hold, and the positivity condition
//! `P + q + chi > dim Y` is equivalent to its reduced closed form on the
//! binding triples. Audits never stop at the first failure; they collect all
//! witnesses.
//!
//! Scalar formulas are evaluated formally even when `l = 0` (the reduction
//! identity only needs `k = l*r + s`); the strict accessors
//! [`flag_geometry`] and [`e1_terms`] reject that degenerate case.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{choose2, delta};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("{name} out of range: {value}")]
    OutOfRange { name: &'static str, value: i64 },
    #[error("degenerate flag: k={k} is smaller than r={r}")]
    DegenerateFlag { k: i64, r: i64 },
    #[error("multiplicity table guard exceeded: r={r}, limit {limit}")]
    OracleTooLarge { r: i64, limit: i64 },
}

/// Which variable anchors the induction: the cutoff inequality and the
/// induction variable `L` use `p` in p-mode and `q` in q-mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    P,
    Q,
}

/// Parameters of one audited induction instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditParams {
    pub n: i64,
    pub e: i64,
    pub k: i64,
    pub m: i64,
    pub alpha0: i64,
    pub p0: i64,
    pub q0: i64,
    pub mode: Mode,
}

impl AuditParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: i64,
        e: i64,
        k: i64,
        m: i64,
        alpha0: i64,
        p0: i64,
        q0: i64,
        mode: Mode,
    ) -> Result<Self, AuditError> {
        for (name, value) in [("n", n), ("e", e), ("k", k), ("m", m)] {
            if value < 1 {
                return Err(AuditError::OutOfRange { name, value });
            }
        }
        if alpha0 < 0 || alpha0 >= k {
            return Err(AuditError::OutOfRange {
                name: "alpha0",
                value: alpha0,
            });
        }
        if p0 < 0 || p0 > n {
            return Err(AuditError::OutOfRange { name: "p0", value: p0 });
        }
        if q0 < 0 || q0 > n {
            return Err(AuditError::OutOfRange { name: "q0", value: q0 });
        }
        if k / m < 1 {
            return Err(AuditError::OutOfRange { name: "k", value: k });
        }
        Ok(AuditParams {
            n,
            e,
            k,
            m,
            alpha0,
            p0,
            q0,
            mode,
        })
    }

    /// The anchor of `r0`: `p0` in p-mode, `q0` in q-mode.
    pub fn anchor0(&self) -> i64 {
        match self.mode {
            Mode::P => self.p0,
            Mode::Q => self.q0,
        }
    }

    /// `r0 = delta(n - anchor + C(m,2))`.
    pub fn r0(&self) -> i64 {
        delta((self.n - self.anchor0() + choose2(self.m)) as u64) as i64
    }

    /// Inclusive `alpha` range of `B`: `max(0, k-e)` to `alpha0 + r0 - m`.
    pub fn alpha_range(&self) -> (i64, i64) {
        (0.max(self.k - self.e), self.alpha0 + self.r0() - self.m)
    }
}

fn sgn(x: i64) -> i64 {
    x.signum()
}

/// `Q(alpha) = r0*(alpha - alpha0) - C(|alpha - alpha0|, 2)`.
pub fn q_offset(params: &AuditParams, alpha: i64) -> i64 {
    let d = alpha - params.alpha0;
    params.r0() * d - choose2(d.abs())
}

/// The induction variable `L(alpha, pos) = 2(n - pos) + alpha(2(r0+alpha0) - alpha)`.
pub fn l_value(params: &AuditParams, alpha: i64, pos: i64) -> i64 {
    2 * (params.n - pos) + alpha * (2 * (params.r0() + params.alpha0) - alpha)
}

/// An exact rational bound, with a sentinel for "no bound".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KBound {
    NegInfinity,
    Finite { num: i64, den: i64 },
}

impl KBound {
    fn finite(num: i64, den: i64) -> Self {
        debug_assert!(den > 0);
        // canonical form keeps derived equality consistent with the ordering
        let g = gcd_i64(num.abs(), den);
        KBound::Finite {
            num: num / g,
            den: den / g,
        }
    }

    pub fn floor(&self) -> Option<i64> {
        match self {
            KBound::NegInfinity => None,
            KBound::Finite { num, den } => Some(num.div_euclid(*den)),
        }
    }

    /// True when `value` strictly exceeds this bound.
    pub fn exceeded_by(&self, value: i64) -> bool {
        match self {
            KBound::NegInfinity => true,
            KBound::Finite { num, den } => value * den > *num,
        }
    }
}

impl PartialOrd for KBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KBound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (KBound::NegInfinity, KBound::NegInfinity) => Ordering::Equal,
            (KBound::NegInfinity, _) => Ordering::Less,
            (_, KBound::NegInfinity) => Ordering::Greater,
            (
                KBound::Finite { num: a, den: b },
                KBound::Finite { num: c, den: d },
            ) => (a * d).cmp(&(c * b)),
        }
    }
}

impl std::fmt::Display for KBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KBound::NegInfinity => f.write_str("-inf"),
            KBound::Finite { num, den } if *den == 1 => write!(f, "{num}"),
            KBound::Finite { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

impl Serialize for KBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// The per-step scalars `Q`, `L`, `A` and the weight bound `k(alpha)`.
///
/// `A(alpha) = n - p0 - Q(alpha) + r*alpha` and
/// `k(alpha) = (A - 1)(1 + 1/(r0 + alpha0 - alpha - 1))`, kept as an exact
/// rational with a `-inf` sentinel when `r0 + alpha0 - alpha = 1`. In q-mode
/// `L` is evaluated at the given `pos` as `L(alpha, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InductionScalars {
    pub q_offset: i64,
    pub l_value: i64,
    pub a_value: i64,
    pub k_bound: KBound,
}

pub fn induction_scalars(
    params: &AuditParams,
    alpha: i64,
    pos: i64,
) -> Result<InductionScalars, AuditError> {
    let r = params.r0() + params.alpha0 - alpha;
    if r < 1 {
        return Err(AuditError::OutOfRange { name: "r", value: r });
    }
    let q_off = q_offset(params, alpha);
    let a_value = params.n - params.p0 - q_off + r * alpha;
    let k_bound = if r == 1 {
        KBound::NegInfinity
    } else {
        KBound::finite((a_value - 1) * r, r - 1)
    };
    Ok(InductionScalars {
        q_offset: q_off,
        l_value: l_value(params, alpha, pos),
        a_value,
        k_bound,
    })
}

/// One triple of the induction set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleB {
    pub alpha: i64,
    pub p: i64,
    pub q: i64,
}

/// Complete, duplicate-free enumeration of `B`, ordered by `(alpha, p, q)`.
pub fn enumerate_b(params: &AuditParams) -> Vec<TripleB> {
    let (amin, amax) = params.alpha_range();
    let mut out = Vec::new();
    for alpha in amin..=amax {
        let q_off = q_offset(params, alpha);
        let pmin = 0.max(params.p0 + q_off);
        let qmin = 0.max(params.q0 + q_off);
        for p in pmin..=params.n {
            for q in qmin..=params.n {
                out.push(TripleB { alpha, p, q });
            }
        }
    }
    out
}

/// Scalars of the flag geometry attached to a triple: `r = r0 + alpha0 - alpha`,
/// `l = floor(k/r)`, `s = k - l*r`, the filtration degree `P`, the shift `chi`,
/// `sigma = r*s - C(s,2)` and the dimension `n + r(e-r) + s(r-s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlagGeometry {
    pub r: i64,
    pub l: i64,
    pub s: i64,
    pub p_degree: i64,
    pub chi: i64,
    pub sigma: i64,
    pub dim_y: i64,
}

fn flag_scalars(params: &AuditParams, alpha: i64, p: i64) -> Result<FlagGeometry, AuditError> {
    let r = params.r0() + params.alpha0 - alpha;
    if r < 1 {
        return Err(AuditError::OutOfRange { name: "r", value: r });
    }
    let l = params.k.div_euclid(r);
    let s = params.k - l * r;
    let p_degree = p - r * alpha + (l - 1) * choose2(r + 1) + r * s - choose2(s);
    let chi = (l - 1) * choose2(r) + r * s - choose2(s + 1) - (r - 1) * alpha;
    let sigma = r * s - choose2(s);
    let dim_y = params.n + r * (params.e - r) + s * (r - s);
    Ok(FlagGeometry {
        r,
        l,
        s,
        p_degree,
        chi,
        sigma,
        dim_y,
    })
}

pub fn flag_geometry(params: &AuditParams, alpha: i64, p: i64) -> Result<FlagGeometry, AuditError> {
    let geo = flag_scalars(params, alpha, p)?;
    if geo.l == 0 {
        return Err(AuditError::DegenerateFlag {
            k: params.k,
            r: geo.r,
        });
    }
    Ok(geo)
}

// ---------------------------------------------------------------------------
// Multiplicity tables
// ---------------------------------------------------------------------------

/// Coefficients `n_s(a)` of `prod_{i=1..r} (1 + x^(r+1-i) z)`: the number of
/// s-subsets of `{1, ..., r}` with sum `a`. `n_s(a) = 0` past
/// `sigma(s) = r*s - C(s,2)` and `n_s(sigma(s)) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub r: i64,
    rows: Vec<Vec<u64>>,
}

impl MultiplicityTable {
    pub fn value(&self, s: i64, a: i64) -> u64 {
        if s < 0 || a < 0 {
            return 0;
        }
        self.rows
            .get(s as usize)
            .and_then(|row| row.get(a as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn sigma(&self, s: i64) -> i64 {
        self.r * s - choose2(s)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

const NS_GUARD: i64 = 20;

static NS_CACHE: OnceLock<RwLock<HashMap<i64, Arc<MultiplicityTable>>>> = OnceLock::new();

fn ns_table_cached(r: i64) -> Result<Arc<MultiplicityTable>, AuditError> {
    if r < 1 {
        return Err(AuditError::OutOfRange { name: "r", value: r });
    }
    if r > NS_GUARD {
        return Err(AuditError::OracleTooLarge { r, limit: NS_GUARD });
    }
    let cache = NS_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().expect("ns cache poisoned").get(&r) {
        return Ok(hit.clone());
    }
    let max_a = (r * (r + 1) / 2) as usize;
    let mut rows = vec![vec![0u64; max_a + 1]; r as usize + 1];
    rows[0][0] = 1;
    for exp in 1..=r as usize {
        // factor (1 + x^exp z), applied for exp = r+1-i, i = r..1
        for s in (1..=r as usize).rev() {
            for a in (exp..=max_a).rev() {
                let add = rows[s - 1][a - exp];
                rows[s][a] += add;
            }
        }
    }
    let table = Arc::new(MultiplicityTable { r, rows });
    let mut w = cache.write().expect("ns cache poisoned");
    Ok(w.entry(r).or_insert(table).clone())
}

/// Exact expansion of the generating polynomial for `n_s`; guarded at `r <= 20`.
pub fn ns_table(r: i64) -> Result<MultiplicityTable, AuditError> {
    ns_table_cached(r).map(|arc| (*arc).clone())
}

// ---------------------------------------------------------------------------
// First-page terms
// ---------------------------------------------------------------------------

/// One summand of the first-page decomposition at column `p_prime`: a hook of
/// weight `k` with arm `beta`, in cohomology degree `q_target`, with
/// multiplicity `n_s(sigma + p - p' + r(beta - alpha))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct E1Term {
    pub beta: i64,
    pub q_target: i64,
    pub multiplicity: u64,
}

/// The formal first-page decomposition at column `p_prime` for the triple
/// `(alpha, p, q)`. `beta` ranges from `max(0, k-e)` to `floor((k-1)/r)`;
/// terms with zero multiplicity are omitted. The closed form is only known to
/// compute the page when `r = 1` or `k >= n - p + r*alpha + l`; see
/// [`e1_closed_form_valid`]. Callers must check that bound themselves — the
/// decomposition here is formal and the audits explore the boundary.
pub fn e1_terms(
    params: &AuditParams,
    alpha: i64,
    p: i64,
    q: i64,
    p_prime: i64,
) -> Result<Vec<E1Term>, AuditError> {
    let geo = flag_scalars(params, alpha, p)?;
    if geo.l == 0 {
        return Err(AuditError::DegenerateFlag {
            k: params.k,
            r: geo.r,
        });
    }
    let table = ns_table_cached(geo.r)?;
    let bmin = 0.max(params.k - params.e);
    let bmax = (params.k - 1).div_euclid(geo.r);
    let mut out = Vec::new();
    for beta in bmin..=bmax {
        let a = geo.sigma + p - p_prime + geo.r * (beta - alpha);
        let mult = table.value(geo.s, a);
        if mult > 0 {
            out.push(E1Term {
                beta,
                q_target: q + p_prime - p + alpha - beta,
                multiplicity: mult,
            });
        }
    }
    Ok(out)
}

/// Whether the closed-form first page is known to apply at `(alpha, p)`:
/// `r = 1` or `k >= n - p + r*alpha + l`.
pub fn e1_closed_form_valid(params: &AuditParams, alpha: i64, p: i64) -> Result<bool, AuditError> {
    let geo = flag_scalars(params, alpha, p)?;
    Ok(geo.r == 1 || params.k >= params.n - p + geo.r * alpha + geo.l)
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

/// A failing grid point with context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub alpha: i64,
    pub p: Option<i64>,
    pub q: Option<i64>,
    pub detail: String,
}

/// One named pass/fail verdict with all failure witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

fn check(name: &str, witnesses: Vec<Witness>) -> Check {
    Check {
        name: name.to_string(),
        pass: witnesses.is_empty(),
        witnesses,
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn anchor_of(mode: Mode, p: i64, q: i64) -> i64 {
    match mode {
        Mode::P => p,
        Mode::Q => q,
    }
}

/// Checks, for every triple of `B` and every page shift `M != 0`, that each
/// first-page target term satisfying the two morphism constraints lies in `B`
/// and strictly decreases the induction variable; also verifies the two `Q`
/// inequalities over the `alpha` range and the cutoff
/// `Q(r0 + alpha0 - m + 1) + anchor > n`.
pub fn morphism_audit(params: &AuditParams) -> Vec<Check> {
    morphism_audit_on(params, &enumerate_b(params))
}

fn morphism_audit_on(params: &AuditParams, b: &[TripleB]) -> Vec<Check> {
    let r0 = params.r0();
    let (n, e, k) = (params.n, params.e, params.k);
    let b_set: HashSet<(i64, i64, i64)> = b.iter().map(|t| (t.alpha, t.p, t.q)).collect();
    let bmin = 0.max(k - e);

    let mut w_targets = Vec::new();
    let mut w_descent = Vec::new();
    for t in b {
        let r = r0 + params.alpha0 - t.alpha;
        let bmax = (k - 1).div_euclid(r);
        let l_src = l_value(params, t.alpha, anchor_of(params.mode, t.p, t.q));
        for m_shift in -t.p..=(n - t.p) {
            if m_shift == 0 {
                continue;
            }
            let pp = t.p + m_shift;
            for beta in bmin..=bmax {
                let qp = t.q + sgn(m_shift) + t.alpha - beta + m_shift;
                if qp < 0 || qp > n {
                    continue;
                }
                if m_shift < r * (beta - t.alpha) {
                    continue;
                }
                if qp - t.q < (r - 1) * (beta - t.alpha) + sgn(beta - t.alpha) {
                    continue;
                }
                if !b_set.contains(&(beta, pp, qp)) {
                    w_targets.push(Witness {
                        alpha: t.alpha,
                        p: Some(t.p),
                        q: Some(t.q),
                        detail: format!("target (beta={beta}, p'={pp}, q'={qp}) not in B"),
                    });
                }
                let l_tgt = l_value(params, beta, anchor_of(params.mode, pp, qp));
                if l_tgt > l_src - 1 {
                    w_descent.push(Witness {
                        alpha: t.alpha,
                        p: Some(t.p),
                        q: Some(t.q),
                        detail: format!(
                            "L does not descend: target (beta={beta}, p'={pp}, q'={qp}) has L={l_tgt}, source has L={l_src}"
                        ),
                    });
                }
            }
        }
    }

    let mut w_helper = Vec::new();
    let (amin, amax) = params.alpha_range();
    for alpha in amin..=amax {
        let r = r0 + params.alpha0 - alpha;
        for beta in amin..=amax {
            let dq = q_offset(params, beta) - q_offset(params, alpha);
            if dq > r * (beta - alpha) {
                w_helper.push(Witness {
                    alpha,
                    p: None,
                    q: None,
                    detail: format!("Q({beta})-Q({alpha}) = {dq} > r*(beta-alpha) = {}", r * (beta - alpha)),
                });
            }
            let rhs = (r - 1) * (beta - alpha) + sgn(beta - alpha);
            if dq > rhs {
                w_helper.push(Witness {
                    alpha,
                    p: None,
                    q: None,
                    detail: format!("Q({beta})-Q({alpha}) = {dq} > (r-1)*(beta-alpha)+sgn = {rhs}"),
                });
            }
        }
    }

    let mut w_cutoff = Vec::new();
    let top = r0 + params.alpha0 - params.m + 1;
    let cutoff_lhs = q_offset(params, top) + params.anchor0();
    if cutoff_lhs <= n {
        w_cutoff.push(Witness {
            alpha: top,
            p: None,
            q: None,
            detail: format!("Q({top}) + anchor = {cutoff_lhs} <= n = {n}"),
        });
    }

    vec![
        check("morphism_targets_in_b", w_targets),
        check("morphism_l_descent", w_descent),
        check("helper_q_inequalities", w_helper),
        check("cutoff_inequality", w_cutoff),
    ]
}

/// On the binding triples `p + q = p0 + q0 + 2Q(alpha)` of `B`, checks that
/// `P + q + chi > dim Y` is equivalent to the reduced inequality
/// `p0 + q0 - n + alpha(e-k+alpha) + |alpha-alpha0| + alpha-alpha0 >
///  (r0+alpha0)(e-k+alpha0) + alpha0(r0-1)`, and that the two correction
/// terms are non-negative on all of `B`.
pub fn kan_audit(params: &AuditParams) -> Vec<Check> {
    kan_audit_on(params, &enumerate_b(params))
}

fn kan_audit_on(params: &AuditParams, b: &[TripleB]) -> Vec<Check> {
    let r0 = params.r0();
    let (n, e, k) = (params.n, params.e, params.k);
    let (alpha0, p0, q0) = (params.alpha0, params.p0, params.q0);

    let mut w_nonneg = Vec::new();
    let alphas: BTreeSet<i64> = b.iter().map(|t| t.alpha).collect();
    for &alpha in &alphas {
        let t1 = alpha * (e - k + alpha);
        let t2 = (alpha - alpha0).abs() + (alpha - alpha0);
        if t1 < 0 {
            w_nonneg.push(Witness {
                alpha,
                p: None,
                q: None,
                detail: format!("alpha*(e-k+alpha) = {t1} < 0"),
            });
        }
        if t2 < 0 {
            w_nonneg.push(Witness {
                alpha,
                p: None,
                q: None,
                detail: format!("|alpha-alpha0| + alpha-alpha0 = {t2} < 0"),
            });
        }
    }

    let mut w_equiv = Vec::new();
    for t in b {
        if t.p + t.q != p0 + q0 + 2 * q_offset(params, t.alpha) {
            continue;
        }
        let geo = match flag_scalars(params, t.alpha, t.p) {
            Ok(g) => g,
            Err(err) => {
                w_equiv.push(Witness {
                    alpha: t.alpha,
                    p: Some(t.p),
                    q: Some(t.q),
                    detail: format!("flag scalars unavailable: {err}"),
                });
                continue;
            }
        };
        let lhs = geo.p_degree + t.q + geo.chi - geo.dim_y > 0;
        let rhs = p0 + q0 - n
            + t.alpha * (e - k + t.alpha)
            + (t.alpha - alpha0).abs()
            + (t.alpha - alpha0)
            > (r0 + alpha0) * (e - k + alpha0) + alpha0 * (r0 - 1);
        if lhs != rhs {
            w_equiv.push(Witness {
                alpha: t.alpha,
                p: Some(t.p),
                q: Some(t.q),
                detail: format!(
                    "P+q+chi-dimY = {} but reduced form says {rhs}",
                    geo.p_degree + t.q + geo.chi - geo.dim_y
                ),
            });
        }
    }

    vec![
        check("kan_equivalence", w_equiv),
        check("kan_nonnegativity", w_nonneg),
    ]
}

/// One row of the weight-bound profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KAlphaEntry {
    pub alpha: i64,
    pub a_value: i64,
    pub k_bound: KBound,
    pub floor: Option<i64>,
}

/// Tabulation of `floor(k(alpha))` over the `alpha` occurring in `B`, with
/// the location of the maximum, the `+1` exception, monotonicity findings,
/// and the bracketing inequality
/// `n - anchor + r0*alpha0 + C(alpha0+1, 2) < C(r0+alpha0+1, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KAlphaProfile {
    pub entries: Vec<KAlphaEntry>,
    pub max_floor: Option<i64>,
    pub argmax_alpha: Option<i64>,
    /// Whether the maximum of the floors is attained at `alpha = 1` or
    /// `alpha = k - e`; `None` when no finite entry exists.
    pub max_at_one_or_k_minus_e: Option<bool>,
    /// The maximum exceeds the floor at `alpha = 1` by exactly one while
    /// sitting away from both endpoints. Meaningful for `alpha0 >= 1`; with
    /// `alpha0 = 0` the maximum legitimately sits at the low end of the
    /// range, since `k(0) >= k(1)` there.
    pub exceptional_plus_one: bool,
    /// The configuration `m = 2`, `n - p0 = 1`, `alpha0 = 2` in which the
    /// `+1` exception can occur for `m > 1`.
    pub exceptional_config: bool,
    /// `k(alpha) >= k(alpha+1)` over the tabulated part of the interval
    /// `max(alpha0, 1) <= alpha <= r0 + alpha0 - 2`.
    pub k_bound_nonincreasing: bool,
    /// `k(0) >= k(1)` when `alpha0 = 0` and both are tabulated.
    pub k0_ge_k1: Option<bool>,
    pub delta_inequality_ok: bool,
}

pub fn k_alpha_profile(params: &AuditParams) -> KAlphaProfile {
    k_alpha_profile_on(params, &enumerate_b(params))
}

fn k_alpha_profile_on(params: &AuditParams, b: &[TripleB]) -> KAlphaProfile {
    let r0 = params.r0();
    let alpha0 = params.alpha0;
    let alphas: BTreeSet<i64> = b.iter().map(|t| t.alpha).collect();
    let mut entries = Vec::new();
    for &alpha in &alphas {
        // pos only affects L, which the profile does not use
        if let Ok(sc) = induction_scalars(params, alpha, params.p0) {
            entries.push(KAlphaEntry {
                alpha,
                a_value: sc.a_value,
                k_bound: sc.k_bound,
                floor: sc.k_bound.floor(),
            });
        }
    }

    let bound_at = |alpha: i64| entries.iter().find(|en| en.alpha == alpha);
    let max_floor = entries.iter().filter_map(|en| en.floor).max();
    let argmax_alpha = max_floor.and_then(|mx| {
        entries
            .iter()
            .find(|en| en.floor == Some(mx))
            .map(|en| en.alpha)
    });
    let max_at_one_or_k_minus_e = max_floor.map(|mx| {
        let at_one = bound_at(1).map(|en| en.floor == Some(mx)).unwrap_or(false);
        let at_kme = bound_at(params.k - params.e)
            .map(|en| en.floor == Some(mx))
            .unwrap_or(false);
        at_one || at_kme
    });
    let floor_at_one = bound_at(1).and_then(|en| en.floor);
    let exceptional_plus_one = match (max_floor, floor_at_one) {
        (Some(mx), Some(f1)) => mx == f1 + 1 && max_at_one_or_k_minus_e == Some(false),
        _ => false,
    };
    let exceptional_config = params.m == 2 && params.n - params.p0 == 1 && alpha0 == 2;

    let mut k_bound_nonincreasing = true;
    for en in &entries {
        let alpha = en.alpha;
        if alpha < 1.max(alpha0) || alpha + 1 > r0 + alpha0 - 1 {
            continue;
        }
        if let Some(next) = bound_at(alpha + 1) {
            if en.k_bound < next.k_bound {
                k_bound_nonincreasing = false;
            }
        }
    }
    let k0_ge_k1 = if alpha0 == 0 {
        match (bound_at(0), bound_at(1)) {
            (Some(a), Some(b)) => Some(a.k_bound >= b.k_bound),
            _ => None,
        }
    } else {
        None
    };

    let anchor = params.anchor0();
    let delta_inequality_ok = params.n - anchor + r0 * alpha0 + choose2(alpha0 + 1)
        < choose2(r0 + alpha0 + 1);

    KAlphaProfile {
        entries,
        max_floor,
        argmax_alpha,
        max_at_one_or_k_minus_e,
        exceptional_plus_one,
        exceptional_config,
        k_bound_nonincreasing,
        k0_ge_k1,
        delta_inequality_ok,
    }
}

fn distinguished_summand_check(params: &AuditParams, b: &[TripleB]) -> Check {
    let r0 = params.r0();
    let mut witnesses = Vec::new();
    for t in b {
        let r = r0 + params.alpha0 - t.alpha;
        let l = params.k.div_euclid(r);
        if l < 1 || t.alpha * r > params.k - 1 {
            continue;
        }
        match e1_terms(params, t.alpha, t.p, t.q, t.p) {
            Ok(terms) => {
                let hit = terms
                    .iter()
                    .any(|x| x.beta == t.alpha && x.q_target == t.q && x.multiplicity == 1);
                if !hit {
                    witnesses.push(Witness {
                        alpha: t.alpha,
                        p: Some(t.p),
                        q: Some(t.q),
                        detail: "no multiplicity-one summand at beta = alpha, q' = q".to_string(),
                    });
                }
            }
            Err(err) => witnesses.push(Witness {
                alpha: t.alpha,
                p: Some(t.p),
                q: Some(t.q),
                detail: format!("first-page terms unavailable: {err}"),
            }),
        }
    }
    check("e1_distinguished_summand", witnesses)
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn ns_tables_check(params: &AuditParams, b: &[TripleB]) -> Check {
    let r0 = params.r0();
    let mut witnesses = Vec::new();
    let rs: BTreeSet<i64> = b.iter().map(|t| r0 + params.alpha0 - t.alpha).collect();
    for &r in &rs {
        let table = match ns_table_cached(r) {
            Ok(t) => t,
            Err(err) => {
                witnesses.push(Witness {
                    alpha: r0 + params.alpha0 - r,
                    p: None,
                    q: None,
                    detail: format!("table unavailable for r={r}: {err}"),
                });
                continue;
            }
        };
        let mut total = 0u64;
        for s in 0..=r {
            let sigma = table.sigma(s);
            if table.value(s, sigma) != 1 {
                witnesses.push(Witness {
                    alpha: 0,
                    p: None,
                    q: None,
                    detail: format!("r={r}, s={s}: n_s(sigma) = {} != 1", table.value(s, sigma)),
                });
            }
            let row_sum: u64 = table.rows()[s as usize].iter().sum();
            if row_sum != binom(r, s) {
                witnesses.push(Witness {
                    alpha: 0,
                    p: None,
                    q: None,
                    detail: format!("r={r}, s={s}: row sum {row_sum} != C({r},{s})"),
                });
            }
            for (a, &v) in table.rows()[s as usize].iter().enumerate() {
                if (a as i64) > sigma && v != 0 {
                    witnesses.push(Witness {
                        alpha: 0,
                        p: None,
                        q: None,
                        detail: format!("r={r}, s={s}: n_s({a}) = {v} above sigma = {sigma}"),
                    });
                }
            }
            total += row_sum;
        }
        if total != 1u64 << r {
            witnesses.push(Witness {
                alpha: 0,
                p: None,
                q: None,
                detail: format!("r={r}: total {total} != 2^{r}"),
            });
        }
    }
    check("ns_tables", witnesses)
}

/// Pass/fail aggregate over one parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub params: AuditParams,
    pub b_size: usize,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn pass(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn failed_check_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ReportJson<'a> {
            schema: &'static str,
            params: &'a AuditParams,
            b_size: usize,
            checks: &'a [Check],
        }
        serde_json::to_value(ReportJson {
            schema: "hookschur/audit-report/v1",
            params: &self.params,
            b_size: self.b_size,
            checks: &self.checks,
        })
        .expect("serializable")
    }
}

/// Runs every audit over one parameter set: morphism targets and descent, the
/// helper and cutoff inequalities, the positivity reduction, the
/// distinguished first-page summand, the multiplicity tables, and the
/// bracketing inequality from the weight-bound profile.
pub fn full_audit(params: &AuditParams) -> AuditReport {
    let b = enumerate_b(params);
    let mut checks = morphism_audit_on(params, &b);
    checks.extend(kan_audit_on(params, &b));
    checks.push(distinguished_summand_check(params, &b));
    checks.push(ns_tables_check(params, &b));
    let profile = k_alpha_profile_on(params, &b);
    let delta_witnesses = if profile.delta_inequality_ok {
        Vec::new()
    } else {
        vec![Witness {
            alpha: params.alpha0,
            p: None,
            q: None,
            detail: "bracketing inequality fails".to_string(),
        }]
    };
    checks.push(check("delta_inequality", delta_witnesses));
    AuditReport {
        params: *params,
        b_size: b.len(),
        checks,
    }
}
