//! Deterministic parameter sweeps.
//!
//! Grids are enumerated in lexicographic order of the parameter tuple and
//! points that fall outside a query's domain are skipped, so the output for a
//! given grid is always the same regardless of how many workers evaluate it.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::audit::{full_audit, AuditParams, AuditReport, Mode};
use crate::guards::Guards;
use crate::vanishing::{evaluate, VanishingQuery, VanishingReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("cannot parse range {0:?} (expected A, A..B, or 0..n)")]
    BadRange(String),
    #[error("sweep grid has at least {points} points, limit {limit}")]
    TooLarge { points: u64, limit: u64 },
}

/// Inclusive upper end of a range: a number, or the symbol `n` standing for
/// the current value of the `n` parameter (usable for `p`, `q`, `p0`, `q0`,
/// `alpha`, `alpha0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RangeEnd {
    At(i64),
    N,
}

/// An inclusive integer range, parsed from `A`, `A..B` or `A..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RangeSpec {
    pub lo: i64,
    pub hi: RangeEnd,
}

impl RangeSpec {
    pub fn at(value: i64) -> Self {
        RangeSpec {
            lo: value,
            hi: RangeEnd::At(value),
        }
    }

    pub fn span(lo: i64, hi: i64) -> Self {
        RangeSpec {
            lo,
            hi: RangeEnd::At(hi),
        }
    }

    pub fn parse(text: &str) -> Result<Self, SweepError> {
        let t = text.trim();
        let bad = || SweepError::BadRange(text.to_string());
        if let Some((lo, hi)) = t.split_once("..") {
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim();
            if hi == "n" {
                Ok(RangeSpec { lo, hi: RangeEnd::N })
            } else {
                let hi: i64 = hi.parse().map_err(|_| bad())?;
                Ok(RangeSpec::span(lo, hi))
            }
        } else {
            let v: i64 = t.parse().map_err(|_| bad())?;
            Ok(RangeSpec::at(v))
        }
    }

    /// Resolves against the current `n` and clamps the lower end at `floor_lo`.
    fn resolve(&self, n: i64, floor_lo: i64) -> std::ops::RangeInclusive<i64> {
        let hi = match self.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => n,
        };
        self.lo.max(floor_lo)..=hi
    }

    fn width_bound(&self, max_n: i64) -> u64 {
        let hi = match self.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => max_n,
        };
        (hi - self.lo + 1).max(0) as u64
    }
}

/// Grid for vanishing sweeps. Unset ranges default to the full domain:
/// `alpha` over `0..k-1`, `p` and `q` over `0..n`.
#[derive(Debug, Clone)]
pub struct VanishGrid {
    pub n: RangeSpec,
    pub e: RangeSpec,
    pub k: RangeSpec,
    pub m: RangeSpec,
    pub alpha: Option<RangeSpec>,
    pub p: Option<RangeSpec>,
    pub q: Option<RangeSpec>,
}

impl VanishGrid {
    /// All valid queries of the grid, ordered by `(n, e, k, m, alpha, p, q)`.
    /// Points violating the query invariants (including `floor(k/m) = 0`) are
    /// skipped.
    pub fn points(&self, guards: &Guards) -> Result<Vec<VanishingQuery>, SweepError> {
        let max_n = match self.n.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => self.n.lo,
        };
        let max_k = match self.k.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => max_n,
        };
        // defaults: alpha over 0..k-1, p and q over 0..n
        let pq_default = (max_n + 1).max(1) as u64;
        let bound: u64 = [&self.n, &self.e, &self.k, &self.m]
            .iter()
            .map(|r| r.width_bound(max_n))
            .product::<u64>()
            .saturating_mul(
                self.alpha
                    .map_or(max_k.max(1) as u64, |r| r.width_bound(max_n)),
            )
            .saturating_mul(self.p.map_or(pq_default, |r| r.width_bound(max_n)))
            .saturating_mul(self.q.map_or(pq_default, |r| r.width_bound(max_n)));
        if bound > guards.max_sweep_points {
            return Err(SweepError::TooLarge {
                points: bound,
                limit: guards.max_sweep_points,
            });
        }
        let mut out = Vec::new();
        for n in self.n.resolve(0, 1) {
            for e in self.e.resolve(n, 1) {
                for k in self.k.resolve(n, 1) {
                    for m in self.m.resolve(n, 1) {
                        if m < 1 || k / m < 1 {
                            continue;
                        }
                        let alpha_range = self
                            .alpha
                            .unwrap_or(RangeSpec::span(0, k - 1))
                            .resolve(n, 0);
                        for alpha in alpha_range {
                            if alpha >= k {
                                continue;
                            }
                            let p_range =
                                self.p.unwrap_or(RangeSpec::span(0, n)).resolve(n, 0);
                            for p in p_range {
                                if p > n {
                                    continue;
                                }
                                let q_range =
                                    self.q.unwrap_or(RangeSpec::span(0, n)).resolve(n, 0);
                                for q in q_range {
                                    if q > n {
                                        continue;
                                    }
                                    out.push(VanishingQuery {
                                        n,
                                        e,
                                        k,
                                        m,
                                        alpha,
                                        p,
                                        q,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Grid for audit sweeps. Unset ranges default to `alpha0` over `0..k-1` and
/// `p0`, `q0` over `0..n`; both modes run unless one is pinned.
#[derive(Debug, Clone)]
pub struct AuditGrid {
    pub n: RangeSpec,
    pub e: RangeSpec,
    pub k: RangeSpec,
    pub m: RangeSpec,
    pub alpha0: Option<RangeSpec>,
    pub p0: Option<RangeSpec>,
    pub q0: Option<RangeSpec>,
    pub modes: Vec<Mode>,
}

impl AuditGrid {
    /// All valid parameter sets, ordered by
    /// `(n, e, k, m, alpha0, p0, q0, mode)`. Points with `floor(k/m) = 0` are
    /// skipped.
    pub fn points(&self, guards: &Guards) -> Result<Vec<AuditParams>, SweepError> {
        let max_n = match self.n.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => self.n.lo,
        };
        let max_k = match self.k.hi {
            RangeEnd::At(v) => v,
            RangeEnd::N => max_n,
        };
        let pq_default = (max_n + 1).max(1) as u64;
        let bound: u64 = [&self.n, &self.e, &self.k, &self.m]
            .iter()
            .map(|r| r.width_bound(max_n))
            .product::<u64>()
            .saturating_mul(
                self.alpha0
                    .map_or(max_k.max(1) as u64, |r| r.width_bound(max_n)),
            )
            .saturating_mul(self.p0.map_or(pq_default, |r| r.width_bound(max_n)))
            .saturating_mul(self.q0.map_or(pq_default, |r| r.width_bound(max_n)))
            .saturating_mul(self.modes.len() as u64);
        if bound > guards.max_sweep_points {
            return Err(SweepError::TooLarge {
                points: bound,
                limit: guards.max_sweep_points,
            });
        }
        let mut out = Vec::new();
        for n in self.n.resolve(0, 1) {
            for e in self.e.resolve(n, 1) {
                for k in self.k.resolve(n, 1) {
                    for m in self.m.resolve(n, 1) {
                        if m < 1 || k / m < 1 {
                            continue;
                        }
                        let a_range = self
                            .alpha0
                            .unwrap_or(RangeSpec::span(0, k - 1))
                            .resolve(n, 0);
                        for alpha0 in a_range {
                            if alpha0 >= k {
                                continue;
                            }
                            let p_range =
                                self.p0.unwrap_or(RangeSpec::span(0, n)).resolve(n, 0);
                            for p0 in p_range {
                                if p0 > n {
                                    continue;
                                }
                                let q_range =
                                    self.q0.unwrap_or(RangeSpec::span(0, n)).resolve(n, 0);
                                for q0 in q_range {
                                    if q0 > n {
                                        continue;
                                    }
                                    for &mode in &self.modes {
                                        out.push(
                                            AuditParams::new(n, e, k, m, alpha0, p0, q0, mode)
                                                .expect("grid point pre-validated"),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

fn run_pool<T, F>(jobs: Option<usize>, f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match jobs {
        Some(j) if j >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Evaluates every query; the result order matches the input order for any
/// worker count.
pub fn sweep_vanish(points: &[VanishingQuery], jobs: Option<usize>) -> Vec<VanishingReport> {
    run_pool(jobs, || {
        points
            .par_iter()
            .map(|q| evaluate(q).expect("pre-validated query"))
            .collect()
    })
}

/// Audits every parameter set; the result order matches the input order for
/// any worker count.
pub fn sweep_audit(points: &[AuditParams], jobs: Option<usize>) -> Vec<AuditReport> {
    run_pool(jobs, || points.par_iter().map(full_audit).collect())
}
