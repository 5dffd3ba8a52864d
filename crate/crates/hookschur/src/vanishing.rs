//! Decision procedures for the two vanishing criteria on hook Schur functors.
//!
//! For a hook functor of weight `k` and arm `alpha` on a rank-`e` bundle over
//! an `n`-fold, the guarantees have the shape "cohomology in bidegree `(p,q)`
//! vanishes once `q + p - n` exceeds a threshold":
//!
//! - criterion `2.1` (ample bundle): threshold
//!   `(delta(n-p) + alpha) * (e - k + 2*alpha) - alpha*(alpha+1)`;
//! - criterion `2.2` (positivity measured by the grain `m`, hypothesis the
//!   ampleness of the staircase functor `S_{I(l,m,s)}`): with
//!   `r = delta(n - p + C(m,2))`, threshold
//!   `(r + alpha) * (e - k + alpha) + alpha*(r - 1)`, guarded by one of four
//!   side conditions, and valid for both orders of the bidegree.
//!
//! The two thresholds agree identically when `r = delta(n-p)`, so the `m = 1`
//! case of `2.2` recovers `2.1`.
//!
//! A report never claims non-vanishing: a false guarantee flag only means the
//! criteria implemented here do not apply. The specialization of `2.1` to
//! `alpha = k-1` (symmetric powers twisted by the determinant) is reported
//! from the general threshold formula; no separate shortcut is applied.

use serde::Serialize;
use thiserror::Error;

use crate::partitions::{choose2, delta, staircase_partition, Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VanishingError {
    #[error("{name} out of range: {value}")]
    OutOfRange { name: &'static str, value: i64 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// One cohomology query: bundle rank `e` over an `n`-fold, hook `(k, alpha)`,
/// positivity grain `m` (`m = 1` meaning the bundle itself is ample), and
/// bidegree `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingQuery {
    pub n: i64,
    pub e: i64,
    pub k: i64,
    pub m: i64,
    pub alpha: i64,
    pub p: i64,
    pub q: i64,
}

impl VanishingQuery {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: i64,
        e: i64,
        k: i64,
        m: i64,
        alpha: i64,
        p: i64,
        q: i64,
    ) -> Result<Self, VanishingError> {
        let q_struct = VanishingQuery {
            n,
            e,
            k,
            m,
            alpha,
            p,
            q,
        };
        q_struct.validate()?;
        Ok(q_struct)
    }

    pub fn validate(&self) -> Result<(), VanishingError> {
        for (name, value, min) in [
            ("n", self.n, 1),
            ("e", self.e, 1),
            ("k", self.k, 1),
            ("m", self.m, 1),
        ] {
            if value < min {
                return Err(VanishingError::OutOfRange { name, value });
            }
        }
        if self.alpha < 0 || self.alpha >= self.k {
            return Err(VanishingError::OutOfRange {
                name: "alpha",
                value: self.alpha,
            });
        }
        if self.p < 0 || self.p > self.n {
            return Err(VanishingError::OutOfRange {
                name: "p",
                value: self.p,
            });
        }
        if self.q < 0 || self.q > self.n {
            return Err(VanishingError::OutOfRange {
                name: "q",
                value: self.q,
            });
        }
        Ok(())
    }
}

/// Threshold of criterion `2.1`: `(delta(n-p)+alpha)(e-k+2*alpha) - alpha(alpha+1)`.
pub fn thm21_threshold(n: i64, p: i64, alpha: i64, e: i64, k: i64) -> Result<i64, VanishingError> {
    if p < 0 || p > n {
        return Err(VanishingError::OutOfRange { name: "p", value: p });
    }
    if alpha < 0 || alpha >= k {
        return Err(VanishingError::OutOfRange {
            name: "alpha",
            value: alpha,
        });
    }
    let d = delta((n - p) as u64) as i64;
    Ok((d + alpha) * (e - k + 2 * alpha) - alpha * (alpha + 1))
}

/// Threshold of criterion `2.2`: `(r+alpha)(e-k+alpha) + alpha(r-1)`.
pub fn thm22_threshold(r: i64, alpha: i64, e: i64, k: i64) -> i64 {
    (r + alpha) * (e - k + alpha) + alpha * (r - 1)
}

/// The four side conditions of criterion `2.2`, evaluated at
/// `r = delta(n - p + C(m,2))`. Conditions 2 and 3 split on `alpha`;
/// condition 4 applies only for `k > e + 1` with `beta = k - e`. The mixed
/// terms in conditions 3 and 4 are read as the product `r * alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionFlags {
    pub cond_m1: bool,
    pub cond_alpha0: bool,
    pub cond_alpha_ge1: bool,
    pub cond_k_gt_e1: bool,
    pub r: i64,
    pub beta: i64,
}

impl ConditionFlags {
    pub fn any(&self) -> bool {
        self.cond_m1 || self.cond_alpha0 || self.cond_alpha_ge1 || self.cond_k_gt_e1
    }

    pub fn as_array(&self) -> [bool; 4] {
        [
            self.cond_m1,
            self.cond_alpha0,
            self.cond_alpha_ge1,
            self.cond_k_gt_e1,
        ]
    }

    fn none(r: i64, beta: i64) -> Self {
        ConditionFlags {
            cond_m1: false,
            cond_alpha0: false,
            cond_alpha_ge1: false,
            cond_k_gt_e1: false,
            r,
            beta,
        }
    }
}

pub fn thm22_conditions(
    n: i64,
    p: i64,
    e: i64,
    k: i64,
    m: i64,
    alpha: i64,
) -> Result<ConditionFlags, VanishingError> {
    if p < 0 || p > n {
        return Err(VanishingError::OutOfRange { name: "p", value: p });
    }
    if alpha < 0 || alpha >= k {
        return Err(VanishingError::OutOfRange {
            name: "alpha",
            value: alpha,
        });
    }
    if m < 1 {
        return Err(VanishingError::OutOfRange { name: "m", value: m });
    }
    if k / m < 1 {
        return Err(VanishingError::OutOfRange { name: "k", value: k });
    }
    let r = delta((n - p + choose2(m)) as u64) as i64;
    let beta = k - e;
    let np = n - p;

    let cond_m1 = m == 1;
    let cond_alpha0 = alpha == 0 && (r - 1) * k > r * (np - 1);
    let kron = if alpha == 2 && m == 2 && np == 1 { 1 } else { 0 };
    let cond_alpha_ge1 = alpha >= 1
        && (r + alpha - 2) * k > (r + alpha - 1) * (np + r * alpha + choose2(alpha) - 1) + kron;
    let cond_k_gt_e1 = k > e + 1
        && (r + alpha - beta - 1) * k
            > (r + alpha - beta) * (np + r * alpha + choose2(alpha) - choose2(beta) - 1);

    Ok(ConditionFlags {
        cond_m1,
        cond_alpha0,
        cond_alpha_ge1,
        cond_k_gt_e1,
        r,
        beta,
    })
}

/// Which criterion produced a guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremUsed {
    #[serde(rename = "2.1")]
    T21,
    #[serde(rename = "2.2")]
    T22,
    #[serde(rename = "none")]
    None,
}

impl std::fmt::Display for TheoremUsed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TheoremUsed::T21 => "2.1",
            TheoremUsed::T22 => "2.2",
            TheoremUsed::None => "none",
        })
    }
}

/// Full decision trace for one query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub query: VanishingQuery,
    pub hypothesis_partition: Partition,
    pub gamma_nonzero: bool,
    pub flags: ConditionFlags,
    pub threshold: i64,
    pub guaranteed_pq: bool,
    pub guaranteed_qp: bool,
    pub theorem: TheoremUsed,
    pub notes: Vec<String>,
}

impl VanishingReport {
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ReportJson<'a> {
            schema: &'static str,
            query: &'a VanishingQuery,
            hypothesis_partition: String,
            gamma_nonzero: bool,
            r: i64,
            conditions: [bool; 4],
            threshold: i64,
            guaranteed_pq: bool,
            guaranteed_qp: bool,
            theorem: TheoremUsed,
            notes: &'a [String],
        }
        serde_json::to_value(ReportJson {
            schema: "hookschur/vanish-report/v1",
            query: &self.query,
            hypothesis_partition: self.hypothesis_partition.to_string(),
            gamma_nonzero: self.gamma_nonzero,
            r: self.flags.r,
            conditions: self.flags.as_array(),
            threshold: self.threshold,
            guaranteed_pq: self.guaranteed_pq,
            guaranteed_qp: self.guaranteed_qp,
            theorem: self.theorem,
            notes: &self.notes,
        })
        .expect("serializable")
    }
}

/// Evaluates one query against both criteria.
///
/// When `e - k + alpha < 0` the hook functor is the zero bundle and its
/// cohomology vanishes in every bidegree; the report short-circuits with
/// `theorem = none` instead of evaluating side conditions on a zero bundle.
/// Otherwise the guarantee holds iff one of the four conditions is true and
/// `q + p - n` exceeds the threshold; the conclusion covers both `(p,q)` and
/// `(q,p)` under the same `p`-based conditions.
pub fn evaluate(query: &VanishingQuery) -> Result<VanishingReport, VanishingError> {
    query.validate()?;
    let VanishingQuery {
        n,
        e,
        k,
        m,
        alpha,
        p,
        q,
    } = *query;
    let staircase = staircase_partition(k as u32, m as u32)?;
    let gamma_nonzero = e - k + alpha >= 0;
    let r = delta((n - p + choose2(m)) as u64) as i64;
    let threshold = thm22_threshold(r, alpha, e, k);

    if !gamma_nonzero {
        return Ok(VanishingReport {
            query: *query,
            hypothesis_partition: staircase.partition,
            gamma_nonzero,
            flags: ConditionFlags::none(r, k - e),
            threshold,
            guaranteed_pq: true,
            guaranteed_qp: true,
            theorem: TheoremUsed::None,
            notes: vec![format!(
                "hook of weight {k} with arm {alpha} has {} rows, more than the rank {e}: the functor is zero and all cohomology vanishes",
                k - alpha
            )],
        });
    }

    let flags = thm22_conditions(n, p, e, k, m, alpha)?;
    let guaranteed = flags.any() && q + p - n > threshold;
    let theorem = if !guaranteed {
        TheoremUsed::None
    } else if m == 1 {
        TheoremUsed::T21
    } else {
        TheoremUsed::T22
    };
    let mut notes = Vec::new();
    if alpha >= 1 || k > e + 1 {
        notes.push("conditions 3 and 4 read the mixed bound term as the product r*alpha".to_string());
    }
    Ok(VanishingReport {
        query: *query,
        hypothesis_partition: staircase.partition,
        gamma_nonzero,
        flags,
        threshold,
        guaranteed_pq: guaranteed,
        guaranteed_qp: guaranteed,
        theorem,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm21_threshold_examples() {
        // p = n makes delta(0) = 1; with alpha = 0 the threshold is e - k
        assert_eq!(thm21_threshold(4, 4, 0, 5, 3).unwrap(), 2);
        assert_eq!(thm21_threshold(3, 2, 1, 4, 3).unwrap(), 7);
        assert_eq!(thm21_threshold(4, 2, 0, 6, 6).unwrap(), 0);
        assert!(thm21_threshold(3, 4, 0, 5, 3).is_err());
    }

    #[test]
    fn thm22_threshold_examples() {
        assert_eq!(thm22_threshold(2, 0, 4, 2), 4);
        assert_eq!(thm22_threshold(2, 1, 4, 3), 7);
        assert_eq!(thm21_threshold(3, 2, 1, 4, 3).unwrap(), 7);
        assert_eq!(thm22_threshold(1, 0, 4, 4), 0);
    }

    #[test]
    fn thm22_conditions_examples() {
        let f = thm22_conditions(2, 2, 6, 4, 2, 0).unwrap();
        assert_eq!(f.r, 2);
        assert!(f.cond_alpha0);
        assert!(!f.cond_m1);

        let f = thm22_conditions(5, 3, 4, 3, 1, 1).unwrap();
        assert!(f.cond_m1);

        let f = thm22_conditions(3, 2, 4, 2, 2, 1).unwrap();
        assert_eq!(f.r, 2);
        assert!(!f.cond_alpha_ge1);
    }

    #[test]
    fn condition3_kronecker_correction_shifts_the_boundary() {
        // at alpha=2, m=2, n-p=1 the bound gains +1: with r=2 the strict
        // inequality 2k > 15+1 needs k >= 9 instead of k >= 8
        let f = thm22_conditions(3, 2, 20, 8, 2, 2).unwrap();
        assert_eq!(f.r, 2);
        assert!(!f.cond_alpha_ge1);
        let f = thm22_conditions(3, 2, 20, 9, 2, 2).unwrap();
        assert!(f.cond_alpha_ge1);
        // without the correction k=8 would clear the strict bound
        assert!(2 * 8 > (2 + 2 - 1) * (1 + 2 * 2 + choose2(2) - 1));
    }

    #[test]
    fn conditions_alpha_split_is_exclusive() {
        for n in 1..=4 {
            for p in 0..=n {
                for k in 1..=4 {
                    for alpha in 0..k {
                        for m in 1..=k {
                            if k / m < 1 {
                                continue;
                            }
                            let f = thm22_conditions(n, p, 5, k, m, alpha).unwrap();
                            assert!(!(f.cond_alpha0 && f.cond_alpha_ge1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let r = evaluate(&VanishingQuery::new(2, 2, 2, 2, 0, 2, 2).unwrap()).unwrap();
        assert_eq!(r.flags.r, 2);
        assert_eq!(r.threshold, 0);
        assert!(r.guaranteed_pq);
        assert_eq!(r.theorem, TheoremUsed::T22);

        let r = evaluate(&VanishingQuery::new(2, 4, 2, 2, 0, 2, 2).unwrap()).unwrap();
        assert_eq!(r.threshold, 4);
        assert!(!r.guaranteed_pq);
        assert_eq!(r.theorem, TheoremUsed::None);

        let r = evaluate(&VanishingQuery::new(1, 2, 3, 1, 0, 1, 1).unwrap()).unwrap();
        assert!(!r.gamma_nonzero);
        assert!(r.guaranteed_pq && r.guaranteed_qp);
        assert_eq!(r.theorem, TheoremUsed::None);
    }

    #[test]
    fn evaluate_rejects_small_k() {
        // k < m leaves no staircase row
        let q = VanishingQuery::new(3, 3, 2, 3, 0, 1, 1).unwrap();
        assert!(matches!(
            evaluate(&q),
            Err(VanishingError::Partition(PartitionError::TooSmall { .. }))
        ));
    }

    #[test]
    fn guarantee_is_monotone_in_q() {
        for n in 1..=5i64 {
            for e in 1..=6 {
                for k in 1..=5 {
                    for alpha in 0..k {
                        for p in 0..=n {
                            let mut prev = false;
                            for q in 0..=n {
                                let query = VanishingQuery::new(n, e, k, 1, alpha, p, q).unwrap();
                                let rep = evaluate(&query).unwrap();
                                assert!(
                                    !prev || rep.guaranteed_pq,
                                    "guarantee lost when q grew: {query:?}"
                                );
                                prev = rep.guaranteed_pq;
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let r = evaluate(&VanishingQuery::new(2, 2, 2, 2, 0, 2, 2).unwrap()).unwrap();
        let v = r.to_json();
        assert_eq!(v["schema"], "hookschur/vanish-report/v1");
        assert_eq!(v["query"]["n"], 2);
        assert_eq!(v["hypothesis_partition"], "1,1");
        assert_eq!(v["conditions"].as_array().unwrap().len(), 4);
        assert_eq!(v["theorem"], "2.2");
    }
}
