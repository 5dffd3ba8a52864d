//! Enumeration guards.
//!
//! Every exhaustive enumeration in the crate is bounded by an explicit guard;
//! exceeding a guard is a clean error, never a silent truncation. The defaults
//! cover everything the test suite exercises. The CLI honours the
//! `SCHUR_GUARD_MAX` environment variable as an override for the weight-based
//! guards.

/// Bounds on the exhaustive enumerations.
#[derive(Debug, Clone, Copy)]
pub struct Guards {
    /// Maximum combined weight `|I| + |J|` accepted by the monomial product
    /// oracle.
    pub max_oracle_weight: u64,
    /// Maximum number of variables accepted by the monomial product oracle.
    pub max_oracle_rank: u32,
    /// Maximum total weight `|J| * kfactor * |I|` accepted by the dominance
    /// spot check.
    pub max_spot_weight: u64,
    /// Maximum `r` for multiplicity-table expansion.
    pub max_ns_r: i64,
    /// Maximum number of points a CLI sweep may enumerate.
    pub max_sweep_points: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_oracle_weight: 12,
            max_oracle_rank: 5,
            max_spot_weight: 18,
            max_ns_r: 20,
            max_sweep_points: 5_000_000,
        }
    }
}

impl Guards {
    /// Defaults, with the size guards raised to `SCHUR_GUARD_MAX` when that
    /// environment variable is set to a larger value.
    pub fn from_env() -> Self {
        let mut guards = Guards::default();
        if let Ok(text) = std::env::var("SCHUR_GUARD_MAX") {
            if let Ok(v) = text.trim().parse::<u64>() {
                guards.max_oracle_weight = guards.max_oracle_weight.max(v);
                guards.max_spot_weight = guards.max_spot_weight.max(v);
                guards.max_sweep_points = guards.max_sweep_points.max(v);
            }
        }
        guards
    }
}
