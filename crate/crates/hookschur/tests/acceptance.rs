//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//!
//! Every check is exact integer arithmetic; there are no tolerances anywhere.

use std::process::Command;
use std::time::Instant;

use hookschur::audit::{ns_table, Mode};
use hookschur::guards::Guards;
use hookschur::partitions::{
    choose2, delta, hook_partition, partitions_of_weight, Partition,
};
use hookschur::schur::{
    dominance_spot_check, line_summand_multiplicity, lr_product, one_dim_multiplicity,
    oracle_product_monomial, SchurVector,
};
use hookschur::sweep::{sweep_audit, AuditGrid, RangeSpec};
use hookschur::vanishing::{evaluate, thm21_threshold, thm22_threshold, VanishingQuery};

fn report(number: u32, name: &str, detail: String, started: Instant) {
    println!(
        "acceptance {number} ({name}): PASS — {detail} [{:.2}s]",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn acceptance_01_lr_oracle_equivalence() {
    let started = Instant::now();
    let mut pairs = 0u64;
    // all pairs of weight at most 6 including shapes longer than the rank,
    // which both code paths must treat as zero
    let shapes: Vec<Partition> = (0..=6u64)
        .flat_map(|w| partitions_of_weight(w, 6))
        .collect();
    for e in 1..=4u32 {
        for i in &shapes {
            for j in &shapes {
                let via_rule = lr_product(
                    &SchurVector::with_term(e, i.clone(), 1),
                    &SchurVector::with_term(e, j.clone(), 1),
                )
                .unwrap();
                let via_oracle = oracle_product_monomial(i, j, e).unwrap();
                assert_eq!(
                    via_rule, via_oracle,
                    "rule and oracle disagree at I={i}, J={j}, e={e}"
                );
                pairs += 1;
            }
        }
    }
    report(1, "lr-oracle equivalence", format!("{pairs} pairs, e <= 4"), started);
}

#[test]
fn acceptance_02_hook_recursion() {
    let started = Instant::now();
    let mut cases = 0u64;
    for k in 2..=8u32 {
        for alpha in 1..k {
            for e in 1..=8u32 {
                let column = Partition::make(&vec![1; (k - alpha) as usize]).unwrap();
                let row = Partition::make(&[alpha as i64]).unwrap();
                let lhs = lr_product(
                    &SchurVector::with_term(e, column, 1),
                    &SchurVector::with_term(e, row, 1),
                )
                .unwrap();
                let mut rhs = SchurVector::zero(e);
                rhs.add_term(hook_partition(k, alpha - 1).unwrap(), 1);
                rhs.add_term(hook_partition(k, alpha).unwrap(), 1);
                assert_eq!(lhs, rhs, "hook recursion fails at k={k}, alpha={alpha}, e={e}");
                cases += 1;
            }
        }
    }
    report(2, "hook recursion", format!("{cases} cases, k <= 8, e <= 8"), started);
}

#[test]
fn acceptance_03_delta_function() {
    let started = Instant::now();
    for x in 0..=1000u64 {
        let d = delta(x);
        assert!(d >= 1 && d * (d - 1) / 2 <= x && x < d * (d + 1) / 2);
    }
    for m in 1..=40u64 {
        assert_eq!(delta(m * (m - 1) / 2), m);
    }
    let mut grid = 0u64;
    for n in 1..=8i64 {
        for p0 in 0..=n {
            for m in 1..=3i64 {
                for alpha0 in 0..=6i64 {
                    let r0 = delta((n - p0 + choose2(m)) as u64) as i64;
                    assert!(
                        n - p0 + r0 * alpha0 + choose2(alpha0 + 1) < choose2(r0 + alpha0 + 1),
                        "bracketing inequality fails at n={n}, p0={p0}, m={m}, alpha0={alpha0}"
                    );
                    grid += 1;
                }
            }
        }
    }
    report(
        3,
        "delta function",
        format!("bracketing to 1000, inversion to 40, {grid} inequality points"),
        started,
    );
}

#[test]
fn acceptance_04_ns_tables() {
    let started = Instant::now();
    for r in 1..=12i64 {
        let table = ns_table(r).unwrap();
        // independent oracle: subset sums of {1, ..., r} by bitmask
        let max_a = (r * (r + 1) / 2) as usize;
        let mut oracle = vec![vec![0u64; max_a + 1]; r as usize + 1];
        for mask in 0u32..(1 << r) {
            let s = mask.count_ones() as usize;
            let sum: u32 = (0..r as u32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).sum();
            oracle[s][sum as usize] += 1;
        }
        for s in 0..=r {
            let sigma = table.sigma(s);
            assert_eq!(table.value(s, sigma), 1, "n_s(sigma) != 1 at r={r}, s={s}");
            for a in 0..=(max_a as i64) {
                assert_eq!(
                    table.value(s, a),
                    oracle[s as usize][a as usize],
                    "table and subset oracle disagree at r={r}, s={s}, a={a}"
                );
                if a > sigma {
                    assert_eq!(table.value(s, a), 0);
                }
            }
        }
    }
    report(4, "n_s tables", "generating function matches subset-sum oracle, r <= 12".to_string(), started);
}

#[test]
fn acceptance_05_theorem_coincidence() {
    let started = Instant::now();
    let mut points = 0u64;
    for n in 1..=10i64 {
        for p in 0..=n {
            let r = delta((n - p) as u64) as i64;
            for k in 1..=10i64 {
                for alpha in 0..k {
                    for e in 1..=12i64 {
                        assert_eq!(
                            thm22_threshold(r, alpha, e, k),
                            thm21_threshold(n, p, alpha, e, k).unwrap(),
                            "thresholds differ at n={n}, p={p}, alpha={alpha}, e={e}, k={k}"
                        );
                        points += 1;
                    }
                }
            }
        }
    }
    report(5, "theorem coincidence", format!("{points} points"), started);
}

#[test]
fn acceptance_06_top_bidegree_boundary() {
    let started = Instant::now();
    let mut points = 0u64;
    for e in 1..=10i64 {
        let n = e;
        for k in 1..=e {
            for q in 0..=n {
                let query = VanishingQuery::new(n, e, k, 1, 0, n, q).unwrap();
                let rep = evaluate(&query).unwrap();
                assert_eq!(
                    rep.guaranteed_pq,
                    q > e - k,
                    "guarantee boundary is q >= e-k+1; wrong at e={e}, k={k}, q={q}"
                );
                points += 1;
            }
        }
    }
    report(
        6,
        "top-bidegree boundary",
        format!("{points} points: guarantee iff q >= e-k+1"),
        started,
    );
}

#[test]
fn acceptance_07_proof_audit_grid() {
    let started = Instant::now();
    let grid = AuditGrid {
        n: RangeSpec::span(1, 4),
        e: RangeSpec::span(1, 6),
        k: RangeSpec::span(1, 6),
        m: RangeSpec::span(1, 3),
        alpha0: None,
        p0: None,
        q0: None,
        modes: vec![Mode::P, Mode::Q],
    };
    let points = grid.points(&Guards::default()).unwrap();
    let reports = sweep_audit(&points, None);
    let mut failures = Vec::new();
    for rep in &reports {
        if !rep.pass() {
            failures.push(format!(
                "{:?} failed: {:?}",
                rep.params,
                rep.failed_check_names()
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "{} audit failures, first: {}",
        failures.len(),
        failures.first().cloned().unwrap_or_default()
    );
    report(
        7,
        "proof audit grid",
        format!("{} parameter sets, both modes, all checks pass", reports.len()),
        started,
    );
}

#[test]
fn acceptance_08_dominance_spot_checks() {
    let started = Instant::now();
    let mut checks = 0u64;
    for e in 1..=3u32 {
        let shapes: Vec<Partition> = (1..=3u64)
            .flat_map(|w| partitions_of_weight(w, e as usize))
            .collect();
        let others: Vec<Partition> = (1..=3u64)
            .flat_map(|w| partitions_of_weight(w, 3))
            .collect();
        for i in &shapes {
            for j in &others {
                for kfactor in 1..=2u32 {
                    let rep = dominance_spot_check(i, j, kfactor, e).unwrap();
                    assert!(
                        rep.pass,
                        "spot check fails at I={i}, J={j}, kfactor={kfactor}, e={e}: missing {:?}",
                        rep.missing
                    );
                    checks += 1;
                }
            }
        }
    }
    let mut one_dim = 0u64;
    for e in 1..=3u32 {
        for w in 1..=4u64 {
            for i in partitions_of_weight(w, e as usize) {
                let mult = one_dim_multiplicity(&i, e, e).unwrap();
                assert!(mult >= 1, "no one-dimensional summand for {i} at e={e}");
                one_dim += 1;
            }
        }
    }
    report(
        8,
        "dominance spot checks",
        format!("{checks} dominance checks, {one_dim} determinant-power checks"),
        started,
    );
}

#[test]
fn acceptance_09_direct_summand_peeling() {
    let started = Instant::now();
    let mut cases = 0u64;
    for k in 2..=5u32 {
        for kp in 1..k {
            for alpha in 0..kp {
                let outer = hook_partition(k, alpha).unwrap();
                let inner = hook_partition(kp, alpha).unwrap();
                let min_rank = inner.len() as u32;
                for e_prime in min_rank..=4 {
                    let mult = line_summand_multiplicity(&outer, &inner, e_prime);
                    assert!(
                        mult >= 1,
                        "hook ({kp},{alpha}) with line power {} missing from ({k},{alpha}) at rank {e_prime}",
                        k - kp
                    );
                    cases += 1;
                }
            }
        }
    }
    report(9, "direct summand peeling", format!("{cases} hook pairs"), started);
}

#[test]
fn acceptance_10_cli_determinism() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_hookschur");
    let audit_args = [
        "sweep", "audit", "--n", "1..2", "--e", "1..3", "--k", "1..3", "--m", "1..2",
    ];
    let run = |extra: &[&str]| {
        let out = Command::new(bin)
            .args(audit_args)
            .args(extra)
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "sweep audit exited nonzero");
        out.stdout
    };
    let first = run(&["--jobs", "1"]);
    let second = run(&["--jobs", "1"]);
    let parallel = run(&["--jobs", "4"]);
    assert_eq!(first, second, "repeated runs differ");
    assert_eq!(first, parallel, "worker count changes output");

    let vanish_args = [
        "sweep", "vanish", "--n", "1..3", "--e", "1..4", "--k", "1..3", "--m", "1..2", "--q",
        "0..n",
    ];
    let run_v = |extra: &[&str]| {
        let out = Command::new(bin)
            .args(vanish_args)
            .args(extra)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let v1 = run_v(&["--jobs", "1"]);
    let v2 = run_v(&["--jobs", "3"]);
    assert_eq!(v1, v2, "vanish sweep differs across worker counts");
    assert!(!v1.is_empty());
    report(
        10,
        "cli determinism",
        format!("byte-identical sweeps ({} + {} bytes)", first.len(), v1.len()),
        started,
    );
}
