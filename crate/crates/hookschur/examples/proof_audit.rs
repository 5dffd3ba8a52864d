//! A walkthrough of the induction bookkeeping audit.
//!
//! For one parameter set the audit enumerates the induction set `B`, derives
//! the per-triple flag scalars, expands the first page of the associated
//! spectral sequence into hook terms, and then verifies mechanically that
//! every morphism target stays inside `B`, that the induction variable
//! strictly descends, and that the positivity condition reduces to its
//! closed form on the binding triples.
//!
//! Run with: `cargo run --example proof_audit`

use hookschur::audit::{
    e1_terms, enumerate_b, flag_geometry, full_audit, induction_scalars, k_alpha_profile,
    e1_closed_form_valid, AuditParams, Mode,
};

fn main() {
    let params = AuditParams::new(3, 4, 3, 1, 1, 2, 2, Mode::P).unwrap();
    println!(
        "params: n={} e={} k={} m={} alpha0={} p0={} q0={} (r0={})",
        params.n, params.e, params.k, params.m, params.alpha0, params.p0, params.q0,
        params.r0()
    );

    let b = enumerate_b(&params);
    println!("induction set B has {} triples; first few:", b.len());
    for t in b.iter().take(6) {
        let sc = induction_scalars(&params, t.alpha, t.p).unwrap();
        print!(
            "  (alpha={}, p={}, q={}): Q={} L={} A={} k-bound={}",
            t.alpha, t.p, t.q, sc.q_offset, sc.l_value, sc.a_value, sc.k_bound
        );
        match flag_geometry(&params, t.alpha, t.p) {
            Ok(geo) => println!(
                "  r={} l={} s={} P={} chi={} dimY={}",
                geo.r, geo.l, geo.s, geo.p_degree, geo.chi, geo.dim_y
            ),
            Err(err) => println!("  ({err})"),
        }
    }
    println!();

    // the first-page decomposition at the diagonal column contains the
    // distinguished multiplicity-one summand at beta = alpha
    let t = &b[0];
    println!(
        "first-page terms at (alpha={}, p={}, q={}), column p'={} (closed form known valid: {}):",
        t.alpha,
        t.p,
        t.q,
        t.p,
        e1_closed_form_valid(&params, t.alpha, t.p).unwrap()
    );
    for term in e1_terms(&params, t.alpha, t.p, t.q, t.p).unwrap() {
        println!(
            "  beta={} q'={} multiplicity={}",
            term.beta, term.q_target, term.multiplicity
        );
    }
    println!();

    let profile = k_alpha_profile(&params);
    println!("weight-bound profile:");
    for en in &profile.entries {
        println!(
            "  alpha={}: A={} k-bound={} floor={:?}",
            en.alpha, en.a_value, en.k_bound, en.floor
        );
    }
    println!(
        "  bracketing inequality holds: {}",
        profile.delta_inequality_ok
    );
    println!();

    for mode in [Mode::P, Mode::Q] {
        let p = AuditParams::new(3, 4, 3, 1, 1, 2, 2, mode).unwrap();
        let report = full_audit(&p);
        println!(
            "full audit, {:?}-mode: B has {} triples, {} checks, pass = {}",
            mode,
            report.b_size,
            report.checks.len(),
            report.pass()
        );
        for c in &report.checks {
            println!("  {} {}", if c.pass { "ok  " } else { "FAIL" }, c.name);
        }
    }
}
