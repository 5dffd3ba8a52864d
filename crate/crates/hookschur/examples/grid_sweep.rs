//! Deterministic parameter sweeps through the library API.
//!
//! Grid points are enumerated in lexicographic order and evaluated in
//! parallel; the merged output is identical for any worker count. The same
//! machinery backs `hookschur sweep vanish` and `hookschur sweep audit`.
//!
//! Run with: `cargo run --example grid_sweep`

use hookschur::audit::Mode;
use hookschur::guards::Guards;
use hookschur::sweep::{sweep_audit, sweep_vanish, AuditGrid, RangeSpec, VanishGrid};

fn main() {
    let grid = VanishGrid {
        n: RangeSpec::at(2),
        e: RangeSpec::span(2, 4),
        k: RangeSpec::span(1, 2),
        m: RangeSpec::span(1, 2),
        alpha: None,
        p: Some(RangeSpec::at(2)),
        q: Some(RangeSpec::parse("0..n").unwrap()),
    };
    let points = grid.points(&Guards::default()).unwrap();
    let reports = sweep_vanish(&points, Some(2));
    println!("n,e,k,m,alpha,p,q,threshold,guaranteed_pq");
    for rep in &reports {
        let q = &rep.query;
        println!(
            "{},{},{},{},{},{},{},{},{}",
            q.n, q.e, q.k, q.m, q.alpha, q.p, q.q, rep.threshold, rep.guaranteed_pq
        );
    }
    println!();

    let grid = AuditGrid {
        n: RangeSpec::span(1, 3),
        e: RangeSpec::span(1, 4),
        k: RangeSpec::span(1, 4),
        m: RangeSpec::span(1, 2),
        alpha0: None,
        p0: None,
        q0: None,
        modes: vec![Mode::P, Mode::Q],
    };
    let points = grid.points(&Guards::default()).unwrap();
    let reports = sweep_audit(&points, None);
    let failures = reports.iter().filter(|r| !r.pass()).count();
    println!(
        "audited {} parameter sets in both modes: {} failures",
        reports.len(),
        failures
    );
}
