//! Vanishing queries and their decision traces.
//!
//! A query fixes the variety dimension `n`, the bundle rank `e`, the hook
//! `(k, alpha)`, the positivity grain `m` and a bidegree `(p, q)`. The report
//! shows the hypothesis partition, the side conditions, the threshold and
//! whether vanishing is guaranteed — for both orders of the bidegree. A false
//! flag never claims non-vanishing.
//!
//! Run with: `cargo run --example vanishing_reports`

use hookschur::vanishing::{evaluate, VanishingQuery};

fn main() {
    let queries = [
        // graded positivity with m = 2 at the top bidegree
        VanishingQuery::new(2, 2, 2, 2, 0, 2, 2).unwrap(),
        // same but the rank is too big for the threshold
        VanishingQuery::new(2, 4, 2, 2, 0, 2, 2).unwrap(),
        // the hook outgrows the rank: the functor is zero
        VanishingQuery::new(1, 2, 3, 1, 0, 1, 1).unwrap(),
        // an ample-bundle query away from the edge
        VanishingQuery::new(3, 4, 3, 1, 1, 2, 3).unwrap(),
    ];
    for q in &queries {
        let rep = evaluate(q).unwrap();
        println!("{}", rep.to_json());
        println!();
    }

    // the classical boundary at p = n, alpha = 0: vanishing kicks in exactly
    // at q = e - k + 1
    let (n, e, k) = (6, 6, 4);
    print!("p=n={n}, e={e}, k={k}, guarantee along q:");
    for q in 0..=n {
        let rep = evaluate(&VanishingQuery::new(n, e, k, 1, 0, n, q).unwrap()).unwrap();
        print!(" q={q}:{}", if rep.guaranteed_pq { "yes" } else { "no " });
    }
    println!();
}
