//! The dominance order, generalized across weights by scaling.
//!
//! Two partitions are compared through the partial sums of their parts after
//! scaling each to total 1; the comparison is evaluated with exact
//! cross-multiplied integers. Mutual dominance means proportionality.
//!
//! Run with: `cargo run --example dominance_order`

use hookschur::partitions::{
    delta, dominates, hook_partition, staircase_partition, Partition,
};

fn main() {
    let pairs = [
        ("3,2,2", "3,1,1,1,1"),
        ("2,2", "1,1"),
        ("1,1", "2"),
        ("3,1,1,1", "2,2,2"),
        ("4,2", "3,3"),
    ];
    for (a, b) in pairs {
        let i = Partition::from_text(a).unwrap();
        let j = Partition::from_text(b).unwrap();
        println!("({a}) vs ({b}): {:?}", dominates(&i, &j).unwrap());
    }
    println!();

    // The staircase partition of k into m nearly equal rows is the dominance
    // hypothesis of the graded vanishing criterion.
    for (k, m) in [(7u32, 3u32), (6, 2), (5, 5)] {
        let st = staircase_partition(k, m).unwrap();
        println!(
            "staircase k={k}, m={m}: l={}, s={}, partition ({})",
            st.l, st.s, st.partition
        );
        for alpha in 0..k {
            let hook = hook_partition(k, alpha).unwrap();
            println!(
                "   vs hook arm {alpha} ({}): {:?}",
                hook,
                dominates(&st.partition, &hook).unwrap()
            );
        }
    }
    println!();

    // delta is the staircase-counting inverse: C(d,2) <= x < C(d+1,2)
    let values: Vec<u64> = (0..=12).map(delta).collect();
    println!("delta(0..=12) = {values:?}");

    // conjugation flips rows and columns
    let p = Partition::from_text("4,2,1").unwrap();
    println!("conjugate of ({p}) is ({})", p.conjugate());
}
