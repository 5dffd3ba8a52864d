//! Direct-sum branching and line-bundle peeling.
//!
//! `S_I(A + B)` splits into pairs `S_J(A) (x) S_K(B)` with Littlewood-
//! Richardson multiplicities. Peeling rank-1 summands one at a time shows
//! that a hook of smaller weight, twisted by a line-bundle power, sits inside
//! the bigger hook of the enlarged bundle — the mechanism that removes lower
//! bounds on the weight.
//!
//! Run with: `cargo run --example branching`

use hookschur::partitions::{hook_partition, Partition};
use hookschur::schur::{branch_direct_sum, dimension, line_summand_multiplicity};

fn main() {
    let i = Partition::from_text("2,1").unwrap();
    println!("S_(2,1)(A + B) with rank(A)=2, rank(B)=1:");
    for ((j, k), mult) in branch_direct_sum(&i, 2, 1) {
        println!(
            "  {mult} x S_({}) (x) S_({})",
            j,
            if k.is_empty() { "0".to_string() } else { k.to_string() }
        );
    }
    let total: u128 = branch_direct_sum(&i, 2, 1)
        .iter()
        .map(|((j, k), &c)| c as u128 * dimension(j, 2).unwrap() * dimension(k, 1).unwrap())
        .sum();
    println!("  dimension check: {total} = {}", dimension(&i, 3).unwrap());
    println!();

    // hooks of the same arm nest across weights once a line bundle soaks up
    // the difference
    for (k, kp, alpha) in [(3u32, 2u32, 1u32), (4, 2, 1), (5, 2, 0), (5, 3, 2)] {
        let outer = hook_partition(k, alpha).unwrap();
        let inner = hook_partition(kp, alpha).unwrap();
        let e_prime = inner.len() as u32 + 1;
        let mult = line_summand_multiplicity(&outer, &inner, e_prime);
        println!(
            "S_({inner}) (x) L^{} inside S_({outer})(A + L + ... + L) at rank(A)={e_prime}: multiplicity {mult}",
            k - kp
        );
        assert!(mult >= 1);
    }
}
