//! Littlewood-Richardson products, tensor powers, dimensions, and the
//! independent monomial oracle.
//!
//! Products are computed by enumerating lattice skew tableaux; the oracle
//! multiplies monomial expansions built from semistandard tableaux and
//! decomposes by leading-term subtraction. The two code paths share nothing
//! past the `Partition` type, which is what makes the comparison a real
//! check.
//!
//! Run with: `cargo run --example schur_products`

use hookschur::partitions::{partitions_of_weight, Partition};
use hookschur::schur::{
    dimension, lr_product, one_dim_multiplicity, oracle_product_monomial, tensor_power,
    SchurVector,
};

fn main() {
    let e = 3;
    let i = Partition::from_text("2,1").unwrap();
    let j = Partition::from_text("1,1").unwrap();

    let product = lr_product(
        &SchurVector::with_term(e, i.clone(), 1),
        &SchurVector::with_term(e, j.clone(), 1),
    )
    .unwrap();
    println!("s_(2,1) * s_(1,1) at rank {e}:");
    println!("  rule:   {}", product.to_json_string());
    let oracle = oracle_product_monomial(&i, &j, e).unwrap();
    println!("  oracle: {}", oracle.to_json_string());
    assert_eq!(product, oracle);
    println!();

    // dimensions are multiplicative across a product
    let lhs: u128 = product
        .terms()
        .map(|(k, m)| m as u128 * dimension(k, e).unwrap())
        .sum();
    let rhs = dimension(&i, e).unwrap() * dimension(&j, e).unwrap();
    println!("dimension check: sum over summands {lhs} = {rhs} = dim(2,1)*dim(1,1)");
    println!();

    // tensor powers, restricted to two rows
    for t in 1..=3 {
        let power = tensor_power(&i, t, 2).unwrap();
        println!("s_(2,1)^{t} at rank 2: {}", power.to_json_string());
    }
    println!();

    // one-dimensional characters are the rectangles; their multiplicity in a
    // power detects determinant factors
    for w in 1..=3u64 {
        for shape in partitions_of_weight(w, 2) {
            let mult = one_dim_multiplicity(&shape, 2, 2).unwrap();
            println!("det-power multiplicity in s_({shape})^2 at rank 2: {mult}");
        }
    }
}
