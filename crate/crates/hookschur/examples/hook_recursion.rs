//! Hooks and the recursion that defines them.
//!
//! The hook functor of weight `k` with arm `alpha` corresponds to the
//! partition `(alpha+1, 1, ..., 1)`. Column times row decomposes into two
//! consecutive hooks, and a hook vanishes at rank `e` once its leg is longer
//! than `e`:
//!
//! ```text
//! Lambda^(k-alpha) (x) Sym^alpha  =  Hook(k, alpha-1)  (+)  Hook(k, alpha)
//! ```
//!
//! Run with: `cargo run --example hook_recursion`

use hookschur::partitions::{hook_partition, Partition};
use hookschur::schur::{lr_product, SchurVector};

fn main() {
    println!("hooks of weight 4:");
    for alpha in 0..4 {
        let hook = hook_partition(4, alpha).unwrap();
        println!("  arm {alpha}: ({hook})");
    }
    println!();

    for (k, alpha, e) in [(4u32, 2u32, 6u32), (4, 1, 6), (5, 3, 3), (3, 2, 1)] {
        let column = Partition::make(&vec![1; (k - alpha) as usize]).unwrap();
        let row = Partition::make(&[alpha as i64]).unwrap();
        let product = lr_product(
            &SchurVector::with_term(e, column.clone(), 1),
            &SchurVector::with_term(e, row.clone(), 1),
        )
        .unwrap();

        let mut expected = SchurVector::zero(e);
        expected.add_term(hook_partition(k, alpha - 1).unwrap(), 1);
        expected.add_term(hook_partition(k, alpha).unwrap(), 1);

        println!("k={k}, alpha={alpha}, rank e={e}:");
        println!("  ({column}) * ({row}) = {}", product.to_json_string());
        println!("  two-hook sum        = {}", expected.to_json_string());
        assert_eq!(product, expected);
        if (k - alpha) as usize > e as usize {
            println!("  (leg longer than the rank: the deeper hook vanished)");
        }
        println!();
    }
}
