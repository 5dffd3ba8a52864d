//! Multiplicity tables from the generating polynomial
//! `prod_{i=1..r} (1 + x^(r+1-i) z)`.
//!
//! `n_s(a)` counts the s-subsets of `{1, ..., r}` with sum `a`. The table
//! vanishes above `sigma(s) = r*s - C(s,2)` and takes value 1 there; these
//! are the weights of the hook terms on the first page of the audit's
//! spectral sequence.
//!
//! Run with: `cargo run --example ns_tables`

use hookschur::audit::ns_table;

fn main() {
    for r in 1..=5i64 {
        let table = ns_table(r).unwrap();
        println!("r = {r}:");
        for s in 0..=r {
            let row = &table.rows()[s as usize];
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("  s={s} (sigma={:>2}): {}", table.sigma(s), cells.join(" "));
            assert_eq!(table.value(s, table.sigma(s)), 1);
        }
        let total: u64 = table.rows().iter().flatten().sum();
        println!("  total {total} = 2^{r}");
        println!();
    }
}
