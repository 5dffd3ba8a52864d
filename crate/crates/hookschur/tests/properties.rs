//! Cross-module invariants: order axioms for dominance, algebraic laws for
//! the Schur product, consistency between independent code paths.

use proptest::prelude::*;

use hookschur::partitions::{
    delta, dominates, hook_partition, partitions_of_weight, staircase_partition, Dominance,
    Partition,
};
use hookschur::schur::{
    branch_direct_sum, dimension, lr_product, one_dim_multiplicity, tensor_power, SchurVector,
};

fn single_of(i: &Partition, rank: u32) -> SchurVector {
    SchurVector::with_term(rank, i.clone(), 1)
}

// ---------------------------------------------------------------------------
// dominance is a partial order on each fixed weight
// ---------------------------------------------------------------------------

#[test]
fn dominance_partial_order_axioms_weight_at_most_8() {
    for w in 1..=8u64 {
        let parts = partitions_of_weight(w, w as usize);
        for a in &parts {
            assert_eq!(dominates(a, a).unwrap(), Dominance::Equivalent);
        }
        for a in &parts {
            for b in &parts {
                let ab = dominates(a, b).unwrap();
                let ba = dominates(b, a).unwrap();
                // antisymmetry up to proportionality; same weight means equality
                if ab == Dominance::Equivalent {
                    assert_eq!(a, b);
                    assert_eq!(ba, Dominance::Equivalent);
                }
                match ab {
                    Dominance::StrictlyDominates => assert_eq!(ba, Dominance::Dominated),
                    Dominance::Dominated => assert_eq!(ba, Dominance::StrictlyDominates),
                    Dominance::Incomparable => assert_eq!(ba, Dominance::Incomparable),
                    Dominance::Equivalent => {}
                }
            }
        }
        // transitivity of "dominates or equivalent"
        let le = |x: &Partition, y: &Partition| {
            matches!(
                dominates(x, y).unwrap(),
                Dominance::StrictlyDominates | Dominance::Equivalent
            )
        };
        for a in &parts {
            for b in &parts {
                if !le(a, b) {
                    continue;
                }
                for c in &parts {
                    if le(b, c) {
                        assert!(le(a, c), "transitivity fails: {a} >= {b} >= {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn staircase_dominates_hooks_that_fit_under_its_first_row() {
    // Exact characterization: the staircase of k into m rows dominates the
    // hook (alpha+1, 1, ...) precisely when alpha+1 fits into its first row.
    // Both partitions grow their later partial sums by at least one per row,
    // so the first row decides.
    for k in 1..=10u32 {
        for m in 1..=k {
            let st = staircase_partition(k, m).unwrap();
            let first_row = st.partition.part(0);
            for alpha in 0..k {
                let hook = hook_partition(k, alpha).unwrap();
                let rel = dominates(&st.partition, &hook).unwrap();
                let expected = alpha < first_row;
                assert_eq!(
                    matches!(rel, Dominance::StrictlyDominates | Dominance::Equivalent),
                    expected,
                    "staircase {} vs hook {} (k={k}, m={m}, alpha={alpha}): got {rel:?}",
                    st.partition,
                    hook
                );
            }
        }
    }
}

#[test]
fn coarser_staircases_dominate_finer_ones() {
    // The induction rests on this comparison: the hypothesis staircase with m
    // rows dominates every same-weight staircase with r >= m rows.
    for k in 1..=10u32 {
        for m in 1..=k {
            let coarse = staircase_partition(k, m).unwrap();
            for r in m..=k {
                let fine = staircase_partition(k, r).unwrap();
                let rel = dominates(&coarse.partition, &fine.partition).unwrap();
                assert!(
                    matches!(rel, Dominance::StrictlyDominates | Dominance::Equivalent),
                    "staircase {} does not dominate {} (k={k}, m={m}, r={r})",
                    coarse.partition,
                    fine.partition
                );
            }
        }
    }
}

#[test]
fn balanced_staircase_is_equivalent_to_column() {
    // s = 0 makes the staircase proportional to (1, ..., 1)
    for m in 1..=5u32 {
        for l in 1..=4u32 {
            let st = staircase_partition(l * m, m).unwrap();
            assert_eq!(st.s, 0);
            let column = Partition::make(&vec![1; m as usize]).unwrap();
            assert_eq!(
                dominates(&st.partition, &column).unwrap(),
                Dominance::Equivalent
            );
        }
    }
}

// ---------------------------------------------------------------------------
// product laws
// ---------------------------------------------------------------------------

#[test]
fn lr_product_unit_and_associativity_small() {
    let parts: Vec<Partition> = (0..=3u64)
        .flat_map(|w| partitions_of_weight(w, 3))
        .collect();
    for e in 1..=3u32 {
        let unit = SchurVector::unit(e);
        for a in &parts {
            let va = SchurVector::with_term(e, a.clone(), 1);
            assert_eq!(lr_product(&va, &unit).unwrap(), va);
            assert_eq!(lr_product(&unit, &va).unwrap(), va);
            for b in &parts {
                let vb = SchurVector::with_term(e, b.clone(), 1);
                let ab = lr_product(&va, &vb).unwrap();
                for c in &parts {
                    let vc = SchurVector::with_term(e, c.clone(), 1);
                    let bc = lr_product(&vb, &vc).unwrap();
                    assert_eq!(
                        lr_product(&ab, &vc).unwrap(),
                        lr_product(&va, &bc).unwrap(),
                        "associativity fails at ({a}, {b}, {c}), e={e}"
                    );
                }
            }
        }
    }
}

#[test]
fn dimension_is_additive_over_products() {
    for e in 1..=4u32 {
        let parts: Vec<Partition> = (0..=5u64)
            .flat_map(|w| partitions_of_weight(w, e as usize))
            .collect();
        for a in &parts {
            for b in &parts {
                let prod = lr_product(&single_of(a, e), &single_of(b, e)).unwrap();
                let total: u128 = prod
                    .terms()
                    .map(|(k, m)| m as u128 * dimension(k, e).unwrap())
                    .sum();
                assert_eq!(
                    total,
                    dimension(a, e).unwrap() * dimension(b, e).unwrap(),
                    "dimension additivity fails at ({a}, {b}), e={e}"
                );
            }
        }
    }
}

#[test]
fn branching_dimensions_sum_to_direct_sum_dimension() {
    for ea in 1..=3u32 {
        for eb in 1..=3u32 {
            let parts: Vec<Partition> = (0..=5u64)
                .flat_map(|w| partitions_of_weight(w, (ea + eb) as usize))
                .collect();
            for i in &parts {
                let total: u128 = branch_direct_sum(i, ea, eb)
                    .iter()
                    .map(|((j, k), &c)| {
                        c as u128 * dimension(j, ea).unwrap() * dimension(k, eb).unwrap()
                    })
                    .sum();
                assert_eq!(
                    total,
                    dimension(i, ea + eb).unwrap(),
                    "branching dimension fails at {i}, ea={ea}, eb={eb}"
                );
            }
        }
    }
}

#[test]
fn hook_content_dimension_matches_weyl_product() {
    // independent route: dim = prod_{i<j} (l_i - l_j + j - i) / (j - i)
    // over the partition padded to e rows
    fn weyl(i: &Partition, e: usize) -> u128 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for a in 0..e {
            for b in (a + 1)..e {
                let la = i.part(a) as i64;
                let lb = i.part(b) as i64;
                num *= (la - lb + b as i64 - a as i64) as u128;
                den *= (b - a) as u128;
            }
        }
        num / den
    }
    for e in 1..=5u32 {
        for w in 0..=8u64 {
            for i in partitions_of_weight(w, e as usize) {
                assert_eq!(
                    dimension(&i, e).unwrap(),
                    weyl(&i, e as usize),
                    "dimension routes disagree at {i}, e={e}"
                );
            }
        }
    }
}

#[test]
fn branching_coefficients_match_products() {
    // c^I_{J,K} from the skew enumeration must equal the coefficient of I in
    // s_J * s_K from the strip-chain expansion.
    for w in 1..=5u64 {
        for i in partitions_of_weight(w, 4) {
            for ((j, k), c) in branch_direct_sum(&i, 4, 4) {
                let prod = lr_product(&single_of(&j, 4), &single_of(&k, 4)).unwrap();
                assert_eq!(
                    prod.multiplicity(&i),
                    c as i64,
                    "coefficient mismatch for I={i}, J={j}, K={k}"
                );
            }
        }
    }
}

#[test]
fn one_dim_summands_are_determinant_powers() {
    // nonzero only when e divides the total weight, and then the multiplicity
    // equals that of the rectangle
    for e in 1..=3u32 {
        for w in 1..=4u64 {
            for i in partitions_of_weight(w, e as usize) {
                for t in 1..=3u32 {
                    let mult = one_dim_multiplicity(&i, t, e).unwrap();
                    let total = w * t as u64;
                    if !total.is_multiple_of(e as u64) {
                        assert_eq!(mult, 0);
                    } else {
                        let c = (total / e as u64) as i64;
                        let rect = Partition::make(&vec![c; e as usize]).unwrap();
                        let power = tensor_power(&i, t, e).unwrap();
                        assert_eq!(mult, power.multiplicity(&rect));
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_power_commutes_with_rank_restriction() {
    for i in partitions_of_weight(3, 2) {
        for t in 1..=3u32 {
            let wide = tensor_power(&i, t, 6).unwrap();
            let narrow = tensor_power(&i, t, 2).unwrap();
            let mut restricted = SchurVector::zero(2);
            for (k, m) in wide.terms() {
                restricted.add_term(k.clone(), m);
            }
            assert_eq!(restricted, narrow, "restriction mismatch for {i}^{t}");
        }
    }
}

// ---------------------------------------------------------------------------
// randomized properties
// ---------------------------------------------------------------------------

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let raw: Vec<i64> = v.into_iter().map(|x| x as i64).collect();
        Partition::make(&raw).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(i in arb_partition(6, 6)) {
        prop_assert_eq!(i.conjugate().conjugate(), i);
    }

    #[test]
    fn conjugate_preserves_weight(i in arb_partition(6, 6)) {
        prop_assert_eq!(i.conjugate().weight(), i.weight());
    }

    #[test]
    fn delta_brackets_its_argument(x in 0u64..100_000) {
        let d = delta(x);
        prop_assert!(d * (d - 1) / 2 <= x);
        prop_assert!(x < d * (d + 1) / 2);
        prop_assert!(delta(x + 1) >= d);
    }

    #[test]
    fn dominance_is_scale_invariant(
        i in arb_partition(4, 4),
        j in arb_partition(4, 4),
        c in 1u32..=4,
    ) {
        prop_assume!(!i.is_empty() && !j.is_empty());
        let plain = dominates(&i, &j).unwrap();
        prop_assert_eq!(dominates(&i.scaled(c), &j).unwrap(), plain);
        prop_assert_eq!(dominates(&i, &j.scaled(c)).unwrap(), plain);
    }

    #[test]
    fn lr_product_is_commutative(
        i in arb_partition(4, 3),
        j in arb_partition(4, 3),
        e in 1u32..=4,
    ) {
        let u = SchurVector::with_term(e, i, 1);
        let v = SchurVector::with_term(e, j, 1);
        prop_assert_eq!(lr_product(&u, &v).unwrap(), lr_product(&v, &u).unwrap());
    }

    #[test]
    fn product_weight_is_homogeneous(
        i in arb_partition(4, 3),
        j in arb_partition(4, 3),
    ) {
        let w = i.weight() + j.weight();
        let prod = lr_product(
            &SchurVector::with_term(8, i, 1),
            &SchurVector::with_term(8, j, 1),
        )
        .unwrap();
        for (k, m) in prod.terms() {
            prop_assert!(m > 0);
            prop_assert_eq!(k.weight(), w);
        }
    }
}
