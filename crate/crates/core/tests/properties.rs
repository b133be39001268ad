use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use kostka_core::exact::Cyclotomic;
use kostka_core::factor::solve_factorization;
use kostka_core::greencheck::{lemma59_check, prefix_sum_check};
use kostka_core::omega::{epsilon_value, omega_matrix, rho_character, wreath_group, WREATH_BOUND};
use kostka_core::rpart::{
    compositions, enumerate_contingency, enumerate_rpartitions, factorial, sample_linear_extensions,
};
use kostka_core::symgrp::{char_table, double_cosets};

#[test]
fn character_tables_are_orthogonal() {
    for n in 0..=6 {
        let t = char_table(n);
        let k = t.partitions.len();
        for a in 0..k {
            for b in 0..k {
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                assert_eq!(t.row_inner(a, b), want, "n={n} rows {a},{b}");
                let z = if a == b { t.z[a] as i64 } else { 0 };
                assert_eq!(t.column_inner(a, b), z, "n={n} columns {a},{b}");
            }
        }
    }
}

fn coset_partition_complete(n: u32, r: usize, i: usize, j: usize) {
    let cs = compositions(n, r);
    let (m, mp) = (&cs[i % cs.len()], &cs[j % cs.len()]);
    let dcs = double_cosets(m, mp).unwrap();
    let total: u128 = dcs.iter().map(|d| d.size).sum();
    assert_eq!(total, factorial(n), "m={:?} m'={:?}", m.0, mp.0);
    let mut labels: Vec<_> = dcs.iter().map(|d| d.label.clone()).collect();
    labels.sort();
    labels.dedup();
    assert_eq!(labels.len(), dcs.len(), "labels repeat");
    let mut want = enumerate_contingency(m, mp).unwrap();
    want.sort();
    assert_eq!(labels, want);
}

#[test]
fn double_cosets_partition_the_group() {
    for n in 0..=6 {
        let cs = compositions(n, 2).len();
        for i in 0..cs {
            for j in 0..cs {
                coset_partition_complete(n, 2, i, j);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_cosets_partition_sampled(n in 0u32..=6, r in 1usize..=4, i in 0usize..1000, j in 0usize..1000) {
        coset_partition_complete(n, r, i, j);
    }

    #[test]
    fn factorization_reconstructs_under_any_order(n in 1u32..=3, r in 1usize..=3, seed in any::<u64>()) {
        let om = omega_matrix(&kostka_core::rpart::default_total_order(n, r)).unwrap();
        for o in sample_linear_extensions(n, r, 2, seed) {
            let res = solve_factorization(&om.reorder(&o).unwrap()).unwrap();
            prop_assert!(res.invariant_violations().is_empty());
        }
    }

    #[test]
    fn a_values_and_dim_shift(n in 0u32..=6, r in 1usize..=5, k in 0usize..10_000) {
        let all = enumerate_rpartitions(n, r);
        let l = &all[k % all.len()];
        prop_assert_eq!(l.weight().dim_xm_unip() - l.dim_x(), 2 * l.n_value() as i64);
        prop_assert_eq!(l.tau().tau().n(), l.n());
        prop_assert!(l.a_value() >= 0 && l.a_value() <= kostka_core::rpart::n_star(n, r));
    }
}

#[test]
fn transpose_twists_by_sign() {
    for n in 1..=3usize {
        for r in 1..=3u32 {
            let g = wreath_group(n, r, WREATH_BOUND).unwrap();
            for l in enumerate_rpartitions(n as u32, r as usize) {
                let lt = l.transpose();
                for w in &g.elements {
                    let a = rho_character(&lt, w, &g);
                    let b = rho_character(&l, w, &g) * Cyclotomic::from_int(epsilon_value(w));
                    assert!(a == b, "n={n} r={r} lambda={l}");
                }
            }
        }
    }
}

#[test]
fn dim_unipotent_minus_dim_x() {
    for n in 0..=4 {
        for r in 1..=4 {
            for l in enumerate_rpartitions(n, r) {
                assert_eq!(l.weight().dim_xm_unip() - l.dim_x(), 2 * l.n_value() as i64, "{l}");
            }
        }
    }
}

#[test]
fn exponent_identities_exhaustive() {
    for n in 0..=4 {
        for r in 1..=4 {
            let a = lemma59_check(n, r).unwrap();
            assert!(a.pass, "{:?}", a.violations);
            let b = prefix_sum_check(n, r).unwrap();
            assert!(b.pass, "{:?}", b.violations);
        }
    }
}
