//! Independent brute-force oracles checked against the main code paths.

mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use sl2_branching::branching::{hook_content_dimension, principal_character};
use sl2_branching::laurent::{chi, sym_powers_from_weights, LaurentPoly};
use sl2_branching::partitions::{
    add_horizontal_strips, add_vertical_strips, dual_diagram, find_even_column_completion,
    find_even_row_completion, partitions_up_to, Partition,
};
use sl2_branching::sl2::{
    decompose, ext_power_character, irrep_weights, lowest_type, sym_power_character,
};

/// Sum of `q^(w_1 + ... + w_m)` over multisets of size `m` drawn from `weights`.
fn multiset_sum(weights: &[i64], m: usize) -> LaurentPoly {
    fn rec(weights: &[i64], start: usize, left: usize, acc: i64, out: &mut BTreeMap<i64, i64>) {
        if left == 0 {
            *out.entry(acc).or_default() += 1;
            return;
        }
        for i in start..weights.len() {
            rec(weights, i, left - 1, acc + weights[i], out);
        }
    }
    let mut out = BTreeMap::new();
    rec(weights, 0, m, 0, &mut out);
    LaurentPoly::from_terms(out)
}

/// Same over subsets of size `k`.
fn subset_sum(weights: &[i64], k: usize) -> LaurentPoly {
    let n = weights.len();
    let pairs = (0u32..1 << n).filter(|mask| mask.count_ones() as usize == k).map(|mask| {
        let e: i64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| weights[i]).sum();
        (e, 1)
    });
    LaurentPoly::from_terms(pairs)
}

/// The literal one-weight update `h'_k = Σ_i h_(k-i) q^(i w)` on sparse polys.
fn sym_powers_literal(weights: &[i64], m: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(); m + 1];
    h[0] = LaurentPoly::one();
    for &w in weights {
        h = (0..=m)
            .map(|k| (0..=k).map(|i| h[k - i].shift(i as i64 * w)).sum())
            .collect();
    }
    h
}

#[test]
fn sym_power_matches_multiset_enumeration() {
    for d in 0..=6 {
        for m in 0..=6 {
            assert_eq!(
                sym_power_character(m, d),
                multiset_sum(&irrep_weights(d), m as usize),
                "m={m} d={d}"
            );
        }
    }
}

#[test]
fn recurrence_matches_literal_convolution_update() {
    let weights = [3, -1, 0, 2, -4, 2];
    assert_eq!(sym_powers_from_weights(&weights, 5), sym_powers_literal(&weights, 5));
}

#[test]
fn ext_power_matches_subset_enumeration() {
    for d in 0..=8 {
        for k in 0..=d + 2 {
            assert_eq!(
                ext_power_character(k, d),
                subset_sum(&irrep_weights(d), k as usize),
                "k={k} d={d}"
            );
        }
    }
}

#[test]
fn small_plethysms_by_hand() {
    // S^2(F_2) = F_4 + F_0
    assert_eq!(
        decompose(&sym_power_character(2, 2)).unwrap().types().collect::<Vec<_>>(),
        vec![0, 4]
    );
    // S^3(F_2) = F_6 + F_2
    assert_eq!(
        decompose(&sym_power_character(3, 2)).unwrap().types().collect::<Vec<_>>(),
        vec![2, 6]
    );
    // Λ^2(F_3) = F_4 + F_0
    assert_eq!(ext_power_character(2, 3), &chi(4) + &chi(0));
}

#[test]
fn published_table_matches_pointwise_computation() {
    for (m, row) in common::PUBLISHED_TABLE.iter().enumerate() {
        for (d, &want) in row.iter().enumerate() {
            assert_eq!(lowest_type(m as u32, d as u32), want, "ℓ({m},{d})");
        }
    }
}

#[test]
fn row_prefixes_used_in_the_case_analysis() {
    let row = |m: u32, upto: u32| (0..=upto).map(|d| lowest_type(m, d)).collect::<Vec<_>>();
    assert_eq!(row(6, 17), vec![0, 6, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0, 0, 0]);
    assert_eq!(row(7, 14), vec![0, 7, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 0]);
}

#[test]
fn hook_content_dimension_matches_specialization() {
    for n in 2..=6 {
        for lambda in partitions_up_to(8, n) {
            let dim = principal_character(&lambda, n).unwrap().eval_at_one();
            assert_eq!(
                dim,
                BigInt::from(hook_content_dimension(&lambda, n)),
                "λ={lambda} n={n}"
            );
        }
    }
}

/// Horizontal strips by filtering all partitions of the right size.
fn strips_by_filter(lambda: &Partition, d: u32, rows: usize, horizontal: bool) -> Vec<Partition> {
    let target = lambda.size() + d;
    let mut out: Vec<Partition> = partitions_up_to(target, rows)
        .into_iter()
        .filter(|rho| rho.size() == target && rho.contains(lambda))
        .filter(|rho| {
            (0..rows).all(|i| {
                if horizontal {
                    i == 0 || rho.part(i) <= lambda.part(i - 1)
                } else {
                    rho.part(i) - lambda.part(i) <= 1
                }
            })
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[test]
fn strip_enumeration_matches_filtering() {
    for lambda in partitions_up_to(5, 4) {
        for d in 0..=3 {
            for rows in lambda.len().max(1)..=4 {
                assert_eq!(
                    add_horizontal_strips(&lambda, d, rows),
                    strips_by_filter(&lambda, d, rows, true),
                    "horizontal λ={lambda} d={d} rows={rows}"
                );
                assert_eq!(
                    add_vertical_strips(&lambda, d, rows),
                    strips_by_filter(&lambda, d, rows, false),
                    "vertical λ={lambda} d={d} rows={rows}"
                );
            }
        }
    }
}

#[test]
fn even_completions_match_pairing_construction() {
    // Even columns forces ρ_(2i-1) = ρ_(2i) = ν_(2i-1) for the dual ν, so the
    // added box count is Σ (ν_(2i-1) - ν_(2i)). Even rows adds one box to
    // every odd row.
    for n in [2usize, 4, 6] {
        for mu in partitions_up_to(6, n) {
            let nu = dual_diagram(&mu, n).unwrap();
            let expected: u32 = (0..n).step_by(2).map(|i| nu.part(i) - nu.part(i + 1)).sum();
            let (d, witness) = find_even_column_completion(&mu, n).unwrap();
            assert_eq!(d, expected, "μ={mu} n={n}");
            assert!(d <= n as u32 * mu.part(0).max(1));
            assert!(witness.has_even_columns());
            assert!(add_horizontal_strips(&nu, d, n).contains(&witness));
        }
    }
    for n in [1usize, 3, 5, 7] {
        for nu0 in partitions_up_to(6, n) {
            let nu = dual_diagram(&nu0, n).unwrap();
            let expected = nu.parts().iter().filter(|p| *p % 2 == 1).count() as u32;
            let (k, witness) = find_even_row_completion(&nu0, n).unwrap();
            assert_eq!(k, expected, "ν={nu0} n={n}");
            assert!(witness.has_even_rows());
            assert!(add_vertical_strips(&nu, k, n).contains(&witness));
        }
    }
}
