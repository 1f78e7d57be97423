//! Property tests for the arithmetic kernels.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use lieclass::dynkin_index::{
    dynkin_index_big, pi3_cokernel, smith_invariants, su2_index, IntMatrix,
};
use lieclass::geometry::{dims, phi, MultiplicityPair};
use lieclass::lie_data::SimpleType;
use lieclass::rational_topology::{homotopy_ranks_truncated, TruncatedAlgebraSpec};
use lieclass::rep_theory::{
    conjugate, dim_complex, dims_over, enumerate_irreps, field_type, DominantWeight, FieldType,
};

fn det(rows: &[Vec<i64>]) -> BigInt {
    // Cofactor expansion; sizes here are at most 3.
    let n = rows.len();
    if n == 1 {
        return BigInt::from(rows[0][0]);
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            BigInt::from(sign * rows[0][j]) * det(&minor)
        })
        .sum()
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-30i64..=30, n), n)
}

fn small_type() -> impl Strategy<Value = SimpleType> {
    let labels = [
        "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6",
    ];
    prop::sample::select(labels.to_vec()).prop_map(|s| s.parse().unwrap())
}

fn weight() -> impl Strategy<Value = DominantWeight> {
    small_type().prop_flat_map(|t| {
        prop::collection::vec(0u32..3, t.rank_usize())
            .prop_map(move |c| DominantWeight::new(t, c).unwrap())
    })
}

proptest! {
    #[test]
    fn invariant_factors_of_random_squares(rows in (1usize..=3).prop_flat_map(square)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = IntMatrix::from_i64(&refs);
        let inv = smith_invariants(&m);
        let d = det(&rows).abs();
        let product: BigInt = inv.iter().fold(BigInt::one(), |a, b| a * b);
        prop_assert_eq!(product, d.clone());
        for pair in inv.windows(2) {
            prop_assert!(pair[1].is_zero() || (!pair[0].is_zero() && pair[1].is_multiple_of(&pair[0])));
        }
        if !d.is_zero() {
            prop_assert_eq!(pi3_cokernel(&m).order(), Some(d));
        }
    }

    #[test]
    fn invariant_factors_are_unimodular_invariant(a in -20i64..=20, b in -20i64..=20, c in -20i64..=20, d in -20i64..=20, k in -5i64..=5) {
        let m = IntMatrix::from_i64(&[&[a, b], &[c, d]]);
        let sheared = IntMatrix::from_i64(&[&[a + k * c, b + k * d], &[c, d]]);
        let swapped = IntMatrix::from_i64(&[&[b, a], &[d, c]]);
        prop_assert_eq!(smith_invariants(&m), smith_invariants(&sheared));
        prop_assert_eq!(smith_invariants(&m), smith_invariants(&swapped));
    }

    #[test]
    fn conjugation_preserves_dimensions(w in weight()) {
        let c = conjugate(&w);
        prop_assert_eq!(dim_complex(&w), dim_complex(&c));
        prop_assert_eq!(dims_over(&w), dims_over(&c));
        prop_assert_eq!(conjugate(&c), w.clone());
        prop_assert_eq!(dynkin_index_big(&w), dynkin_index_big(&c));
        prop_assert_eq!(field_type(&w) == FieldType::C, c != w);
    }

    #[test]
    fn real_and_quaternionic_dimensions(w in weight()) {
        let dc = dim_complex(&w);
        let (dr, dh) = dims_over(&w);
        match field_type(&w) {
            FieldType::R => prop_assert_eq!((dr, dh), (dc.clone(), dc)),
            FieldType::C => prop_assert_eq!((dr, dh), (&dc * 2u32, dc)),
            FieldType::H => {
                prop_assert!(dc.is_even());
                prop_assert_eq!((dr, dh), (&dc * 2u32, dc / 2u32));
            }
        }
    }

    #[test]
    fn increasing_a_coefficient_increases_dimension(w in weight(), i in 0usize..8) {
        let i = i % w.coeffs.len();
        let mut bigger = w.clone();
        bigger.coeffs[i] += 1;
        prop_assert!(dim_complex(&bigger) > dim_complex(&w));
    }

    #[test]
    fn su2_index_is_a_tetrahedral_number(k in 0u64..2000) {
        prop_assert_eq!(su2_index(k) * 6, k * (k + 1) * (k + 2));
    }

    #[test]
    fn phi_counts_residues(k in 0u64..500) {
        let count = (1..=k).filter(|i| matches!(i % 8, 0 | 1 | 2 | 4)).count() as u64;
        prop_assert_eq!(phi(k), count);
        prop_assert_eq!(phi(k + 8), phi(k) + 4);
        prop_assert!(phi(k + 1) >= phi(k));
    }

    #[test]
    fn focal_dimensions(m1 in 1u64..10_000, m2 in 1u64..10_000) {
        let d = dims(MultiplicityPair::new(m1, m2).unwrap());
        prop_assert_eq!(d.dim_p + d.dim_l, 3 * (m1 + m2));
        prop_assert_eq!(d.dim_f + m1 + m2, d.dim_p + d.dim_l);
    }

    #[test]
    fn truncated_ranks_at_generator_and_relation(half in 1u32..20, m in 2u32..6, odd in prop::collection::vec((1u32..30).prop_map(|d| 2 * d + 1), 0..4)) {
        let a = 2 * half;
        let spec = TruncatedAlgebraSpec::new(a, m, odd.clone()).unwrap();
        let ranks = homotopy_ranks_truncated(&spec);
        let relation = m * a - 1;
        let at_relation = odd.iter().filter(|&&d| d == relation).count() as u32 + 1;
        prop_assert_eq!(ranks.rank(a), 1);
        prop_assert_eq!(ranks.rank(relation), at_relation);
        prop_assert_eq!(ranks.total(), 2 + odd.len() as u32);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_brute_force(t in prop::sample::select(vec!["A1", "A2", "B2", "G2", "A3"]), max_dim in 1u64..80) {
        let t: SimpleType = t.parse().unwrap();
        let mut listed: Vec<Vec<u32>> = enumerate_irreps(t, max_dim).into_iter().map(|d| d.weight.coeffs).collect();
        listed.sort();
        // Each unit of a coefficient raises the dimension by at least one,
        // so coefficient sums above max_dim - 1 cannot qualify.
        let bound = max_dim as u32 - 1;
        let mut brute = Vec::new();
        let mut stack = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == t.rank_usize() {
                let w = DominantWeight::new(t, prefix.clone()).unwrap();
                if dim_complex(&w) <= BigUint::from(max_dim) {
                    brute.push(prefix);
                }
                continue;
            }
            let used: u32 = prefix.iter().sum();
            for c in 0..=bound - used {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
        brute.sort();
        prop_assert_eq!(listed, brute);
    }
}
