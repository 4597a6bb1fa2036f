// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

use ising_daqc::graph::{walecki_path, VertexPermutation};
use ising_daqc::perm::{
    alternating_layer, apply_sequence, group_g1, group_g2, synthesize_generic,
    synthesize_walecki, walecki_sorting_sequence, Transposition, TranspositionSequence,
};
use proptest::prelude::*;

fn one_based(p: &VertexPermutation) -> Vec<usize> {
    p.to_one_based()
}

fn identity(n: usize) -> VertexPermutation {
    VertexPermutation::identity(n)
}

#[test]
fn closed_form_builds_every_path() {
    for n in (2..=12).step_by(2) {
        for k in 1..=n / 2 {
            let s = synthesize_walecki(k, n).unwrap();
            s.validate(n).unwrap();
            assert_eq!(apply_sequence(&identity(n), &s).unwrap(), walecki_path(k, n), "k={k} L={n}");
        }
    }
}

#[test]
fn path_three_takes_four_columns() {
    // Four parallel iSWAP columns prepare path 3 on six qubits.
    let s = synthesize_walecki(3, 6).unwrap();
    let lowers: Vec<Vec<usize>> = s
        .layers()
        .iter()
        .map(|l| l.iter().map(|t| t.lower).collect())
        .collect();
    assert_eq!(lowers, vec![vec![0], vec![1], vec![0, 2], vec![1, 3]]);
    assert_eq!(one_based(&apply_sequence(&identity(6), &s).unwrap()), vec![3, 4, 2, 5, 1, 6]);
}

#[test]
fn induction_step() {
    // Two alternating layers turn path k on 2k vertices into path k-1 on 2k-2
    // vertices followed by the two largest labels.
    for k in 2..=6 {
        let n = 2 * k;
        let s = TranspositionSequence::new(vec![
            alternating_layer(1, n - 2, n).unwrap(),
            alternating_layer(0, n - 3, n).unwrap(),
        ]);
        let got = apply_sequence(&walecki_path(k, n), &s).unwrap();
        let mut want = walecki_path(k - 1, n - 2).as_slice().to_vec();
        want.extend([n - 2, n - 1]);
        assert_eq!(got.as_slice(), want, "k={k}");
    }
}

#[test]
fn groups_of_first_path_on_two() {
    assert!(group_g1(1).is_empty());
    assert!(group_g2(1, 2).is_empty());
    assert!(synthesize_walecki(1, 2).unwrap().is_empty());
    assert!(apply_sequence(&walecki_path(1, 2), &TranspositionSequence::default())
        .unwrap()
        .is_identity());
}

#[test]
fn last_group_is_trivial_for_middle_path() {
    for n in (2..=12).step_by(2) {
        assert!(group_g2(n / 2, n).is_empty());
    }
}

#[test]
fn generic_matches_closed_form_targets() {
    for n in 2usize..=11 {
        for k in 1..=n.div_ceil(2) {
            let p = walecki_path(k, n);
            let s = synthesize_generic(&p);
            s.validate(n).unwrap();
            assert!(s.len() <= n);
            assert_eq!(apply_sequence(&identity(n), &s).unwrap(), p);
        }
    }
}

#[test]
fn generic_reversal_depth() {
    let rev = VertexPermutation::from_one_based(&[5, 4, 3, 2, 1]).unwrap();
    let s = synthesize_generic(&rev);
    assert_eq!(s.len(), 5);
    // Layers alternate between pairs at even and odd positions.
    for w in s.layers().windows(2) {
        assert_ne!(w[0][0].lower % 2, w[1][0].lower % 2);
    }
}

fn permutation(max: usize) -> impl Strategy<Value = VertexPermutation> {
    (1..=max)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| VertexPermutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn generic_round_trip(p in permutation(12)) {
        let s = synthesize_generic(&p);
        prop_assert!(s.validate(p.len()).is_ok());
        prop_assert!(s.len() <= p.len());
        prop_assert_eq!(apply_sequence(&identity(p.len()), &s).unwrap(), p);
    }

    #[test]
    fn reversed_sequence_undoes(p in permutation(12)) {
        let s = synthesize_generic(&p);
        let there = apply_sequence(&p, &s).unwrap();
        prop_assert_eq!(apply_sequence(&there, &s.reversed()).unwrap(), p.clone());
        let built = apply_sequence(&identity(p.len()), &s).unwrap();
        prop_assert!(apply_sequence(&built, &s.reversed()).unwrap().is_identity());
    }

    #[test]
    fn groups_commute(half in 1usize..=8, k_seed in any::<usize>()) {
        let n = 2 * half;
        let k = 1 + k_seed % half;
        let p = walecki_path(k, n);
        let g1 = group_g1(k);
        let g2 = group_g2(k, n);
        let a = apply_sequence(&p, &g1.clone().then(g2.clone())).unwrap();
        let b = apply_sequence(&p, &g2.then(g1)).unwrap();
        prop_assert!(a.is_identity());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn every_layer_is_disjoint(half in 1usize..=10, k_seed in any::<usize>()) {
        let n = 2 * half;
        let k = 1 + k_seed % half;
        for s in [synthesize_walecki(k, n).unwrap(), walecki_sorting_sequence(k, n).unwrap()] {
            for layer in s.layers() {
                let mut used = vec![false; n];
                for t in layer {
                    prop_assert!(t.upper() < n);
                    prop_assert!(!used[t.lower] && !used[t.upper()]);
                    used[t.lower] = true;
                    used[t.upper()] = true;
                }
            }
        }
    }
}

#[test]
fn transposition_accessors() {
    let t = Transposition::new(3);
    assert_eq!((t.lower, t.upper()), (3, 4));
    let s = synthesize_walecki(2, 8).unwrap();
    assert_eq!(s.transposition_count(), s.layers().iter().map(Vec::len).sum::<usize>());
}
