// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::BTreeSet;

use ising_daqc::graph::{
    compose_weighted_paths, path_cover, path_edges, walecki_path, walecki_paths,
    walecki_paths_odd, CouplingGraph, Edge, PathCover, VertexPermutation,
};
use proptest::prelude::*;

/// Path 1 by walking +1, -2, +3, -4, ... from vertex 0; path k is it shifted by k - 1.
fn zigzag_reference(k: usize, n: usize) -> Vec<usize> {
    let mut v: i64 = 0;
    let mut out = vec![0usize];
    for step in 1..n as i64 {
        v += if step % 2 == 1 { step } else { -step };
        out.push(v.rem_euclid(n as i64) as usize);
    }
    out.iter().map(|x| (x + k - 1) % n).collect()
}

fn complete_edges(n: usize) -> BTreeSet<Edge> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn set(pairs: &[(usize, usize)]) -> BTreeSet<Edge> {
    pairs.iter().map(|&(a, b)| (a.min(b) - 1, a.max(b) - 1)).collect()
}

#[test]
fn closed_form_matches_zigzag_walk() {
    for n in 1..=12 {
        for k in 1..=n {
            assert_eq!(walecki_path(k, n).as_slice(), zigzag_reference(k, n), "k={k} L={n}");
        }
    }
}

#[test]
fn even_paths_tile_complete_graph() {
    for n in (2..=12).step_by(2) {
        let paths = walecki_paths(n).unwrap();
        assert_eq!(paths.len(), n / 2);
        let mut union = BTreeSet::new();
        for p in &paths {
            for e in path_edges(p) {
                assert!(union.insert(e), "edge {e:?} repeated at L={n}");
            }
        }
        assert_eq!(union, complete_edges(n));
        assert_eq!(union.len(), n * (n - 1) / 2);
    }
}

#[test]
fn six_qubit_paths() {
    let one_based: Vec<_> = walecki_paths(6).unwrap().iter().map(|p| p.to_one_based()).collect();
    assert_eq!(
        one_based,
        vec![vec![1, 2, 6, 3, 5, 4], vec![2, 3, 1, 4, 6, 5], vec![3, 4, 2, 5, 1, 6]]
    );
    assert_eq!(walecki_paths(2).unwrap()[0].to_one_based(), vec![1, 2]);
    assert_eq!(path_cover(8).unwrap().enabled_edges().len(), 28);
}

#[test]
fn path_edge_examples() {
    let p = VertexPermutation::from_one_based(&[1, 3, 4, 2, 5]).unwrap();
    assert_eq!(path_edges(&p), set(&[(1, 3), (3, 4), (4, 2), (2, 5)]));
    assert_eq!(
        path_edges(&VertexPermutation::identity(4)),
        set(&[(1, 2), (2, 3), (3, 4)])
    );
    assert_eq!(
        path_edges(&walecki_path(1, 6)),
        set(&[(1, 2), (2, 6), (6, 3), (3, 5), (5, 4)])
    );
}

#[test]
fn odd_covers_enable_each_edge_once() {
    for n in (3..=13).step_by(2) {
        let cover = walecki_paths_odd(n).unwrap();
        assert_eq!(cover.paths.len(), n.div_ceil(2));
        let enabled: Vec<Edge> = cover.enabled_edges().into_iter().map(|(e, _, _)| e).collect();
        let unique: BTreeSet<Edge> = enabled.iter().copied().collect();
        assert_eq!(unique.len(), enabled.len(), "L={n}");
        assert_eq!(unique, complete_edges(n), "L={n}");
        let slots = cover.paths.len() * (n - 1);
        assert_eq!(cover.disabled_count(), slots - n * (n - 1) / 2, "L={n}");
    }
}

#[test]
fn odd_cover_counts() {
    let three = walecki_paths_odd(3).unwrap();
    assert_eq!(three.paths.len(), 2);
    assert_eq!(three.enabled_edges().len(), 3);

    let five = walecki_paths_odd(5).unwrap();
    assert_eq!(five.paths.len(), 3);
    assert_eq!(five.paths.len() * 4, 12);
    assert_eq!(five.enabled_edges().len(), 10);
    assert_eq!(five.disabled_count(), 2);
}

#[test]
fn first_occurrence_keeps_edge() {
    for n in [3, 5, 7, 9] {
        let cover = walecki_paths_odd(n).unwrap();
        for (k, disabled) in cover.disabled_slots.iter().enumerate() {
            for &slot in disabled {
                let e = cover.paths[k].slot_edges()[slot];
                let earlier = (0..k).any(|j| {
                    cover.paths[j]
                        .slot_edges()
                        .iter()
                        .enumerate()
                        .any(|(s, &f)| f == e && cover.is_enabled(j, s))
                });
                assert!(earlier, "L={n}: edge {e:?} disabled in path {k} without an earlier carrier");
            }
        }
        assert!(cover.disabled_slots[0].is_empty());
    }
}

#[test]
fn wrong_parity_rejected() {
    assert!(walecki_paths(5).is_err());
    assert!(walecki_paths(0).is_err());
    assert!(walecki_paths_odd(4).is_err());
    assert!(walecki_paths_odd(1).is_err());
}

#[test]
fn compose_examples() {
    let p = walecki_path(2, 5);
    let single = PathCover {
        paths: vec![p.clone()],
        disabled_slots: vec![BTreeSet::new()],
    };
    let g = compose_weighted_paths(&single, &[vec![1.0; 4]], &[0.3]).unwrap();
    let edges: Vec<_> = g.edges().collect();
    assert_eq!(edges.len(), 4);
    for (e, w) in edges {
        assert!(path_edges(&p).contains(&e));
        assert_eq!(w, 0.3);
    }

    let cover = path_cover(6).unwrap();
    let g = compose_weighted_paths(&cover, &vec![vec![1.0; 5]; 3], &[1.0; 3]).unwrap();
    assert_eq!(g, CouplingGraph::complete(6, 1.0).unwrap());

    let twice = PathCover {
        paths: vec![p.clone(), p],
        disabled_slots: vec![BTreeSet::new(); 2],
    };
    let g = compose_weighted_paths(&twice, &[vec![0.7; 4], vec![0.7; 4]], &[0.4, -0.4]).unwrap();
    assert!(g.max_abs_diff(&CouplingGraph::new(5).unwrap()) < 1e-15);
}

#[test]
fn compose_rejects_weight_on_disabled_slot() {
    let cover = walecki_paths_odd(5).unwrap();
    let (k, slot) = cover
        .disabled_slots
        .iter()
        .enumerate()
        .find_map(|(k, d)| d.iter().next().map(|&s| (k, s)))
        .unwrap();
    let mut weights = vec![vec![0.0; 4]; 3];
    weights[k][slot] = 1.0;
    assert!(compose_weighted_paths(&cover, &weights, &[1.0; 3]).is_err());
    assert!(compose_weighted_paths(&cover, &weights[..2], &[1.0; 2]).is_err());
}

fn weight_rows(n: usize, paths: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(-2.0f64..2.0, n - 1), paths)
}

proptest! {
    #[test]
    fn compose_is_linear(
        half in 1usize..=5,
        seed in any::<u64>(),
        a in -2.0f64..2.0,
        b in -2.0f64..2.0,
    ) {
        let n = 2 * half;
        let cover = path_cover(n).unwrap();
        let paths = cover.paths.len();
        let mut r = common::rng(seed);
        let mut draw = |m: usize| -> Vec<f64> { (0..m).map(|_| common::uniform(&mut r, -2.0, 2.0)).collect() };
        let w1: Vec<Vec<f64>> = (0..paths).map(|_| draw(n - 1)).collect();
        let w2: Vec<Vec<f64>> = (0..paths).map(|_| draw(n - 1)).collect();
        let t1 = draw(paths);
        let t2 = draw(paths);

        // Additive in the weights at fixed times.
        let mixed: Vec<Vec<f64>> = w1
            .iter()
            .zip(&w2)
            .map(|(x, y)| x.iter().zip(y).map(|(p, q)| a * p + b * q).collect())
            .collect();
        let g1 = compose_weighted_paths(&cover, &w1, &t1).unwrap();
        let g2 = compose_weighted_paths(&cover, &w2, &t1).unwrap();
        let gm = compose_weighted_paths(&cover, &mixed, &t1).unwrap();
        for (e, w) in gm.edges() {
            prop_assert!((w - (a * g1.get(e.0, e.1) + b * g2.get(e.0, e.1))).abs() < 1e-12);
        }

        // Additive in the times at fixed weights.
        let ts: Vec<f64> = t1.iter().zip(&t2).map(|(x, y)| x + y).collect();
        let h1 = compose_weighted_paths(&cover, &w1, &t1).unwrap();
        let h2 = compose_weighted_paths(&cover, &w1, &t2).unwrap();
        let hs = compose_weighted_paths(&cover, &w1, &ts).unwrap();
        for (e, w) in hs.edges() {
            prop_assert!((w - h1.get(e.0, e.1) - h2.get(e.0, e.1)).abs() < 1e-12);
        }
    }

    #[test]
    fn odd_cover_reaches_every_edge(half in 1usize..=5, rows in weight_rows(11, 6)) {
        let n = 2 * half + 1;
        let cover = path_cover(n).unwrap();
        // Zero the disabled slots, then each enabled (path, slot) maps to its own edge.
        let weights: Vec<Vec<f64>> = (0..cover.paths.len())
            .map(|k| (0..n - 1).map(|s| if cover.is_enabled(k, s) { rows[k][s] } else { 0.0 }).collect())
            .collect();
        let g = compose_weighted_paths(&cover, &weights, &vec![1.0; cover.paths.len()]).unwrap();
        for (e, k, s) in cover.enabled_edges() {
            prop_assert_eq!(g.get(e.0, e.1), weights[k][s]);
        }
    }
}
