// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Factoring Hamiltonian-path permutations into layers of adjacent transpositions.
//!
//! A sequence acts on an array by swapping positions: applying layers
//! `s_1, ..., s_m` to `a` gives `a ∘ τ(s_1) ∘ ... ∘ τ(s_m)`. Every synthesizer
//! here returns a sequence that turns the identity into its target.

use crate::error::{invalid, Result};
use crate::graph::VertexPermutation;

/// Swap of positions `lower` and `lower + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    pub lower: usize,
}

impl Transposition {
    pub fn new(lower: usize) -> Self {
        Self { lower }
    }

    pub fn upper(&self) -> usize {
        self.lower + 1
    }
}

/// Transpositions applied in parallel.
pub type Layer = Vec<Transposition>;

/// Ordered layers of parallel adjacent transpositions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TranspositionSequence {
    layers: Vec<Layer>,
}

impl TranspositionSequence {
    pub fn new(layers: Vec<Layer>) -> Self {
        Self { layers }
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn into_layers(self) -> Vec<Layer> {
        self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn transposition_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Same layers in opposite order. Each layer is an involution, so this
    /// undoes `self`.
    pub fn reversed(&self) -> Self {
        Self {
            layers: self.layers.iter().rev().cloned().collect(),
        }
    }

    pub fn then(mut self, other: TranspositionSequence) -> Self {
        self.layers.extend(other.layers);
        self
    }

    /// Checks that every layer stays inside `num_qubits` and touches each qubit at most once.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        for (n, layer) in self.layers.iter().enumerate() {
            validate_layer(layer, num_qubits).map_err(|e| invalid(format!("layer {n}: {e}")))?;
        }
        Ok(())
    }
}

pub(crate) fn validate_layer(layer: &[Transposition], num_qubits: usize) -> Result<()> {
    let mut used = vec![false; num_qubits];
    for t in layer {
        if t.upper() >= num_qubits {
            return Err(invalid(format!(
                "transposition ({}, {}) out of range for {num_qubits} qubits",
                t.lower,
                t.upper()
            )));
        }
        for q in [t.lower, t.upper()] {
            if used[q] {
                return Err(invalid(format!("qubit {q} appears twice in one layer")));
            }
            used[q] = true;
        }
    }
    Ok(())
}

/// Pairs `(first, first+1), (first+2, first+3), ...` whose upper end is at most `last`.
/// Empty when `first >= last`.
fn alternating(first: usize, last: usize) -> Layer {
    (first..last).step_by(2).map(Transposition::new).collect()
}

/// The parallel layer `τ(first, first+1) τ(first+2, first+3) ... τ(last-1, last)`
/// (0-based positions, `last` inclusive). Empty when `first >= last`.
pub fn alternating_layer(first: usize, last: usize, num_qubits: usize) -> Result<Layer> {
    if first >= num_qubits || last >= num_qubits {
        return Err(invalid(format!(
            "positions {first}..={last} out of range for {num_qubits} qubits"
        )));
    }
    Ok(alternating(first, last))
}

/// First group of the sorting sequence of path `k` (1-based label): it sorts
/// the leading `2k` positions. Layers are in application order.
pub fn group_g1(k: usize) -> TranspositionSequence {
    let layers = (1..=(2 * k).saturating_sub(2))
        .map(|m| {
            let last = 2 * k - m - 1;
            if m % 2 == 1 {
                alternating(1, last)
            } else {
                alternating(0, last)
            }
        })
        .collect();
    TranspositionSequence { layers }
}

/// Second group of the sorting sequence of path `k`: it sorts positions
/// `2k..L`. Empty when `2k + 1 > L`.
pub fn group_g2(k: usize, num_qubits: usize) -> TranspositionSequence {
    let count = num_qubits.saturating_sub(2 * k + 1);
    let layers = (1..=count)
        .map(|m| {
            let first = 2 * k + m - 1;
            let last = if m % 2 == 1 {
                num_qubits - 1
            } else {
                num_qubits - 2
            };
            alternating(first, last)
        })
        .collect();
    TranspositionSequence { layers }
}

/// Swaps positions of `p` layer by layer.
pub fn apply_sequence(
    p: &VertexPermutation,
    s: &TranspositionSequence,
) -> Result<VertexPermutation> {
    s.validate(p.len())?;
    let mut out = p.clone();
    for layer in s.layers() {
        for t in layer {
            out.swap_positions(t.lower);
        }
    }
    Ok(out)
}

fn check_walecki_args(k: usize, num_qubits: usize) -> Result<()> {
    if num_qubits < 2 || !num_qubits.is_multiple_of(2) {
        return Err(invalid(format!(
            "closed-form synthesis needs an even qubit count >= 2, got {num_qubits}"
        )));
    }
    if k < 1 || 2 * k > num_qubits {
        return Err(invalid(format!(
            "path label {k} outside 1..={}",
            num_qubits / 2
        )));
    }
    Ok(())
}

/// Sequence that sorts path `k` back to the identity: `G1(k)` then `G2(k, L)`.
pub fn walecki_sorting_sequence(k: usize, num_qubits: usize) -> Result<TranspositionSequence> {
    check_walecki_args(k, num_qubits)?;
    Ok(group_g1(k).then(group_g2(k, num_qubits)))
}

/// Closed-form factorization of zig-zag path `k` on an even number of qubits:
/// applying the result to the identity yields `walecki_path(k, L)`.
pub fn synthesize_walecki(k: usize, num_qubits: usize) -> Result<TranspositionSequence> {
    Ok(walecki_sorting_sequence(k, num_qubits)?.reversed())
}

/// Odd-even transposition sort of `p`, reversed so that it builds `p` from
/// the identity. Rounds alternate between pairs starting at position 0 and
/// pairs starting at position 1; rounds without a swap are dropped, so the
/// result has at most `L` layers.
pub fn synthesize_generic(p: &VertexPermutation) -> TranspositionSequence {
    let n = p.len();
    let mut work = p.as_slice().to_vec();
    let mut layers = Vec::new();
    for round in 0..n {
        let layer: Layer = ((round % 2)..n.saturating_sub(1))
            .step_by(2)
            .filter(|&i| work[i] > work[i + 1])
            .map(Transposition::new)
            .collect();
        for t in &layer {
            work.swap(t.lower, t.upper());
        }
        if !layer.is_empty() {
            layers.push(layer);
        }
    }
    debug_assert!(work.iter().enumerate().all(|(i, &v)| i == v));
    TranspositionSequence { layers }.reversed()
}
