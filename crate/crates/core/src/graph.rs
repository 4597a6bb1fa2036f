// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Ising Hamiltonians as weighted graphs, and the rotated zig-zag
//! decomposition of the complete graph into Hamiltonian paths.
//!
//! Qubits are 0-based throughout. Literature that labels qubits `1..=L`
//! maps onto this crate by subtracting one from every label.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};

/// Undirected edge stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Canonical form of the edge joining `u` and `v`.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Symmetric ZZ coupling graph `g_{ij}` over `num_qubits` qubits.
///
/// Absent edges have coupling zero. Explicit zeros are kept so that sparse
/// targets round-trip unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingGraph {
    num_qubits: usize,
    weights: BTreeMap<Edge, f64>,
}

impl CouplingGraph {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits < 2 {
            return Err(invalid(format!("need at least 2 qubits, got {num_qubits}")));
        }
        Ok(Self {
            num_qubits,
            weights: BTreeMap::new(),
        })
    }

    /// Homogeneous all-to-all graph `K_L` with every coupling equal to `g`.
    pub fn complete(num_qubits: usize, g: f64) -> Result<Self> {
        let mut graph = Self::new(num_qubits)?;
        for u in 0..num_qubits {
            for v in u + 1..num_qubits {
                graph.set(u, v, g)?;
            }
        }
        Ok(graph)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Overwrites the coupling between `u` and `v`.
    pub fn set(&mut self, u: usize, v: usize, g: f64) -> Result<()> {
        self.check_pair(u, v)?;
        if !g.is_finite() {
            return Err(invalid(format!("coupling {u}-{v} is not finite")));
        }
        self.weights.insert(edge(u, v), g);
        Ok(())
    }

    /// Accumulates `g` onto the coupling between `u` and `v`.
    pub fn add(&mut self, u: usize, v: usize, g: f64) -> Result<()> {
        self.check_pair(u, v)?;
        *self.weights.entry(edge(u, v)).or_insert(0.0) += g;
        Ok(())
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.weights.get(&edge(u, v)).copied().unwrap_or(0.0)
    }

    /// Stored edges in canonical order, including explicit zeros.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.weights.iter().map(|(&e, &w)| (e, w))
    }

    /// Largest absolute difference between two graphs over the union of their edges.
    pub fn max_abs_diff(&self, other: &CouplingGraph) -> f64 {
        let keys: BTreeSet<Edge> = self
            .weights
            .keys()
            .chain(other.weights.keys())
            .copied()
            .collect();
        keys.into_iter()
            .map(|(u, v)| (self.get(u, v) - other.get(u, v)).abs())
            .fold(0.0, f64::max)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(invalid(format!("self-loop on qubit {u}")));
        }
        if u >= self.num_qubits || v >= self.num_qubits {
            return Err(invalid(format!(
                "edge {u}-{v} out of range for {} qubits",
                self.num_qubits
            )));
        }
        Ok(())
    }
}

/// Nearest-neighbour chain: slot `j` couples qubits `j` and `j + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct NnChain {
    couplings: Vec<f64>,
}

impl NnChain {
    pub fn new(couplings: Vec<f64>) -> Result<Self> {
        if couplings.is_empty() {
            return Err(invalid("a chain needs at least one slot"));
        }
        if let Some(j) = couplings.iter().position(|g| !g.is_finite()) {
            return Err(invalid(format!("resource coupling {j} is not finite")));
        }
        Ok(Self { couplings })
    }

    pub fn homogeneous(num_qubits: usize, g: f64) -> Result<Self> {
        if num_qubits < 2 {
            return Err(invalid(format!("need at least 2 qubits, got {num_qubits}")));
        }
        Self::new(vec![g; num_qubits - 1])
    }

    pub fn num_qubits(&self) -> usize {
        self.couplings.len() + 1
    }

    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }
}

/// A Hamiltonian path written as the order in which it visits the qubits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(invalid(format!("{order:?} is not a permutation of 0..{n}")));
            }
            seen[v] = true;
        }
        Ok(Self(order))
    }

    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    /// Builds from 1-based labels, as permutations are usually printed.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        if order.contains(&0) {
            return Err(invalid("1-based permutation contains 0"));
        }
        Self::new(order.iter().map(|v| v - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// Edge carried by each chain slot, in slot order.
    pub fn slot_edges(&self) -> Vec<Edge> {
        self.0.windows(2).map(|w| edge(w[0], w[1])).collect()
    }
}

/// Edges of the Hamiltonian path described by `p`: consecutive entries are joined.
pub fn path_edges(p: &VertexPermutation) -> BTreeSet<Edge> {
    p.slot_edges().into_iter().collect()
}

/// Path `k` (1-based label) of the rotated zig-zag family on `num_qubits` vertices.
///
/// Position `j` (0-based) holds `k - 1 + (j + 1) / 2` when `j` is odd and
/// `k - 1 - j / 2` when `j` is even, both reduced mod `num_qubits`. Path 1 starts at
/// vertex 0 and alternately steps forward 1, backward 2, forward 3, ...;
/// the remaining paths are rotations of it.
pub fn walecki_path(k: usize, num_qubits: usize) -> VertexPermutation {
    debug_assert!(k >= 1 && num_qubits >= 1);
    let n = num_qubits as i64;
    let base = k as i64 - 1;
    let order = (0..num_qubits as i64)
        .map(|j| {
            let v = if j % 2 == 1 {
                base + (j + 1) / 2
            } else {
                base - j / 2
            };
            v.rem_euclid(n) as usize
        })
        .collect();
    VertexPermutation(order)
}

/// The `L/2` edge-disjoint Hamiltonian paths that tile `K_L`, for even `L`.
pub fn walecki_paths(num_qubits: usize) -> Result<Vec<VertexPermutation>> {
    if num_qubits < 2 || !num_qubits.is_multiple_of(2) {
        return Err(invalid(format!(
            "path decomposition needs an even qubit count >= 2, got {num_qubits}"
        )));
    }
    Ok((1..=num_qubits / 2)
        .map(|k| walecki_path(k, num_qubits))
        .collect())
}

/// A set of Hamiltonian paths plus, per path, the slots whose edge is switched off.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCover {
    pub paths: Vec<VertexPermutation>,
    pub disabled_slots: Vec<BTreeSet<usize>>,
}

impl PathCover {
    pub fn num_qubits(&self) -> usize {
        self.paths.first().map_or(0, VertexPermutation::len)
    }

    pub fn is_enabled(&self, path: usize, slot: usize) -> bool {
        !self.disabled_slots[path].contains(&slot)
    }

    /// Enabled edges with their `(path, slot)` location, in path then slot order.
    pub fn enabled_edges(&self) -> Vec<(Edge, usize, usize)> {
        let mut out = Vec::new();
        for (k, p) in self.paths.iter().enumerate() {
            for (slot, e) in p.slot_edges().into_iter().enumerate() {
                if self.is_enabled(k, slot) {
                    out.push((e, k, slot));
                }
            }
        }
        out
    }

    pub fn disabled_count(&self) -> usize {
        self.disabled_slots.iter().map(BTreeSet::len).sum()
    }
}

/// Odd `L`: the `(L+1)/2` zig-zag paths overlap, so every repeated edge is
/// switched off in all but the first path that carries it.
pub fn walecki_paths_odd(num_qubits: usize) -> Result<PathCover> {
    if num_qubits < 3 || num_qubits.is_multiple_of(2) {
        return Err(invalid(format!(
            "odd path cover needs an odd qubit count >= 3, got {num_qubits}"
        )));
    }
    let paths: Vec<_> = (1..=num_qubits.div_ceil(2))
        .map(|k| walecki_path(k, num_qubits))
        .collect();
    let mut seen = BTreeSet::new();
    let disabled_slots = paths
        .iter()
        .map(|p| {
            p.slot_edges()
                .into_iter()
                .enumerate()
                .filter(|&(_, e)| !seen.insert(e))
                .map(|(slot, _)| slot)
                .collect()
        })
        .collect();
    Ok(PathCover {
        paths,
        disabled_slots,
    })
}

/// Path cover for any `L >= 2`: disjoint paths for even `L`, the overlapping
/// family with disabled slots for odd `L`.
pub fn path_cover(num_qubits: usize) -> Result<PathCover> {
    if num_qubits.is_multiple_of(2) {
        let paths = walecki_paths(num_qubits)?;
        let disabled_slots = vec![BTreeSet::new(); paths.len()];
        Ok(PathCover {
            paths,
            disabled_slots,
        })
    } else {
        walecki_paths_odd(num_qubits)
    }
}

/// Graph obtained by running each path's chain Hamiltonian for its time:
/// `g_{uv} = sum over (path, slot) carrying {u,v} of time * weight`.
///
/// Because ZZ terms commute this is exactly the generator of the product of
/// the individual path evolutions.
pub fn compose_weighted_paths(
    cover: &PathCover,
    slot_weights: &[Vec<f64>],
    times: &[f64],
) -> Result<CouplingGraph> {
    let n_paths = cover.paths.len();
    if slot_weights.len() != n_paths || times.len() != n_paths {
        return Err(invalid(format!(
            "{n_paths} paths but {} weight rows and {} times",
            slot_weights.len(),
            times.len()
        )));
    }
    let num_qubits = cover.num_qubits();
    let mut graph = CouplingGraph::new(num_qubits)?;
    for (k, (p, weights)) in cover.paths.iter().zip(slot_weights).enumerate() {
        if p.len() != num_qubits || weights.len() + 1 != num_qubits {
            return Err(invalid(format!(
                "path {k} has {} vertices and {} slot weights",
                p.len(),
                weights.len()
            )));
        }
        for (slot, (e, &w)) in p.slot_edges().iter().zip(weights).enumerate() {
            if !cover.is_enabled(k, slot) {
                if w != 0.0 {
                    return Err(invalid(format!(
                        "disabled slot {slot} of path {k} has weight {w}"
                    )));
                }
                continue;
            }
            graph.add(e.0, e.1, times[k] * w)?;
        }
    }
    Ok(graph)
}
