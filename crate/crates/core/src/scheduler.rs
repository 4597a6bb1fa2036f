// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Realizing an arbitrary nearest-neighbour ZZ evolution from a fixed
//! nearest-neighbour resource chain.
//!
//! A target phase `φ_j` on slot `j` becomes the ratio `b_j = φ_j / (g_j t_f)`.
//! After relabelling and sign flipping so that the ratios are non-negative
//! and non-increasing, block `n` runs the resource for `t_n` with slot `p`
//! (in sorted order) flipped whenever `p > n`. Flips are produced by
//! conjugating the block with X gates on a prefix-parity colouring of the
//! chain. The total analog time equals `max_j |b_j| t_f`, which is the
//! smallest possible.

use crate::error::{invalid, Error, Result};
use crate::graph::NnChain;

/// Blocks shorter than `DEFAULT_EPSILON * t_f` are dropped.
pub const DEFAULT_EPSILON: f64 = 1e-12;

/// Target-to-resource coupling ratios, one per chain slot.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioVector(pub Vec<f64>);

impl RatioVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// How slots were relabelled and sign-flipped before solving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationRecord {
    /// `slot_order[p]` is the original slot placed at sorted position `p`.
    pub slot_order: Vec<usize>,
    /// Slots whose ratio was negative; their coupling is inverted in every block.
    pub slot_sign_flips: Vec<bool>,
}

impl NormalizationRecord {
    /// Sorted position of every original slot.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.slot_order.len()];
        for (p, &slot) in self.slot_order.iter().enumerate() {
            pos[slot] = p;
        }
        pos
    }

    /// Maps a sorted-order vector back onto original slots, restoring signs.
    pub fn denormalize(&self, sorted: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; sorted.len()];
        for (p, &slot) in self.slot_order.iter().enumerate() {
            out[slot] = if self.slot_sign_flips[slot] {
                -sorted[p]
            } else {
                sorted[p]
            };
        }
        out
    }
}

/// The `±1` matrix relating block durations to ratios: `b = M t / t_f`.
///
/// Entry `(row, col)` is `+1` when `col >= row` and `-1` otherwise. Row `p`
/// belongs to sorted slot `p`; column `n` gives the slot signs used by block `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignMatrix {
    n: usize,
}

impl SignMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        if col >= row {
            1
        } else {
            -1
        }
    }

    pub fn row(&self, row: usize) -> Vec<i8> {
        (0..self.n).map(|c| self.entry(row, c)).collect()
    }

    pub fn column(&self, col: usize) -> Vec<i8> {
        (0..self.n).map(|r| self.entry(r, col)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| f64::from(self.entry(r, c))).collect())
            .collect()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|r| {
                compensated_sum(
                    x.iter()
                        .enumerate()
                        .map(|(c, &v)| f64::from(self.entry(r, c)) * v),
                )
            })
            .collect()
    }
}

pub fn m_matrix(n: usize) -> Result<SignMatrix> {
    if n == 0 {
        return Err(invalid("sign matrix dimension must be at least 1"));
    }
    Ok(SignMatrix { n })
}

/// Inverse of the sign matrix by Gauss-Jordan row operations on `[M | I]`:
/// first `r_i <- (r_i + r_0) / 2` for `i > 0`, then `r_i <- r_i - r_{i+1}`
/// for `i = 0..n-2` in increasing order.
///
/// Only used to cross-check the closed-form durations.
pub fn m_inverse(n: usize) -> Result<Vec<Vec<f64>>> {
    let m = m_matrix(n)?.to_dense();
    let mut aug: Vec<Vec<f64>> = m
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    let first = aug[0].clone();
    for row in aug.iter_mut().skip(1) {
        for (x, f) in row.iter_mut().zip(&first) {
            *x = (*x + f) / 2.0;
        }
    }
    for i in 0..n.saturating_sub(1) {
        let next = aug[i + 1].clone();
        for (x, f) in aug[i].iter_mut().zip(&next) {
            *x -= f;
        }
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `b_j = φ_j / (g_j t_f)`. A zero-coupling slot is allowed only with a zero target.
pub fn ratios(target_angles: &[f64], resource: &NnChain, t_f: f64) -> Result<RatioVector> {
    let g = resource.couplings();
    if target_angles.len() != g.len() {
        return Err(invalid(format!(
            "{} target angles for a chain with {} slots",
            target_angles.len(),
            g.len()
        )));
    }
    if !(t_f > 0.0 && t_f.is_finite()) {
        return Err(invalid(format!("reference time must be positive, got {t_f}")));
    }
    target_angles
        .iter()
        .zip(g)
        .enumerate()
        .map(|(slot, (&phi, &gj))| {
            if !phi.is_finite() {
                return Err(invalid(format!("target angle on slot {slot} is not finite")));
            }
            if gj == 0.0 {
                if phi == 0.0 {
                    Ok(0.0)
                } else {
                    Err(Error::Unschedulable { slot, angle: phi })
                }
            } else {
                Ok(phi / (gj * t_f))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(RatioVector)
}

/// Takes absolute values and sorts them in descending order. Ties keep the
/// original slot order.
pub fn normalize(b: &RatioVector) -> (RatioVector, NormalizationRecord) {
    let slot_sign_flips: Vec<bool> = b.0.iter().map(|&x| x < 0.0).collect();
    let abs: Vec<f64> = b.0.iter().map(|x| x.abs()).collect();
    let mut slot_order: Vec<usize> = (0..abs.len()).collect();
    slot_order.sort_by(|&i, &j| abs[j].total_cmp(&abs[i]));
    let sorted = slot_order.iter().map(|&s| abs[s]).collect();
    (
        RatioVector(sorted),
        NormalizationRecord {
            slot_order,
            slot_sign_flips,
        },
    )
}

/// Closed-form block durations for normalized ratios:
/// `t_k = t_f (b_k - b_{k+1}) / 2` for all but the last block, and
/// `t_last = t_f (b_first + b_last) / 2`.
pub fn solve_times(b_sorted: &RatioVector, t_f: f64) -> Result<Vec<f64>> {
    let b = b_sorted.as_slice();
    if b.is_empty() {
        return Err(invalid("no slots to schedule"));
    }
    if let Some(j) = b.iter().position(|&x| x < 0.0 || !x.is_finite()) {
        return Err(invalid(format!("ratio {j} is negative or not finite")));
    }
    if let Some(j) = b.windows(2).position(|w| w[0] < w[1]) {
        return Err(invalid(format!("ratios not sorted at position {j}")));
    }
    let n = b.len();
    let mut t: Vec<f64> = b.windows(2).map(|w| t_f * (w[0] - w[1]) / 2.0).collect();
    t.push(t_f * (b[0] + b[n - 1]) / 2.0);
    Ok(t)
}

/// Slot signs `(-1)^(f(j) + f(j+1))` produced by an X-gate mask.
pub fn slot_signs(x_mask: &[bool]) -> Vec<i8> {
    x_mask
        .windows(2)
        .map(|w| if w[0] == w[1] { 1 } else { -1 })
        .collect()
}

/// Colours the chain so that slot `j` ends up with sign `signs[j]`: qubit 0
/// is left alone and each next qubit differs from its left neighbour exactly
/// when the slot between them must flip.
pub fn mask_from_signs(signs: &[i8]) -> Vec<bool> {
    let mut mask = Vec::with_capacity(signs.len() + 1);
    mask.push(false);
    for &s in signs {
        let prev = *mask.last().unwrap();
        mask.push(prev ^ (s < 0));
    }
    mask
}

/// Signs per original slot for one block, given that block's signs in sorted
/// order (a column of the sign matrix).
pub fn effective_signs(sorted_signs: &[i8], rec: &NormalizationRecord) -> Vec<i8> {
    rec.positions()
        .into_iter()
        .zip(&rec.slot_sign_flips)
        .map(|(p, &flip)| if flip { -sorted_signs[p] } else { sorted_signs[p] })
        .collect()
}

/// X mask for a block whose sorted-order signs are `sorted_signs`.
pub fn mask_from_row(sorted_signs: &[i8], rec: &NormalizationRecord) -> Vec<bool> {
    mask_from_signs(&effective_signs(sorted_signs, rec))
}

/// One evolution of the resource chain, conjugated by X on the masked qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduledBlock {
    pub duration: f64,
    pub x_mask: Vec<bool>,
}

/// Analog blocks realizing one nearest-neighbour target.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSchedule {
    pub blocks: Vec<ScheduledBlock>,
    pub t_f: f64,
}

impl BlockSchedule {
    /// Total analog time `Σ |t_n|`.
    pub fn total_time(&self) -> f64 {
        compensated_sum(self.blocks.iter().map(|b| b.duration.abs()))
    }

    /// Phase accumulated on every slot: `Σ_n t_n sign_n(j) g_j`.
    pub fn slot_phases(&self, resource: &NnChain) -> Vec<f64> {
        let g = resource.couplings();
        let signs: Vec<Vec<i8>> = self.blocks.iter().map(|b| slot_signs(&b.x_mask)).collect();
        (0..g.len())
            .map(|j| {
                g[j] * compensated_sum(
                    self.blocks
                        .iter()
                        .zip(&signs)
                        .map(|(b, s)| b.duration * f64::from(s[j])),
                )
            })
            .collect()
    }
}

pub fn schedule(target_angles: &[f64], resource: &NnChain, t_f: f64) -> Result<BlockSchedule> {
    schedule_with_epsilon(target_angles, resource, t_f, DEFAULT_EPSILON)
}

/// Full pipeline: ratios, normalization, closed-form durations and masks.
/// Blocks with duration `<= epsilon * t_f` are omitted.
pub fn schedule_with_epsilon(
    target_angles: &[f64],
    resource: &NnChain,
    t_f: f64,
    epsilon: f64,
) -> Result<BlockSchedule> {
    if epsilon.is_nan() || epsilon < 0.0 {
        return Err(invalid(format!("epsilon must be non-negative, got {epsilon}")));
    }
    let b = ratios(target_angles, resource, t_f)?;
    let (sorted, rec) = normalize(&b);
    let times = solve_times(&sorted, t_f)?;
    let m = m_matrix(sorted.len())?;
    let blocks = times
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t > epsilon * t_f)
        .map(|(n, &t)| ScheduledBlock {
            duration: t,
            x_mask: mask_from_row(&m.column(n), &rec),
        })
        .collect();
    Ok(BlockSchedule { blocks, t_f })
}

/// Lower bound on total analog time, attained by [`schedule`].
pub fn min_sim_time(b: &RatioVector, t_f: f64) -> f64 {
    b.0.iter().fold(0.0_f64, |m, x| m.max(x.abs())) * t_f
}

/// Neumaier-compensated summation.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut c = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}
