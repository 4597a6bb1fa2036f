// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Digital-analog circuits.
//!
//! A circuit goes through three stages:
//!
//! 1. **high level**: iSWAP layers around ideal nearest-neighbour ZZ
//!    evolutions ([`Instruction::Analog`]), one per Hamiltonian path;
//! 2. **lowered**: every iSWAP layer replaced by two ZZ requests dressed
//!    with Hadamard and `R = HSH` rotations;
//! 3. **scheduled**: every ZZ request replaced by X-conjugated evolutions
//!    of the fixed resource chain ([`Instruction::Resource`]).
//!
//! Each stage has the same unitary up to a global phase.

use std::f64::consts::FRAC_PI_4;

use crate::error::{invalid, Error, Result};
use crate::graph::{path_cover, CouplingGraph, NnChain, PathCover};
use crate::perm::{
    group_g1, group_g2, synthesize_generic, synthesize_walecki, Layer, TranspositionSequence,
};
use crate::scheduler::{compensated_sum, schedule_with_epsilon};

/// Gates the compiler emits. Two-qubit gates always act on `(q, q + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    X(usize),
    H(usize),
    /// `R = H S H`, with `S` the phase gate.
    R(usize),
    RDag(usize),
    /// `exp(i θ Z / 2)`.
    Rz(usize, f64),
    /// `exp(iπ/4 (XX + YY))` on qubits `(q, q + 1)`.
    ISwap(usize),
    ISwapDagger(usize),
}

impl Gate {
    /// Qubits touched by the gate.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::X(q) | Gate::H(q) | Gate::R(q) | Gate::RDag(q) | Gate::Rz(q, _) => vec![q],
            Gate::ISwap(q) | Gate::ISwapDagger(q) => vec![q, q + 1],
        }
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::ISwap(_) | Gate::ISwapDagger(_))
    }

    pub fn dagger(&self) -> Gate {
        match *self {
            Gate::X(q) => Gate::X(q),
            Gate::H(q) => Gate::H(q),
            Gate::R(q) => Gate::RDag(q),
            Gate::RDag(q) => Gate::R(q),
            Gate::Rz(q, t) => Gate::Rz(q, -t),
            Gate::ISwap(q) => Gate::ISwapDagger(q),
            Gate::ISwapDagger(q) => Gate::ISwap(q),
        }
    }
}

/// Parameters of the family of two-qubit gates that exchange `Z ⊗ I` and `I ⊗ Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralSwapParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// `Rz¹[post] · exp(iπ/4 (XX + YY + zz_weight ZZ)) · Rz¹[pre]`, where the
/// rotations act on the first qubit and `pre` is applied first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapDecomposition {
    pub pre_rz: f64,
    pub zz_weight: f64,
    pub post_rz: f64,
}

impl SwapDecomposition {
    /// No flanking rotations and no ZZ component: a plain iSWAP.
    pub fn is_bare_iswap(&self) -> bool {
        self.pre_rz == 0.0 && self.post_rz == 0.0 && self.zz_weight == 0.0
    }

    /// Gate list on `(lower, lower + 1)` when the entangler has no ZZ part.
    pub fn gates(&self, lower: usize) -> Option<Vec<Gate>> {
        if self.zz_weight != 0.0 {
            return None;
        }
        let mut out = Vec::new();
        if self.pre_rz != 0.0 {
            out.push(Gate::Rz(lower, self.pre_rz));
        }
        out.push(Gate::ISwap(lower));
        if self.post_rz != 0.0 {
            out.push(Gate::Rz(lower, self.post_rz));
        }
        Some(out)
    }
}

pub fn general_swap(p: GeneralSwapParams) -> SwapDecomposition {
    use std::f64::consts::PI;
    let half_diff = (p.gamma - p.alpha) / 2.0;
    SwapDecomposition {
        pre_rz: PI * (half_diff - 0.5 - p.beta),
        zz_weight: p.gamma + p.alpha,
        post_rz: PI * (half_diff + 0.5 + p.beta),
    }
}

/// Requested ZZ phases per chain slot: `exp(i Σ_j φ_j Z_j Z_{j+1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalogRequest {
    pub slot_angles: Vec<f64>,
}

/// Resource chain evolution for `duration`, conjugated by X on every qubit
/// whose mask entry is set.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceBlock {
    pub duration: f64,
    pub x_mask: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    /// Gates on pairwise disjoint qubits.
    Digital(Vec<Gate>),
    Analog(AnalogRequest),
    Resource(ResourceBlock),
}

/// Ordered instruction list; index 0 is applied first.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    instructions: Vec<Instruction>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            instructions: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn into_instructions(self) -> Vec<Instruction> {
        self.instructions
    }

    /// Appends a digital layer. Empty layers are skipped.
    pub fn push_digital(&mut self, layer: Vec<Gate>) -> Result<()> {
        check_digital(&layer, self.num_qubits)?;
        if !layer.is_empty() {
            self.instructions.push(Instruction::Digital(layer));
        }
        Ok(())
    }

    pub fn push_analog(&mut self, slot_angles: Vec<f64>) -> Result<()> {
        if slot_angles.len() + 1 != self.num_qubits {
            return Err(invalid(format!(
                "{} slot angles for {} qubits",
                slot_angles.len(),
                self.num_qubits
            )));
        }
        if slot_angles.iter().any(|a| !a.is_finite()) {
            return Err(invalid("analog request angle is not finite"));
        }
        self.instructions
            .push(Instruction::Analog(AnalogRequest { slot_angles }));
        Ok(())
    }

    pub fn push_resource(&mut self, duration: f64, x_mask: Vec<bool>) -> Result<()> {
        if duration < 0.0 || !duration.is_finite() {
            return Err(invalid(format!("block duration {duration} is negative")));
        }
        if x_mask.len() != self.num_qubits {
            return Err(invalid(format!(
                "mask of length {} for {} qubits",
                x_mask.len(),
                self.num_qubits
            )));
        }
        self.instructions
            .push(Instruction::Resource(ResourceBlock { duration, x_mask }));
        Ok(())
    }

    /// Re-checks every instruction invariant.
    pub fn validate(&self) -> Result<()> {
        let mut copy = Circuit::new(self.num_qubits);
        for ins in &self.instructions {
            match ins {
                Instruction::Digital(l) => {
                    if l.is_empty() {
                        return Err(invalid("empty digital layer"));
                    }
                    copy.push_digital(l.clone())?
                }
                Instruction::Analog(a) => copy.push_analog(a.slot_angles.clone())?,
                Instruction::Resource(b) => copy.push_resource(b.duration, b.x_mask.clone())?,
            }
        }
        Ok(())
    }

    /// Pushes a layer of two-qubit gates unless it exactly undoes the previous one.
    fn push_or_cancel(&mut self, layer: Vec<Gate>) -> Result<()> {
        if let Some(Instruction::Digital(prev)) = self.instructions.last() {
            let mut undo: Vec<_> = prev.iter().map(Gate::dagger).map(gate_key).collect();
            let mut this: Vec<_> = layer.iter().copied().map(gate_key).collect();
            undo.sort_unstable();
            this.sort_unstable();
            if !layer.is_empty() && layer.iter().all(Gate::is_two_qubit) && undo == this {
                self.instructions.pop();
                return Ok(());
            }
        }
        self.push_digital(layer)
    }
}

fn gate_key(g: Gate) -> (usize, u8) {
    match g {
        Gate::ISwap(q) => (q, 0),
        Gate::ISwapDagger(q) => (q, 1),
        other => (other.qubits()[0], 2),
    }
}

fn check_digital(layer: &[Gate], num_qubits: usize) -> Result<()> {
    let mut used = vec![false; num_qubits];
    for g in layer {
        if let Gate::Rz(_, t) = g {
            if !t.is_finite() {
                return Err(invalid("Rz angle is not finite"));
            }
        }
        for q in g.qubits() {
            if q >= num_qubits {
                return Err(invalid(format!("{g:?} out of range for {num_qubits} qubits")));
            }
            if used[q] {
                return Err(invalid(format!("qubit {q} used twice in one layer")));
            }
            used[q] = true;
        }
    }
    Ok(())
}

fn iswaps(layer: &Layer) -> Vec<Gate> {
    layer.iter().map(|t| Gate::ISwap(t.lower)).collect()
}

fn iswap_daggers(layer: &Layer) -> Vec<Gate> {
    layer.iter().map(|t| Gate::ISwapDagger(t.lower)).collect()
}

/// Gate layers, in time order, that turn the chain Hamiltonian into the path
/// built by `seq` and back: `(before, after)` around the analog block.
///
/// With `V = U†(s_1) ... U†(s_m)`, where `U(s)` applies iSWAPs on layer `s`,
/// `before` implements `V†` and `after` implements `V`, so
/// `V H_NN V†` couples `P(j)` with `P(j + 1)` on slot `j`.
pub fn conjugation_layers(seq: &TranspositionSequence) -> (Vec<Vec<Gate>>, Vec<Vec<Gate>>) {
    let before = seq.layers().iter().map(iswaps).collect();
    let after = seq.layers().iter().rev().map(iswap_daggers).collect();
    (before, after)
}

/// iSWAP layers placed between consecutive path evolutions, in time order.
///
/// * `k = 0`: prepares the first path.
/// * `1 <= k < L/2`: moves from path `k` to path `k + 1` with two layers, one
///   on pairs starting at even positions and one on pairs starting at odd
///   positions. Pairs below position `2k` get iSWAP, the rest iSWAP†.
/// * `k = L/2`: undoes the last path.
pub fn f_gates(k: usize, num_qubits: usize) -> Result<Vec<Vec<Gate>>> {
    if num_qubits < 2 || !num_qubits.is_multiple_of(2) {
        return Err(invalid(format!(
            "F layers need an even qubit count >= 2, got {num_qubits}"
        )));
    }
    let half = num_qubits / 2;
    if k > half {
        return Err(invalid(format!("F index {k} outside 0..={half}")));
    }
    let layers = if k == 0 {
        group_g2(1, num_qubits)
            .layers()
            .iter()
            .rev()
            .map(iswaps)
            .collect()
    } else if k == half {
        group_g1(half).layers().iter().map(iswap_daggers).collect()
    } else {
        let gate = |i: usize| {
            if i < 2 * k {
                Gate::ISwap(i)
            } else {
                Gate::ISwapDagger(i)
            }
        };
        vec![
            (0..num_qubits - 1).step_by(2).map(gate).collect(),
            (1..num_qubits - 1).step_by(2).map(gate).collect(),
        ]
    };
    Ok(layers)
}

/// Slot angles for every path of `cover`: `t_f * g'` of the edge each slot
/// carries, zero on disabled slots.
pub fn path_angles(cover: &PathCover, target: &CouplingGraph, t_f: f64) -> Vec<Vec<f64>> {
    cover
        .paths
        .iter()
        .enumerate()
        .map(|(k, p)| {
            p.slot_edges()
                .into_iter()
                .enumerate()
                .map(|(slot, (u, v))| {
                    if cover.is_enabled(k, slot) {
                        t_f * target.get(u, v)
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

fn check_target(target: &CouplingGraph, t_f: f64) -> Result<()> {
    if !t_f.is_finite() {
        return Err(invalid("evolution time is not finite"));
    }
    if target.edges().any(|(_, g)| !g.is_finite()) {
        return Err(invalid("target coupling is not finite"));
    }
    Ok(())
}

/// Homogeneous all-to-all evolution `exp(i t_f Σ_{i<j} Z_i Z_j)` for even `L`.
pub fn ata_circuit(num_qubits: usize, t_f: f64) -> Result<Circuit> {
    if !num_qubits.is_multiple_of(2) {
        return Err(invalid(format!(
            "{num_qubits} qubits is odd; use ata_circuit_general"
        )));
    }
    ata_circuit_general(&CouplingGraph::complete(num_qubits, 1.0)?, t_f)
}

/// `exp(i t_f Σ_{i<j} g'_ij Z_i Z_j)` for any target graph.
///
/// Even `L` uses the merged F layers between consecutive paths. Odd `L`
/// conjugates each path separately with odd-even sort networks and drops
/// adjacent layers that undo each other.
pub fn ata_circuit_general(target: &CouplingGraph, t_f: f64) -> Result<Circuit> {
    check_target(target, t_f)?;
    let num_qubits = target.num_qubits();
    let cover = path_cover(num_qubits)?;
    let angles = path_angles(&cover, target, t_f);
    let mut circuit = Circuit::new(num_qubits);
    if num_qubits.is_multiple_of(2) {
        for (k, a) in angles.into_iter().enumerate() {
            for layer in f_gates(k, num_qubits)? {
                circuit.push_digital(layer)?;
            }
            circuit.push_analog(a)?;
        }
        for layer in f_gates(num_qubits / 2, num_qubits)? {
            circuit.push_digital(layer)?;
        }
    } else {
        for (p, a) in cover.paths.iter().zip(angles) {
            let (before, after) = conjugation_layers(&synthesize_generic(p));
            for layer in before {
                circuit.push_or_cancel(layer)?;
            }
            circuit.push_analog(a)?;
            for layer in after {
                circuit.push_digital(layer)?;
            }
        }
    }
    Ok(circuit)
}

/// Every path conjugated by its own closed-form sequence, with no merging
/// between paths. Even `L` only; used to check the merged F layers.
pub fn ata_circuit_unsimplified(target: &CouplingGraph, t_f: f64) -> Result<Circuit> {
    check_target(target, t_f)?;
    let num_qubits = target.num_qubits();
    if !num_qubits.is_multiple_of(2) {
        return Err(invalid("unsimplified construction needs an even qubit count"));
    }
    let cover = path_cover(num_qubits)?;
    let angles = path_angles(&cover, target, t_f);
    let mut circuit = Circuit::new(num_qubits);
    for (k, a) in angles.into_iter().enumerate() {
        let (before, after) = conjugation_layers(&synthesize_walecki(k + 1, num_qubits)?);
        for layer in before {
            circuit.push_digital(layer)?;
        }
        circuit.push_analog(a)?;
        for layer in after {
            circuit.push_digital(layer)?;
        }
    }
    Ok(circuit)
}

/// Rewrites a layer of iSWAP / iSWAP† gates as ZZ requests and rotations:
/// `H`, ZZ(±π/4), `H`, `R`, ZZ(±π/4), `R†` on the touched qubits.
///
/// The first request realizes the XX half of each gate, the second the YY half.
pub fn lower_iswap_layer(layer: &[Gate], num_qubits: usize) -> Result<Vec<Instruction>> {
    check_digital(layer, num_qubits)?;
    let mut angles = vec![0.0; num_qubits.saturating_sub(1)];
    let mut touched = Vec::new();
    for g in layer {
        match *g {
            Gate::ISwap(q) => angles[q] = FRAC_PI_4,
            Gate::ISwapDagger(q) => angles[q] = -FRAC_PI_4,
            other => {
                return Err(invalid(format!("{other:?} is not an iSWAP-type gate")));
            }
        }
        touched.extend(g.qubits());
    }
    if touched.is_empty() {
        return Ok(Vec::new());
    }
    touched.sort_unstable();
    let on_touched = |f: fn(usize) -> Gate| touched.iter().map(|&q| f(q)).collect::<Vec<_>>();
    let request = AnalogRequest {
        slot_angles: angles,
    };
    Ok(vec![
        Instruction::Digital(on_touched(Gate::H)),
        Instruction::Analog(request.clone()),
        Instruction::Digital(on_touched(Gate::H)),
        Instruction::Digital(on_touched(Gate::R)),
        Instruction::Analog(request),
        Instruction::Digital(on_touched(Gate::RDag)),
    ])
}

/// Replaces every iSWAP-type gate by ZZ requests. Single-qubit gates that
/// share a layer with iSWAPs are emitted first as their own layer.
pub fn lower(circuit: &Circuit) -> Result<Circuit> {
    let mut out = Circuit::new(circuit.num_qubits);
    for ins in &circuit.instructions {
        match ins {
            Instruction::Digital(layer) if layer.iter().any(Gate::is_two_qubit) => {
                let (two, one): (Vec<Gate>, Vec<Gate>) =
                    layer.iter().partition(|g| g.is_two_qubit());
                out.push_digital(one)?;
                out.instructions
                    .extend(lower_iswap_layer(&two, circuit.num_qubits)?);
            }
            other => out.instructions.push(other.clone()),
        }
    }
    Ok(out)
}

/// Replaces every ZZ request with X-conjugated resource evolutions.
pub fn schedule_circuit(
    circuit: &Circuit,
    resource: &NnChain,
    t_f: f64,
    epsilon: f64,
) -> Result<Circuit> {
    if resource.num_qubits() != circuit.num_qubits {
        return Err(Error::DimensionMismatch {
            left: resource.num_qubits(),
            right: circuit.num_qubits,
        });
    }
    let mut out = Circuit::new(circuit.num_qubits);
    for ins in &circuit.instructions {
        match ins {
            Instruction::Analog(req) => {
                let sched = schedule_with_epsilon(&req.slot_angles, resource, t_f, epsilon)?;
                for b in sched.blocks {
                    out.push_resource(b.duration, b.x_mask)?;
                }
            }
            other => out.instructions.push(other.clone()),
        }
    }
    Ok(out)
}

/// Counts describing a circuit or compiled schedule.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ScheduleStats {
    /// Resource-chain evolutions.
    pub analog_block_count: usize,
    /// Inhomogeneous nearest-neighbour requests before scheduling.
    pub analog_request_count: usize,
    /// `Σ` resource block durations.
    pub total_analog_time: f64,
    /// Single-qubit gates, with X gates between consecutive blocks merged.
    pub sqr_count: usize,
    pub iswap_layer_count: usize,
}

/// Counts for a single circuit at whatever stage it is in.
pub fn stats(circuit: &Circuit) -> ScheduleStats {
    let mut s = ScheduleStats::default();
    let mut frame = vec![false; circuit.num_qubits];
    let mut toggles = 0;
    let flush = |frame: &mut Vec<bool>, toggles: &mut usize| {
        *toggles += frame.iter().filter(|&&x| x).count();
        frame.iter_mut().for_each(|x| *x = false);
    };
    let mut durations = Vec::new();
    for ins in &circuit.instructions {
        match ins {
            Instruction::Digital(layer) => {
                flush(&mut frame, &mut toggles);
                if layer.iter().any(Gate::is_two_qubit) {
                    s.iswap_layer_count += 1;
                }
                s.sqr_count += layer.iter().filter(|g| !g.is_two_qubit()).count();
            }
            Instruction::Analog(_) => {
                flush(&mut frame, &mut toggles);
                s.analog_request_count += 1;
            }
            Instruction::Resource(b) => {
                toggles += frame.iter().zip(&b.x_mask).filter(|(a, b)| a != b).count();
                frame.clone_from(&b.x_mask);
                s.analog_block_count += 1;
                durations.push(b.duration);
            }
        }
    }
    flush(&mut frame, &mut toggles);
    s.sqr_count += toggles;
    s.total_analog_time = compensated_sum(durations);
    s
}

/// Number of inhomogeneous blocks quoted in the literature for the even-`L`
/// homogeneous construction when consecutive iSWAP layers are merged: `5L - 12`.
pub fn reference_block_count(num_qubits: usize) -> Option<usize> {
    (num_qubits >= 4 && num_qubits.is_multiple_of(2)).then(|| 5 * num_qubits - 12)
}

/// What to compile: an all-to-all coupling graph evolved for `t_f`, or
/// nearest-neighbour phases given directly.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Ata(CouplingGraph),
    Nn(Vec<f64>),
}

impl Target {
    pub fn num_qubits(&self) -> usize {
        match self {
            Target::Ata(g) => g.num_qubits(),
            Target::Nn(a) => a.len() + 1,
        }
    }
}

/// A fully scheduled circuit plus counts gathered along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Compiled {
    pub circuit: Circuit,
    pub stats: ScheduleStats,
}

/// Builds, lowers and schedules `target` on `resource`.
pub fn compile(
    target: &Target,
    resource: &NnChain,
    t_f: f64,
    epsilon: f64,
) -> Result<Compiled> {
    if target.num_qubits() != resource.num_qubits() {
        return Err(Error::DimensionMismatch {
            left: target.num_qubits(),
            right: resource.num_qubits(),
        });
    }
    let high = match target {
        Target::Ata(g) => ata_circuit_general(g, t_f)?,
        Target::Nn(angles) => {
            let mut c = Circuit::new(resource.num_qubits());
            c.push_analog(angles.clone())?;
            c
        }
    };
    let lowered = lower(&high)?;
    let circuit = schedule_circuit(&lowered, resource, t_f, epsilon)?;
    let high_stats = stats(&high);
    let lowered_stats = stats(&lowered);
    let mut stats = stats(&circuit);
    stats.iswap_layer_count = high_stats.iswap_layer_count;
    stats.analog_request_count = lowered_stats.analog_request_count;
    Ok(Compiled { circuit, stats })
}
