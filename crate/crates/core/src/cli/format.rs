// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Problem and schedule files.
//!
//! Both are JSON. Schedules are emitted with a fixed field order and every
//! float written with 17 significant digits, so emit and parse round-trip
//! bit-for-bit.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;
use sha2::{Digest, Sha256};

use crate::circuit::{Circuit, Gate, Instruction, ScheduleStats, Target};
use crate::error::{invalid, Result};
use crate::graph::{CouplingGraph, NnChain};

/// An `f64` that serializes with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct F17(pub f64);

impl fmt::Display for F17 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}", self.0)
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom(format!(
                "cannot write non-finite number {}",
                self.0
            )));
        }
        let raw = RawValue::from_string(self.to_string()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for F17 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(d).map(F17)
    }
}

/// One `{i, j, value}` entry of an all-to-all target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplingEntry {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum TargetSpec {
    /// Coupling graph evolved for `t_f`.
    Ata { couplings: Vec<CouplingEntry> },
    /// Nearest-neighbour ZZ phases in radians, one per slot.
    Nn { angles: Vec<f64> },
}

/// Input file of `compile`, `verify` and `stats`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub num_qubits: usize,
    pub resource_couplings: Vec<f64>,
    pub target: TargetSpec,
    pub t_f: f64,
}

/// A validated [`ProblemSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub target: Target,
    pub resource: NnChain,
    pub t_f: f64,
}

impl Problem {
    pub fn num_qubits(&self) -> usize {
        self.resource.num_qubits()
    }

    /// True for an all-to-all target on an even number of qubits.
    pub fn is_even_ata(&self) -> bool {
        matches!(self.target, Target::Ata(_)) && self.num_qubits().is_multiple_of(2)
    }
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("problem file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem specs always serialize")
    }

    pub fn resolve(&self) -> Result<Problem> {
        let n = self.num_qubits;
        if n < 2 {
            return Err(invalid(format!("num_qubits must be at least 2, got {n}")));
        }
        if self.resource_couplings.len() != n - 1 {
            return Err(invalid(format!(
                "resource_couplings has {} entries, expected {}",
                self.resource_couplings.len(),
                n - 1
            )));
        }
        if !(self.t_f.is_finite() && self.t_f > 0.0) {
            return Err(invalid(format!("t_f must be positive, got {}", self.t_f)));
        }
        let resource = NnChain::new(self.resource_couplings.clone())?;
        let target = match &self.target {
            TargetSpec::Ata { couplings } => {
                let mut g = CouplingGraph::new(n)?;
                let mut seen = BTreeSet::new();
                for c in couplings {
                    if c.i >= c.j || c.j >= n {
                        return Err(invalid(format!(
                            "coupling ({}, {}) needs 0 <= i < j < {n}",
                            c.i, c.j
                        )));
                    }
                    if !seen.insert((c.i, c.j)) {
                        return Err(invalid(format!("duplicate coupling ({}, {})", c.i, c.j)));
                    }
                    if !c.value.is_finite() {
                        return Err(invalid(format!("coupling ({}, {}) is not finite", c.i, c.j)));
                    }
                    g.set(c.i, c.j, c.value)?;
                }
                Target::Ata(g)
            }
            TargetSpec::Nn { angles } => {
                if angles.len() != n - 1 {
                    return Err(invalid(format!(
                        "nn target has {} angles, expected {}",
                        angles.len(),
                        n - 1
                    )));
                }
                if angles.iter().any(|a| !a.is_finite()) {
                    return Err(invalid("nn target angle is not finite"));
                }
                Target::Nn(angles.clone())
            }
        };
        Ok(Problem {
            target,
            resource,
            t_f: self.t_f,
        })
    }
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn input_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SqrKind {
    X,
    H,
    R,
    #[serde(rename = "Rdag")]
    RDag,
    Rz,
}

/// Single-qubit rotation; `angle` is present only for `Rz`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SqrEntry {
    pub q: usize,
    pub gate: SqrKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<F17>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockEntry {
    pub duration: F17,
    pub x_mask: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ScheduleEntry {
    Sqr(Vec<SqrEntry>),
    ResourceBlock(BlockEntry),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StatsEntry {
    pub analog_block_count: usize,
    pub analog_request_count: usize,
    pub total_analog_time: F17,
    pub sqr_count: usize,
    pub iswap_layer_count: usize,
}

impl From<ScheduleStats> for StatsEntry {
    fn from(s: ScheduleStats) -> Self {
        Self {
            analog_block_count: s.analog_block_count,
            analog_request_count: s.analog_request_count,
            total_analog_time: F17(s.total_analog_time),
            sqr_count: s.sqr_count,
            iswap_layer_count: s.iswap_layer_count,
        }
    }
}

impl From<StatsEntry> for ScheduleStats {
    fn from(s: StatsEntry) -> Self {
        Self {
            analog_block_count: s.analog_block_count,
            analog_request_count: s.analog_request_count,
            total_analog_time: s.total_analog_time.0,
            sqr_count: s.sqr_count,
            iswap_layer_count: s.iswap_layer_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub stats: StatsEntry,
    pub tool_version: String,
    pub input_hash: String,
}

/// Output of `compile`: a fully scheduled circuit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleFile {
    pub num_qubits: usize,
    pub instructions: Vec<ScheduleEntry>,
    pub metadata: Metadata,
}

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn sqr_entry(g: &Gate) -> Result<SqrEntry> {
    let (q, gate, angle) = match *g {
        Gate::X(q) => (q, SqrKind::X, None),
        Gate::H(q) => (q, SqrKind::H, None),
        Gate::R(q) => (q, SqrKind::R, None),
        Gate::RDag(q) => (q, SqrKind::RDag, None),
        Gate::Rz(q, t) => (q, SqrKind::Rz, Some(F17(t))),
        Gate::ISwap(_) | Gate::ISwapDagger(_) => {
            return Err(invalid(format!("{g:?} cannot appear in a schedule file")));
        }
    };
    Ok(SqrEntry { q, gate, angle })
}

fn gate_from_entry(e: &SqrEntry) -> Result<Gate> {
    let no_angle = |g: Gate| match e.angle {
        None => Ok(g),
        Some(_) => Err(invalid(format!("{:?} takes no angle", e.gate))),
    };
    match e.gate {
        SqrKind::X => no_angle(Gate::X(e.q)),
        SqrKind::H => no_angle(Gate::H(e.q)),
        SqrKind::R => no_angle(Gate::R(e.q)),
        SqrKind::RDag => no_angle(Gate::RDag(e.q)),
        SqrKind::Rz => e
            .angle
            .map(|a| Gate::Rz(e.q, a.0))
            .ok_or_else(|| invalid("Rz needs an angle")),
    }
}

impl ScheduleFile {
    /// Packs a scheduled circuit. Fails on iSWAP gates or unscheduled requests.
    pub fn from_circuit(circuit: &Circuit, stats: ScheduleStats, input_hash: String) -> Result<Self> {
        let instructions = circuit
            .instructions()
            .iter()
            .map(|ins| match ins {
                Instruction::Digital(layer) => layer
                    .iter()
                    .map(sqr_entry)
                    .collect::<Result<Vec<_>>>()
                    .map(ScheduleEntry::Sqr),
                Instruction::Resource(b) => Ok(ScheduleEntry::ResourceBlock(BlockEntry {
                    duration: F17(b.duration),
                    x_mask: b.x_mask.clone(),
                })),
                Instruction::Analog(_) => {
                    Err(invalid("unscheduled analog request cannot appear in a schedule file"))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            num_qubits: circuit.num_qubits(),
            instructions,
            metadata: Metadata {
                stats: stats.into(),
                tool_version: TOOL_VERSION.to_string(),
                input_hash,
            },
        })
    }

    /// Rebuilds the circuit, re-checking every instruction.
    pub fn to_circuit(&self) -> Result<Circuit> {
        let mut c = Circuit::new(self.num_qubits);
        for entry in &self.instructions {
            match entry {
                ScheduleEntry::Sqr(gates) => {
                    if gates.is_empty() {
                        return Err(invalid("empty sqr layer"));
                    }
                    let layer = gates.iter().map(gate_from_entry).collect::<Result<Vec<_>>>()?;
                    c.push_digital(layer)?;
                }
                ScheduleEntry::ResourceBlock(b) => c.push_resource(b.duration.0, b.x_mask.clone())?,
            }
        }
        Ok(c)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| invalid(format!("schedule file: {e}")))
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)
            .map_err(|e| invalid(format!("schedule file: {e}")))?;
        s.push('\n');
        Ok(s)
    }
}
