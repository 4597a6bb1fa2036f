// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by the compiler, scheduler and verifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A slot asks for a nonzero ZZ phase but the resource coupling there is zero.
    #[error("unschedulable: slot {slot} (qubits {slot}-{next}) needs angle {angle} but its resource coupling is zero", next = slot + 1)]
    Unschedulable { slot: usize, angle: f64 },

    #[error("resource limit: {qubits} qubits exceeds the verifier cap of {cap}")]
    ResourceLimit { qubits: usize, cap: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
