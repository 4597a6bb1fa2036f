// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Digital-analog compilation of ZZ Ising evolutions.
//!
//! The compiler takes a fixed nearest-neighbour ZZ resource chain plus
//! single-qubit rotations and produces a schedule whose unitary equals
//! `exp(i t_f Σ g'_ij Z_i Z_j)` for an arbitrary all-to-all coupling graph.
//!
//! * [`graph`]: coupling graphs, permutations and Hamiltonian path covers.
//! * [`perm`]: factoring path permutations into parallel adjacent swaps.
//! * [`circuit`]: the circuit representation and the compiler pipeline.
//! * [`scheduler`]: turning one inhomogeneous chain request into
//!   X-conjugated resource blocks.
//! * [`verifier`]: exact dense unitaries for checking small instances.
//! * [`cli`]: file formats and the `ising-daqc` command.

pub mod circuit;
pub mod cli;
pub mod error;
pub mod graph;
pub mod perm;
pub mod scheduler;
pub mod verifier;

pub use circuit::{compile, Circuit, Compiled, Gate, Instruction, ScheduleStats, Target};
pub use error::{Error, Result};
pub use graph::{CouplingGraph, NnChain, PathCover, VertexPermutation};
pub use perm::{Transposition, TranspositionSequence};
pub use scheduler::{schedule, BlockSchedule};
pub use verifier::{phase_distance, DistanceReport, UnitaryMatrix, Verifier};
