// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Test oracles built without the library's row-operation kernels:
//! Kronecker products of Pauli matrices and a Taylor-series matrix exponential.

#![allow(dead_code)]

use ising_daqc::UnitaryMatrix;
use num_complex::Complex64 as C;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense {
    pub dim: usize,
    pub a: Vec<C>,
}

impl Dense {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            a: vec![c(0.0, 0.0); dim * dim],
        }
    }

    pub fn eye(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.a[i * dim + i] = c(1.0, 0.0);
        }
        m
    }

    pub fn from_2x2(m: [[C; 2]; 2]) -> Self {
        Self {
            dim: 2,
            a: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    pub fn at(&self, r: usize, col: usize) -> C {
        self.a[r * self.dim + col]
    }

    pub fn mul(&self, o: &Dense) -> Dense {
        let n = self.dim;
        let mut out = Dense::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let x = self.a[r * n + k];
                if x == c(0.0, 0.0) {
                    continue;
                }
                for col in 0..n {
                    out.a[r * n + col] += x * o.a[k * n + col];
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Dense) -> Dense {
        Dense {
            dim: self.dim,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, s: C) -> Dense {
        Dense {
            dim: self.dim,
            a: self.a.iter().map(|x| x * s).collect(),
        }
    }

    pub fn adjoint(&self) -> Dense {
        let n = self.dim;
        let mut out = Dense::zeros(n);
        for r in 0..n {
            for col in 0..n {
                out.a[col * n + r] = self.a[r * n + col].conj();
            }
        }
        out
    }

    /// `self ⊗ o`, with `o` on the less significant index bits.
    pub fn kron(&self, o: &Dense) -> Dense {
        let n = self.dim * o.dim;
        let mut out = Dense::zeros(n);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let x = self.at(r1, c1);
                for r2 in 0..o.dim {
                    for c2 in 0..o.dim {
                        out.a[(r1 * o.dim + r2) * n + c1 * o.dim + c2] = x * o.at(r2, c2);
                    }
                }
            }
        }
        out
    }

    pub fn norm1(&self) -> f64 {
        (0..self.dim)
            .map(|col| (0..self.dim).map(|r| self.at(r, col).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_diff(&self, o: &Dense) -> f64 {
        self.a
            .iter()
            .zip(&o.a)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    pub fn to_unitary(&self) -> UnitaryMatrix {
        let l = self.dim.trailing_zeros() as usize;
        UnitaryMatrix::from_rows(l, self.a.clone()).unwrap()
    }

    pub fn from_unitary(u: &UnitaryMatrix) -> Dense {
        Dense {
            dim: u.dim(),
            a: u.as_slice().to_vec(),
        }
    }
}

pub fn pauli(p: char) -> Dense {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    Dense::from_2x2(match p {
        'I' => [[l, o], [o, l]],
        'X' => [[o, l], [l, o]],
        'Y' => [[o, -i], [i, o]],
        'Z' => [[l, o], [o, -l]],
        _ => panic!("unknown Pauli {p}"),
    })
}

/// Embeds single-qubit operators at the given qubits; qubit 0 is the least significant bit.
pub fn embed(ops: &[(usize, Dense)], num_qubits: usize) -> Dense {
    let mut out = Dense::eye(1);
    for q in (0..num_qubits).rev() {
        let m = ops
            .iter()
            .find(|(k, _)| *k == q)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(|| pauli('I'));
        out = out.kron(&m);
    }
    out
}

/// Pauli string such as `[(0, 'Z'), (3, 'Z')]`.
pub fn pauli_string(ops: &[(usize, char)], num_qubits: usize) -> Dense {
    let ops: Vec<_> = ops.iter().map(|&(q, p)| (q, pauli(p))).collect();
    embed(&ops, num_qubits)
}

/// `Σ w Z_u Z_v`.
pub fn zz_hamiltonian(edges: &[((usize, usize), f64)], num_qubits: usize) -> Dense {
    let dim = 1 << num_qubits;
    edges.iter().fold(Dense::zeros(dim), |acc, &((u, v), w)| {
        acc.add(&pauli_string(&[(u, 'Z'), (v, 'Z')], num_qubits).scale(c(w, 0.0)))
    })
}

/// `exp(A)` by scaling and squaring around a Taylor series.
pub fn expm(a: &Dense) -> Dense {
    let norm = a.norm1();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale(c(0.5f64.powi(squarings as i32), 0.0));
    let mut sum = Dense::eye(a.dim);
    let mut term = Dense::eye(a.dim);
    for k in 1..=30 {
        term = term.mul(&scaled).scale(c(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
    }
    for _ in 0..squarings {
        sum = sum.mul(&sum);
    }
    sum
}

/// `exp(i H)`.
pub fn expi(h: &Dense) -> Dense {
    expm(&h.scale(c(0.0, 1.0)))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut StdRng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}
