// Copyright 2026 The ising-daqc Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact dense-matrix oracle for small circuits.
//!
//! Basis convention: qubit `q` is bit `q` of the basis index (qubit 0 is the
//! least significant bit), and bit value 0 is spin `+1` under `Z`.

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, Instruction, SwapDecomposition, Target};
use crate::error::{Error, Result};
use crate::graph::{CouplingGraph, Edge, NnChain};

pub const DEFAULT_MAX_QUBITS: usize = 10;
pub const DEFAULT_MAX_DIAGONAL_QUBITS: usize = 24;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense `2^L x 2^L` operator, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    num_qubits: usize,
    data: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn identity(num_qubits: usize) -> Self {
        let dim = 1 << num_qubits;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { num_qubits, data }
    }

    pub fn from_diagonal(num_qubits: usize, diag: &[Complex64]) -> Self {
        let dim = 1 << num_qubits;
        assert_eq!(diag.len(), dim);
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            data[i * dim + i] = d;
        }
        Self { num_qubits, data }
    }

    /// Builds from row-major entries; `entries.len()` must be a power-of-four square.
    pub fn from_rows(num_qubits: usize, entries: Vec<Complex64>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        Ok(Self {
            num_qubits,
            data: entries,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let dim = self.dim();
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                data[c * dim + r] = self.data[r * dim + c].conj();
            }
        }
        Self {
            num_qubits: self.num_qubits,
            data,
        }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<Self> {
        if self.num_qubits != rhs.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: rhs.num_qubits,
            });
        }
        let dim = self.dim();
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            let out = &mut data[r * dim..(r + 1) * dim];
            for k in 0..dim {
                let a = self.data[r * dim + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(&rhs.data[k * dim..(k + 1) * dim]) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            num_qubits: self.num_qubits,
            data,
        })
    }

    /// `max |U†U - I|` entrywise.
    pub fn unitarity_error(&self) -> f64 {
        let prod = self.adjoint().mul(self).expect("same size");
        let dim = self.dim();
        let mut worst = 0.0_f64;
        for r in 0..dim {
            for c in 0..dim {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((prod.get(r, c) - target).norm());
            }
        }
        worst
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &UnitaryMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn rows_mut(&mut self, a: usize, b: usize) -> (&mut [Complex64], &mut [Complex64]) {
        debug_assert!(a < b);
        let dim = self.dim();
        let (lo, hi) = self.data.split_at_mut(b * dim);
        (&mut lo[a * dim..(a + 1) * dim], &mut hi[..dim])
    }

    /// Left-multiplies by a single-qubit matrix `[[m00, m01], [m10, m11]]` on qubit `q`.
    fn apply_single(&mut self, q: usize, m: [[Complex64; 2]; 2]) {
        let bit = 1 << q;
        for r in 0..self.dim() {
            if r & bit != 0 {
                continue;
            }
            let (r0, r1) = self.rows_mut(r, r | bit);
            for (x, y) in r0.iter_mut().zip(r1.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = m[0][0] * a + m[0][1] * b;
                *y = m[1][0] * a + m[1][1] * b;
            }
        }
    }

    /// Left-multiplies by iSWAP (`phase = i`) or iSWAP† (`phase = -i`) on `(q, q+1)`.
    fn apply_iswap(&mut self, q: usize, phase: Complex64) {
        let lo = 1 << q;
        let hi = 1 << (q + 1);
        for r in 0..self.dim() {
            // Visit each |..01..>, |..10..> pair once, from the qubit-q-set side.
            if r & lo == 0 || r & hi != 0 {
                continue;
            }
            let partner = (r ^ lo) | hi;
            let (a, b) = if r < partner {
                self.rows_mut(r, partner)
            } else {
                let (b, a) = self.rows_mut(partner, r);
                (a, b)
            };
            for (x, y) in a.iter_mut().zip(b.iter_mut()) {
                let (u, v) = (*x, *y);
                *x = phase * v;
                *y = phase * u;
            }
        }
    }

    /// Left-multiplies by a diagonal operator.
    fn apply_diagonal(&mut self, diag: &[Complex64]) {
        let dim = self.dim();
        for (r, d) in diag.iter().enumerate() {
            for x in &mut self.data[r * dim..(r + 1) * dim] {
                *x *= d;
            }
        }
    }

    /// Left-multiplies by `gate`.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        for q in gate.qubits() {
            if q >= self.num_qubits {
                return Err(Error::InvalidArgument(format!(
                    "{gate:?} out of range for {} qubits",
                    self.num_qubits
                )));
            }
        }
        match *gate {
            Gate::ISwap(q) => self.apply_iswap(q, I),
            Gate::ISwapDagger(q) => self.apply_iswap(q, -I),
            Gate::X(q) => self.apply_single(q, PAULI_X),
            Gate::H(q) => self.apply_single(q, hadamard()),
            Gate::R(q) => self.apply_single(q, r_gate()),
            Gate::RDag(q) => self.apply_single(q, adjoint2(r_gate())),
            Gate::Rz(q, theta) => self.apply_single(q, rz(theta)),
        }
        Ok(())
    }
}

const PAULI_X: [[Complex64; 2]; 2] = [
    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
];

fn hadamard() -> [[Complex64; 2]; 2] {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [[h, h], [h, -h]]
}

/// `H S H = ½ [[1+i, 1-i], [1-i, 1+i]]`.
fn r_gate() -> [[Complex64; 2]; 2] {
    let p = Complex64::new(0.5, 0.5);
    let m = Complex64::new(0.5, -0.5);
    [[p, m], [m, p]]
}

fn adjoint2(m: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    [
        [m[0][0].conj(), m[1][0].conj()],
        [m[0][1].conj(), m[1][1].conj()],
    ]
}

/// `exp(i θ Z / 2)`.
fn rz(theta: f64) -> [[Complex64; 2]; 2] {
    let zero = Complex64::new(0.0, 0.0);
    [
        [Complex64::from_polar(1.0, theta / 2.0), zero],
        [zero, Complex64::from_polar(1.0, -theta / 2.0)],
    ]
}

#[inline]
fn spin(x: usize, q: usize) -> f64 {
    if (x >> q) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Phase-invariant comparison of two operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceReport {
    /// `sqrt(max(0, 1 - |tr(U†V)| / 2^L))`, in `[0, 1]` for unitaries.
    pub distance: f64,
    /// `arg tr(U†V)`: the global phase that best aligns `V` with `U`.
    pub phase: f64,
}

/// For unitaries `1 - |tr(U†V)|/d = ‖V - e^{iφ}U‖²_F / 2d` with `φ = arg tr(U†V)`.
/// The right-hand side sums small squares instead of cancelling two numbers
/// near 1, so it stays accurate down to the rounding level of the entries.
fn report<'a>(
    u: impl Iterator<Item = &'a Complex64> + Clone,
    v: impl Iterator<Item = &'a Complex64> + Clone,
    dim: usize,
) -> DistanceReport {
    let trace: Complex64 = u.clone().zip(v.clone()).map(|(a, b)| a.conj() * b).sum();
    let phase = trace.arg();
    let align = Complex64::from_polar(1.0, phase);
    let sq: f64 = u.zip(v).map(|(a, b)| (b - align * a).norm_sqr()).sum();
    DistanceReport {
        distance: (sq / (2.0 * dim as f64)).sqrt(),
        phase,
    }
}

pub fn phase_distance(u: &UnitaryMatrix, v: &UnitaryMatrix) -> Result<DistanceReport> {
    if u.num_qubits != v.num_qubits {
        return Err(Error::DimensionMismatch {
            left: u.num_qubits,
            right: v.num_qubits,
        });
    }
    Ok(report(u.data.iter(), v.data.iter(), u.dim()))
}

/// [`phase_distance`] for two diagonal operators given by their diagonals.
pub fn diagonal_distance(u: &[Complex64], v: &[Complex64]) -> Result<DistanceReport> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(report(u.iter(), v.iter(), u.len()))
}

/// `Rz¹[post] · exp(iπ/4 (XX + YY + c ZZ)) · Rz¹[pre]` as a 2-qubit matrix.
///
/// On `{|00>, |11>}` the entangler is the phase `e^{iπc/4}`; on
/// `{|01>, |10>}` it is `e^{-iπc/4} · i X`.
pub fn general_swap_unitary(d: &SwapDecomposition) -> UnitaryMatrix {
    let zero = Complex64::new(0.0, 0.0);
    let even = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * d.zz_weight);
    let odd = I * Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4 * d.zz_weight);
    let mut data = vec![zero; 16];
    data[0] = even;
    data[3 * 4 + 3] = even;
    data[4 + 2] = odd;
    data[2 * 4 + 1] = odd;
    let mut u = UnitaryMatrix::identity(2);
    u.apply_single(0, rz(d.pre_rz));
    let ent = UnitaryMatrix::from_rows(2, data).expect("4x4");
    let mut out = ent.mul(&u).expect("same size");
    out.apply_single(0, rz(d.post_rz));
    out
}

/// Builds exact unitaries for circuits and targets, refusing sizes above its caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    /// Cap for dense matrices.
    pub max_qubits: usize,
    /// Cap for diagonal-only evaluation.
    pub max_diagonal_qubits: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
            max_diagonal_qubits: DEFAULT_MAX_DIAGONAL_QUBITS,
        }
    }
}

impl Verifier {
    pub fn with_max_qubits(max_qubits: usize) -> Self {
        Self {
            max_qubits,
            ..Self::default()
        }
    }

    fn check_dense(&self, num_qubits: usize) -> Result<()> {
        if num_qubits > self.max_qubits {
            return Err(Error::ResourceLimit {
                qubits: num_qubits,
                cap: self.max_qubits,
            });
        }
        Ok(())
    }

    fn check_diagonal(&self, num_qubits: usize) -> Result<()> {
        let cap = self.max_diagonal_qubits.max(self.max_qubits);
        if num_qubits > cap {
            return Err(Error::ResourceLimit {
                qubits: num_qubits,
                cap,
            });
        }
        Ok(())
    }

    /// Diagonal of `exp(i Σ φ_uv Z_u Z_v)`.
    pub fn zz_diagonal(&self, edges: &[(Edge, f64)], num_qubits: usize) -> Result<Vec<Complex64>> {
        self.check_diagonal(num_qubits)?;
        for &((u, v), _) in edges {
            if u >= num_qubits || v >= num_qubits || u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}-{v} invalid for {num_qubits} qubits"
                )));
            }
        }
        Ok((0..1usize << num_qubits)
            .map(|x| {
                let phase: f64 = edges
                    .iter()
                    .map(|&((u, v), phi)| phi * spin(x, u) * spin(x, v))
                    .sum();
                Complex64::from_polar(1.0, phase)
            })
            .collect())
    }

    pub fn zz_evolution(&self, edges: &[(Edge, f64)], num_qubits: usize) -> Result<UnitaryMatrix> {
        self.check_dense(num_qubits)?;
        let d = self.zz_diagonal(edges, num_qubits)?;
        Ok(UnitaryMatrix::from_diagonal(num_qubits, &d))
    }

    pub fn gate_unitary(&self, gate: &Gate, num_qubits: usize) -> Result<UnitaryMatrix> {
        self.check_dense(num_qubits)?;
        let mut u = UnitaryMatrix::identity(num_qubits);
        u.apply_gate(gate)?;
        Ok(u)
    }

    /// Diagonal of a ZZ-only instruction, or `None` for a digital layer.
    fn instruction_diagonal(
        &self,
        ins: &Instruction,
        num_qubits: usize,
        resource: Option<&NnChain>,
    ) -> Result<Option<Vec<Complex64>>> {
        match ins {
            Instruction::Digital(_) => Ok(None),
            Instruction::Analog(req) => {
                let edges: Vec<(Edge, f64)> = req
                    .slot_angles
                    .iter()
                    .enumerate()
                    .map(|(j, &phi)| ((j, j + 1), phi))
                    .collect();
                self.zz_diagonal(&edges, num_qubits).map(Some)
            }
            Instruction::Resource(block) => {
                let resource = resource.ok_or_else(|| {
                    Error::InvalidArgument("resource blocks need a resource chain".into())
                })?;
                if resource.num_qubits() != num_qubits {
                    return Err(Error::DimensionMismatch {
                        left: resource.num_qubits(),
                        right: num_qubits,
                    });
                }
                let signs = crate::scheduler::slot_signs(&block.x_mask);
                let edges: Vec<(Edge, f64)> = resource
                    .couplings()
                    .iter()
                    .zip(&signs)
                    .enumerate()
                    .map(|(j, (&g, &s))| ((j, j + 1), block.duration * g * f64::from(s)))
                    .collect();
                self.zz_diagonal(&edges, num_qubits).map(Some)
            }
        }
    }

    /// Ordered product of the instruction unitaries. Analog requests are
    /// ideal ZZ evolutions; resource blocks use `resource`.
    pub fn circuit_unitary(
        &self,
        circuit: &Circuit,
        resource: Option<&NnChain>,
    ) -> Result<UnitaryMatrix> {
        let n = circuit.num_qubits();
        self.check_dense(n)?;
        let mut u = UnitaryMatrix::identity(n);
        for ins in circuit.instructions() {
            match self.instruction_diagonal(ins, n, resource)? {
                Some(d) => u.apply_diagonal(&d),
                None => {
                    if let Instruction::Digital(layer) = ins {
                        for g in layer {
                            u.apply_gate(g)?;
                        }
                    }
                }
            }
        }
        Ok(u)
    }

    /// Diagonal of a circuit made only of ZZ instructions; `None` if it has digital layers.
    pub fn circuit_diagonal(
        &self,
        circuit: &Circuit,
        resource: Option<&NnChain>,
    ) -> Result<Option<Vec<Complex64>>> {
        let n = circuit.num_qubits();
        self.check_diagonal(n)?;
        let mut acc = vec![Complex64::new(1.0, 0.0); 1 << n];
        for ins in circuit.instructions() {
            match self.instruction_diagonal(ins, n, resource)? {
                Some(d) => acc.iter_mut().zip(&d).for_each(|(a, b)| *a *= b),
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }

    /// `exp(i t_f Σ g'_ij Z_i Z_j)`.
    pub fn exact_target(&self, target: &CouplingGraph, t_f: f64) -> Result<UnitaryMatrix> {
        let edges: Vec<(Edge, f64)> = target.edges().map(|(e, g)| (e, g * t_f)).collect();
        self.zz_evolution(&edges, target.num_qubits())
    }

    /// Ideal unitary of a compile target.
    pub fn target_unitary(&self, target: &Target, t_f: f64) -> Result<UnitaryMatrix> {
        match target {
            Target::Ata(g) => self.exact_target(g, t_f),
            Target::Nn(angles) => {
                let edges: Vec<(Edge, f64)> = angles
                    .iter()
                    .enumerate()
                    .map(|(j, &a)| ((j, j + 1), a))
                    .collect();
                self.zz_evolution(&edges, angles.len() + 1)
            }
        }
    }

    /// Distance between a compiled circuit and its target.
    pub fn check_compiled(
        &self,
        circuit: &Circuit,
        resource: &NnChain,
        target: &Target,
        t_f: f64,
    ) -> Result<DistanceReport> {
        let expected = self.target_unitary(target, t_f)?;
        let got = self.circuit_unitary(circuit, Some(resource))?;
        phase_distance(&expected, &got)
    }
}
