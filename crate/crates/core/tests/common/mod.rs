//! Independent dense-matrix oracles: Kronecker-built operators and a
//! scaled Taylor-series exponential. Nothing here calls the library's own
//! linear algebra.
#![allow(dead_code)]

use std::collections::HashMap;
use std::io::Write;

use ifsim::schedule::{Instruction, LocalGate, PulseSchedule};
use ifsim::statevector::{Axis, PauliSum};
use ifsim::C64;
use nalgebra::DMatrix;

pub type Mat = DMatrix<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn pauli(axis: Axis) -> Mat {
    let (o, z, i) = (c(1., 0.), c(0., 0.), c(0., 1.));
    match axis {
        Axis::X => Mat::from_row_slice(2, 2, &[z, o, o, z]),
        Axis::Y => Mat::from_row_slice(2, 2, &[z, -i, i, z]),
        Axis::Z => Mat::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

pub fn hadamard() -> Mat {
    let h = c(std::f64::consts::FRAC_1_SQRT_2, 0.);
    Mat::from_row_slice(2, 2, &[h, h, h, -h])
}

/// `⊗_q ops[q]` with qubit 0 the least significant factor.
pub fn kron_all(ops: &[Mat]) -> Mat {
    ops.iter().fold(Mat::identity(1, 1), |acc, op| op.kronecker(&acc))
}

/// Single-qubit `u` on `qubit` of `n`.
pub fn on_qubit(n: usize, qubit: usize, u: &Mat) -> Mat {
    kron_all(&(0..n).map(|q| if q == qubit { u.clone() } else { Mat::identity(2, 2) }).collect::<Vec<_>>())
}

pub fn pauli_string(n: usize, factors: &[(usize, Axis)]) -> Mat {
    kron_all(
        &(0..n)
            .map(|q| factors.iter().find(|f| f.0 == q).map_or_else(|| Mat::identity(2, 2), |f| pauli(f.1)))
            .collect::<Vec<_>>(),
    )
}

pub fn dense(h: &PauliSum) -> Mat {
    let n = h.n_qubits();
    let mut m = Mat::zeros(1 << n, 1 << n);
    for t in h.terms() {
        m += pauli_string(n, t.factors()) * c(t.coefficient(), 0.);
    }
    m
}

fn norm1(a: &Mat) -> f64 {
    (0..a.ncols()).map(|j| a.column(j).iter().map(|x| x.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// `e^A` by scaling and squaring a truncated Taylor series.
pub fn expm(a: &Mat) -> Mat {
    let norm = norm1(a);
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
    let scaled = a * c(0.5f64.powi(s), 0.);
    let mut term = Mat::identity(a.nrows(), a.ncols());
    let mut sum = term.clone();
    for k in 1..60 {
        term = &term * &scaled * c(1.0 / k as f64, 0.);
        sum += &term;
        if norm1(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// `e^{−iHt}`.
pub fn propagator(h: &Mat, t: f64) -> Mat {
    expm(&(h * c(0., -t)))
}

/// Product of instruction matrices, built from scratch.
pub fn schedule_unitary(sched: &PulseSchedule, h: &Mat, n: usize) -> Mat {
    let mut cache: HashMap<u64, Mat> = HashMap::new();
    let mut u = Mat::identity(1 << n, 1 << n);
    for ins in &sched.instructions {
        let step = match ins {
            Instruction::LocalRotation { qubit, axis, angle } => {
                let th = angle.value() / 2.0;
                let r = Mat::identity(2, 2) * c(th.cos(), 0.) - pauli(*axis) * c(0., th.sin());
                on_qubit(n, *qubit, &r)
            }
            Instruction::LocalUnitary { qubit, gate } => {
                let g = match gate {
                    LocalGate::H => hadamard(),
                    LocalGate::X => pauli(Axis::X),
                    LocalGate::Y => pauli(Axis::Y),
                    LocalGate::Z => pauli(Axis::Z),
                    LocalGate::Matrix(m) => Mat::from_fn(2, 2, |r, col| m[(r, col)]),
                };
                on_qubit(n, *qubit, &g)
            }
            Instruction::Evolve { duration } => {
                let t = duration.value();
                cache.entry(t.to_bits()).or_insert_with(|| propagator(h, t)).clone()
            }
            Instruction::IdealPauliExp { factors, angle } => {
                let th = angle.value();
                Mat::identity(1 << n, 1 << n) * c(th.cos(), 0.) - pauli_string(n, factors) * c(0., th.sin())
            }
            Instruction::MeasureZ { .. } => panic!("oracle handles unitary schedules only"),
        };
        u = step * u;
    }
    u
}

/// Basis index of the diagonal codeword product: bit value 0 sets `b_k`,
/// value 1 sets `a_k`.
pub fn diagonal_index(bits: &[u8]) -> usize {
    bits.iter().enumerate().map(|(k, &b)| if b == 0 { 1 << (2 * k + 1) } else { 1 << (2 * k) }).sum()
}

/// Dense exchange codeword: star bits, every isolator `(|01⟩ − |10⟩)/√2`
/// written as `+` on `i2` set and `−` on `i1` set.
pub fn exchange_codeword(bits: &[u8]) -> Vec<C64> {
    let n = 3 * bits.len();
    let mut v = vec![c(0., 0.); 1 << n];
    for pattern in 0..1usize << bits.len() {
        let mut idx = 0usize;
        let mut amp = 1.0;
        for (k, &b) in bits.iter().enumerate() {
            idx |= (b as usize) << (3 * k);
            if pattern >> k & 1 == 0 {
                idx |= 1 << (3 * k + 2);
            } else {
                idx |= 1 << (3 * k + 1);
                amp = -amp;
            }
        }
        v[idx] = c(amp * 0.5f64.powf(bits.len() as f64 / 2.0), 0.);
    }
    v
}

pub fn mat_vec(m: &Mat, v: &[C64]) -> Vec<C64> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|k| m[(r, k)] * v[k]).sum()).collect()
}

pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn max_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Phase-invariant overlap `|tr(V†M)|/d`.
pub fn overlap_fidelity(v: &Mat, m: &Mat) -> f64 {
    (v.adjoint() * m).trace().norm() / v.nrows() as f64
}

/// Collects pass/fail lines for one criterion and prints its verdict.
pub struct Criterion {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    details: Vec<String>,
}

impl Criterion {
    pub fn new(id: u32, title: &'static str) -> Self {
        Self { id, title, failures: Vec::new(), details: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.failures.push(what.clone());
        }
        self.details.push(format!("    {} {what}", if ok { "ok  " } else { "FAIL" }));
    }

    pub fn at_most(&mut self, what: &str, value: f64, bound: f64) {
        self.check(value <= bound, format!("{what} = {value:e} <= {bound:e}"));
    }

    pub fn at_least(&mut self, what: &str, value: f64, bound: f64) {
        self.check(value >= bound, format!("{what} = {value} >= {bound}"));
    }

    pub fn within(&mut self, what: &str, value: f64, lo: f64, hi: f64) {
        self.check(lo <= value && value <= hi, format!("{what} = {value} in [{lo}, {hi}]"));
    }

    pub fn finish(self) {
        for d in &self.details {
            println!("{d}");
        }
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(std::io::stderr(), "criterion {:>2}: {verdict}  {}", self.id, self.title);
        assert!(self.failures.is_empty(), "criterion {} failed:\n{}", self.id, self.failures.join("\n"));
    }
}
