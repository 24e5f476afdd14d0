//! Fidelity metrics, Trotter sweeps, invariance suites and cost reporting.
//!
//! Process fidelity of a schedule `U` against a logical target `V` on an
//! embedding `E` (columns = physical images of the logical basis) is
//! `|tr(V†M)|/d` with `M = E†UE`; leakage is `1 − tr(M†M)/d`.

mod report;
mod suites;
mod sweep;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::Serialize;

pub use report::{checks_csv, checks_json, costs_csv, sweeps_csv, Check, Comparison};
pub use suites::{cost_comparison, diagonal_suite, exchange_suite, invariance_suites, run_suite, CostRow, Report, Suite, SuiteConfig, Thresholds};
pub use sweep::{fit_slope, trotter_sweep, TrotterSweep, TrotterSweepRow};

use crate::encoding::{codeword, singlet};
use crate::model::{Architecture, ExchangeChain};
use crate::schedule::{accounting, CostReport, Executor, PulseSchedule};
use crate::statevector::{DenseOperator, StateVector};
use crate::{Error, Result, C64};

/// Isometry from a logical space into the physical register, stored as
/// sparse unit columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    n_qubits: usize,
    columns: Vec<Vec<(usize, C64)>>,
}

impl Embedding {
    /// Every physical basis state.
    pub fn full(n_qubits: usize) -> Self {
        Self::product(n_qubits, &(0..n_qubits).collect::<Vec<_>>(), &[(0, C64::new(1.0, 0.0))])
    }

    /// Free qubits in the given order (bit `i` of the logical index is
    /// `free[i]`) over a fixed background on the remaining qubits.
    pub fn product(n_qubits: usize, free: &[usize], background: &[(usize, C64)]) -> Self {
        let columns = (0..1usize << free.len())
            .map(|x| {
                let mask = free.iter().enumerate().fold(0usize, |m, (i, &q)| m | (x >> i & 1) << q);
                background.iter().map(|&(i, w)| (i | mask, w)).collect()
            })
            .collect();
        Self { n_qubits, columns }
    }

    /// The full code space; logical bit `k` is bit `k` of the index.
    pub fn code(arch: &Architecture) -> Result<Self> {
        Self::logical(arch, &(0..arch.n_logical()).collect::<Vec<_>>(), &vec![0; arch.n_logical()])
    }

    /// Code space of the `active` bits with every other bit fixed to the
    /// codeword `fixed[k]`.
    pub fn logical(arch: &Architecture, active: &[usize], fixed: &[u8]) -> Result<Self> {
        let width = arch.n_logical();
        if fixed.len() != width {
            return Err(Error::DimensionMismatch { expected: width, got: fixed.len() });
        }
        if let Some(&k) = active.iter().find(|&&k| k >= width) {
            return Err(Error::LogicalOutOfRange { index: k, width });
        }
        let columns = (0..1usize << active.len())
            .map(|x| {
                let mut bits = fixed.to_vec();
                for (i, &k) in active.iter().enumerate() {
                    bits[k] = (x >> i & 1) as u8;
                }
                codeword(arch, &bits)
            })
            .collect::<Result<_>>()?;
        Ok(Self { n_qubits: arch.n_qubits(), columns })
    }

    /// Four-qubit group around the isolator of `(star, dot)` left free, in the
    /// order star, dot, other star, other dot; the remaining stars free after
    /// them; every other isolator in the singlet.
    pub fn group_pair(chain: &ExchangeChain, star: usize, dot: usize) -> Result<Self> {
        let g = chain.group_of_pair(star, dot)?;
        let mut free = vec![star, dot, g.other_star(star).unwrap_or(star), g.other_dot(dot).unwrap_or(dot)];
        free.extend((0..chain.n_logical()).map(|k| chain.star(k)).filter(|q| !g.stars.contains(q)));
        let mut background = vec![(0usize, C64::new(1.0, 0.0))];
        for k in (0..chain.n_logical()).filter(|&k| k != g.isolator) {
            let [d1, d2] = chain.dots(k);
            background = background
                .iter()
                .flat_map(|&(i, a)| singlet().map(|(s, w)| (i | (s & 1) << d1 | (s >> 1) << d2, a * w)))
                .collect();
        }
        Ok(Self::product(chain.n_qubits(), &free, &background))
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn columns(&self) -> &[Vec<(usize, C64)>] {
        &self.columns
    }

    pub fn states(&self) -> Result<Vec<StateVector>> {
        self.columns.iter().map(|c| StateVector::from_sparse(self.n_qubits, c)).collect()
    }

    fn overlap(col: &[(usize, C64)], amps: &[C64]) -> C64 {
        col.iter().map(|&(i, w)| w.conj() * amps[i]).sum()
    }

    /// `E†UE` for an explicit physical operator.
    pub fn restrict(&self, u: &DenseOperator) -> DMatrix<C64> {
        let images: Vec<Vec<C64>> = self
            .columns
            .iter()
            .map(|c| {
                let mut v = vec![C64::new(0.0, 0.0); u.dim()];
                for &(i, w) in c {
                    v[i] = w;
                }
                u.apply(&v).expect("dimension fixed by construction")
            })
            .collect();
        self.gram(&images)
    }

    fn gram(&self, images: &[Vec<C64>]) -> DMatrix<C64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |r, c| Self::overlap(&self.columns[r], &images[c]))
    }
}

/// `E†UE` by running the schedule on each embedded basis state.
pub fn restricted_unitary(sched: &PulseSchedule, arch: &Architecture, emb: &Embedding) -> Result<DMatrix<C64>> {
    restricted_unitary_with(&Executor::new(arch)?, sched, emb)
}

pub fn restricted_unitary_with(exec: &Executor, sched: &PulseSchedule, emb: &Embedding) -> Result<DMatrix<C64>> {
    if emb.n_qubits() != exec.arch().n_qubits() {
        return Err(Error::DimensionMismatch { expected: exec.arch().n_qubits(), got: emb.n_qubits() });
    }
    let outs = exec.run_batch(sched, &emb.states()?)?;
    let images: Vec<Vec<C64>> = outs.into_iter().map(|s| s.amplitudes().to_vec()).collect();
    Ok(emb.gram(&images))
}

/// `|tr(V†M)|/d`.
pub fn overlap_fidelity(target: &DMatrix<C64>, m: &DMatrix<C64>) -> f64 {
    let d = m.nrows() as f64;
    let tr: C64 = target.iter().zip(m.iter()).map(|(v, x)| v.conj() * x).sum();
    tr.norm() / d
}

/// `1 − tr(M†M)/d`, clamped to `[0, 1]`.
pub fn leakage_of(m: &DMatrix<C64>) -> f64 {
    let d = m.nrows() as f64;
    (1.0 - m.iter().map(|x| x.norm_sqr()).sum::<f64>() / d).clamp(0.0, 1.0)
}

/// `min_φ ‖A − e^{iφ}B‖_F`.
pub fn phase_aligned_distance(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    let ov: C64 = b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum();
    let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { C64::new(1.0, 0.0) };
    a.iter().zip(b.iter()).map(|(x, y)| (x - phase * y).norm_sqr()).sum::<f64>().sqrt()
}

/// Couplings and size of an architecture, for report echoes.
pub fn arch_params(arch: &Architecture) -> BTreeMap<String, f64> {
    let mut p = BTreeMap::new();
    p.insert("n_logical".into(), arch.n_logical() as f64);
    match arch {
        Architecture::Diagonal(c) => {
            p.insert("j0".into(), c.j0());
            p.insert("j1".into(), c.j1());
        }
        Architecture::Exchange(c) => {
            p.insert("jxy".into(), c.jxy());
            p.insert("jz".into(), c.jz());
        }
    }
    p
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FidelityReport {
    pub target_label: String,
    pub fidelity: f64,
    pub leakage: f64,
    pub cost: CostReport,
    pub params: BTreeMap<String, f64>,
}

impl FidelityReport {
    pub fn infidelity(&self) -> f64 {
        1.0 - self.fidelity
    }

    pub fn with_param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.into(), value);
        self
    }
}

pub fn process_fidelity(sched: &PulseSchedule, arch: &Architecture, target: &DMatrix<C64>, emb: &Embedding) -> Result<FidelityReport> {
    process_fidelity_with(&Executor::new(arch)?, sched, target, emb)
}

pub fn process_fidelity_with(exec: &Executor, sched: &PulseSchedule, target: &DMatrix<C64>, emb: &Embedding) -> Result<FidelityReport> {
    if target.nrows() != emb.dim() || target.ncols() != emb.dim() {
        return Err(Error::DimensionMismatch { expected: emb.dim(), got: target.nrows() });
    }
    let m = restricted_unitary_with(exec, sched, emb)?;
    Ok(FidelityReport {
        target_label: sched.label.clone(),
        fidelity: overlap_fidelity(target, &m).min(1.0),
        leakage: leakage_of(&m),
        cost: accounting(sched),
        params: arch_params(exec.arch()),
    })
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `e^{−i(XX+YY)π/4}` on two qubits (first = low bit).
pub fn iswap_target() -> DMatrix<C64> {
    let (o, z, m) = (c(1., 0.), c(0., 0.), c(0., -1.));
    DMatrix::from_row_slice(4, 4, &[o, z, z, z, z, z, m, z, z, m, z, z, z, z, z, o])
}

/// `e^{−iXXπ/4}` on two qubits.
pub fn xx_quarter_target() -> DMatrix<C64> {
    let (a, z, b) = (c(std::f64::consts::FRAC_1_SQRT_2, 0.), c(0., 0.), c(0., -std::f64::consts::FRAC_1_SQRT_2));
    DMatrix::from_row_slice(4, 4, &[a, z, z, b, z, a, b, z, z, b, a, z, b, z, z, a])
}

pub fn cphase_target() -> DMatrix<C64> {
    let mut m = DMatrix::identity(4, 4);
    m[(3, 3)] = c(-1., 0.);
    m
}

/// `I ⊗ small` with `small` acting on the low bits.
pub fn embed_low(small: &DMatrix<C64>, total_dim: usize) -> DMatrix<C64> {
    DMatrix::<C64>::identity(total_dim / small.nrows(), total_dim / small.nrows()).kronecker(small)
}
