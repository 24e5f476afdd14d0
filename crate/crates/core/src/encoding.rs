//! The two interaction-free codes, encoded registers and readout.
//!
//! Diagonal code: `|0_L⟩ = |↑_a↓_b⟩`, `|1_L⟩ = |↓_a↑_b⟩`. Exchange code: the
//! star carries the bit and its isolator sits in the singlet. `↑` is the
//! computational `0` throughout. Logical basis index `x` has bit `k` of `x`
//! as the value of logical bit `k`.

use std::f64::consts::FRAC_1_SQRT_2;

use rand::distr::{weighted::WeightedIndex, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{Architecture, DiagonalChain, ExchangeChain};
use crate::schedule::{Executor, Instruction, LocalGate, PulseSchedule};
use crate::statevector::{PauliSum, StateVector};
use crate::{Error, Result, C64};

/// `(|01⟩ − |10⟩)/√2` on a pair of qubits, as `(index, amplitude)` over the
/// pair's local index (first qubit = low bit).
pub fn singlet() -> [(usize, C64); 2] {
    [(0b10, C64::new(FRAC_1_SQRT_2, 0.0)), (0b01, C64::new(-FRAC_1_SQRT_2, 0.0))]
}

fn check_bits(bits: &[u8], width: usize) -> Result<()> {
    if bits.len() != width {
        return Err(Error::DimensionMismatch { expected: width, got: bits.len() });
    }
    if let Some(&b) = bits.iter().find(|&&b| b > 1) {
        return Err(Error::Invalid(format!("logical bit values are 0 or 1, got {b}")));
    }
    Ok(())
}

/// Sparse physical amplitudes of the codeword product for `bits`.
pub fn codeword(arch: &Architecture, bits: &[u8]) -> Result<Vec<(usize, C64)>> {
    check_bits(bits, arch.n_logical())?;
    Ok(match arch {
        Architecture::Diagonal(c) => {
            let index = bits.iter().enumerate().fold(0usize, |acc, (k, &bit)| {
                let q = if bit == 0 { c.b(k) } else { c.a(k) };
                acc | 1 << q
            });
            vec![(index, C64::new(1.0, 0.0))]
        }
        Architecture::Exchange(c) => {
            let mut entries = vec![(0usize, C64::new(1.0, 0.0))];
            for (k, &bit) in bits.iter().enumerate() {
                let [d1, d2] = c.dots(k);
                let star = (bit as usize) << c.star(k);
                entries = entries
                    .iter()
                    .flat_map(|&(i, a)| {
                        singlet().map(|(s, w)| {
                            let local = (s & 1) << d1 | (s >> 1) << d2;
                            (i | star | local, a * w)
                        })
                    })
                    .collect();
            }
            entries
        }
    })
}

fn bits_of(x: usize, width: usize) -> Vec<u8> {
    (0..width).map(|k| (x >> k & 1) as u8).collect()
}

/// Codeword products for every logical basis index, in index order.
pub fn code_basis(arch: &Architecture) -> Result<Vec<Vec<(usize, C64)>>> {
    let width = arch.n_logical();
    (0..1usize << width).map(|x| codeword(arch, &bits_of(x, width))).collect()
}

fn project(entries: &[(usize, C64)], state: &StateVector) -> C64 {
    let amps = state.amplitudes();
    entries.iter().map(|&(i, w)| w.conj() * amps[i]).sum()
}

fn check_dim(arch: &Architecture, state: &StateVector) -> Result<()> {
    if state.n_qubits() != arch.n_qubits() {
        return Err(Error::DimensionMismatch { expected: arch.n_qubits(), got: state.n_qubits() });
    }
    Ok(())
}

/// Components `⟨x_L|ψ⟩` of `state` on the code basis.
pub fn logical_amplitudes(state: &StateVector, arch: &Architecture) -> Result<Vec<C64>> {
    check_dim(arch, state)?;
    Ok(code_basis(arch)?.iter().map(|c| project(c, state)).collect())
}

/// `1 − ‖P|ψ⟩‖²` with `P` the projector onto the product of per-bit code
/// spaces.
pub fn leakage(state: &StateVector, arch: &Architecture) -> Result<f64> {
    let inside: f64 = logical_amplitudes(state, arch)?.iter().map(|a| a.norm_sqr()).sum();
    Ok((1.0 - inside).clamp(0.0, 1.0))
}

/// `‖H|ψ⟩‖`.
pub fn annihilation_residual(h: &PauliSum, state: &StateVector) -> Result<f64> {
    if h.n_qubits() != state.n_qubits() {
        return Err(Error::DimensionMismatch { expected: h.n_qubits(), got: state.n_qubits() });
    }
    Ok(h.apply(state.amplitudes())?.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt())
}

/// X on qubit `b` of every bit: maps the all-up state onto the encoded
/// all-zeros register. The flips commute, so they are emitted together.
pub fn init_schedule_diagonal(arch: &DiagonalChain) -> PulseSchedule {
    let mut s = PulseSchedule::new("init");
    for k in 0..arch.n_logical() {
        s.push(Instruction::gate(arch.b(k), LocalGate::X));
    }
    s
}

/// Physical state of an architecture together with its logical width.
#[derive(Clone, Debug, PartialEq)]
pub struct LogicalRegister {
    arch: Architecture,
    state: StateVector,
}

impl LogicalRegister {
    /// Wraps an existing state; its dimension must match the architecture.
    pub fn from_state(arch: &Architecture, state: StateVector) -> Result<Self> {
        check_dim(arch, &state)?;
        Ok(Self { arch: arch.clone(), state })
    }

    /// Encodes a superposition `Σ amps[x]·|x_L⟩` (normalized on entry).
    pub fn from_logical(arch: &Architecture, amps: &[C64]) -> Result<Self> {
        let dim = 1usize << arch.n_logical();
        if amps.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: amps.len() });
        }
        let mut entries = Vec::new();
        for (col, &a) in code_basis(arch)?.iter().zip(amps) {
            entries.extend(col.iter().map(|&(i, w)| (i, w * a)));
        }
        Self::from_state(arch, StateVector::from_sparse(arch.n_qubits(), &entries)?)
    }

    pub fn arch(&self) -> &Architecture {
        &self.arch
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn into_state(self) -> StateVector {
        self.state
    }

    pub fn width(&self) -> usize {
        self.arch.n_logical()
    }

    pub fn logical_amplitudes(&self) -> Result<Vec<C64>> {
        logical_amplitudes(&self.state, &self.arch)
    }

    pub fn leakage(&self) -> Result<f64> {
        leakage(&self.state, &self.arch)
    }

    /// Runs `sched` and returns the new register.
    pub fn apply(&self, sched: &PulseSchedule, rng_seed: u64) -> Result<Self> {
        self.apply_with(&Executor::new(&self.arch)?, sched, rng_seed)
    }

    pub fn apply_with(&self, exec: &Executor, sched: &PulseSchedule, rng_seed: u64) -> Result<Self> {
        if exec.arch() != &self.arch {
            return Err(Error::Invalid("executor built for a different architecture".into()));
        }
        Ok(Self { arch: self.arch.clone(), state: exec.run(sched, &self.state, rng_seed)? })
    }

    /// Qubit whose z measurement reveals logical bit `k`.
    pub fn readout_qubit(&self, k: usize) -> Result<usize> {
        if k >= self.width() {
            return Err(Error::LogicalOutOfRange { index: k, width: self.width() });
        }
        Ok(match &self.arch {
            Architecture::Diagonal(c) => c.a(k),
            Architecture::Exchange(c) => c.star(k),
        })
    }

    /// Born-rule distribution over the joint readout of every logical bit,
    /// indexed by logical outcome (bit `k` of the index = bit `k`).
    pub fn readout_distribution(&self) -> Result<Vec<f64>> {
        let qubits: Vec<usize> = (0..self.width()).map(|k| self.readout_qubit(k)).collect::<Result<_>>()?;
        let mut p = vec![0.0; 1 << qubits.len()];
        for (i, a) in self.state.amplitudes().iter().enumerate() {
            let x = qubits.iter().enumerate().fold(0usize, |x, (k, &q)| x | (i >> q & 1) << k);
            p[x] += a.norm_sqr();
        }
        Ok(p)
    }

    /// Outcome counts of `shots` joint readouts drawn from one ChaCha8
    /// stream seeded with `rng_seed`.
    pub fn sample_counts(&self, shots: usize, rng_seed: u64) -> Result<Vec<usize>> {
        let p = self.readout_distribution()?;
        let dist = WeightedIndex::new(&p).map_err(|e| Error::Invalid(format!("readout distribution: {e}")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let mut counts = vec![0usize; p.len()];
        for x in dist.sample_iter(&mut rng).take(shots) {
            counts[x] += 1;
        }
        Ok(counts)
    }

    /// Measures logical bit `k`; returns the bit and the collapsed register.
    pub fn readout(&self, k: usize, rng_seed: u64) -> Result<(u8, Self)> {
        let q = self.readout_qubit(k)?;
        let (bit, state) = self.state.measure_z(q, rng_seed)?;
        Ok((bit, Self { arch: self.arch.clone(), state }))
    }
}

pub fn encode_diagonal(bits: &[u8], arch: &DiagonalChain) -> Result<LogicalRegister> {
    encode(bits, &arch.clone().into())
}

pub fn encode_exchange(bits: &[u8], arch: &ExchangeChain) -> Result<LogicalRegister> {
    encode(bits, &arch.clone().into())
}

/// Product of codewords for `bits`.
pub fn encode(bits: &[u8], arch: &Architecture) -> Result<LogicalRegister> {
    let entries = codeword(arch, bits)?;
    LogicalRegister::from_state(arch, StateVector::from_sparse(arch.n_qubits(), &entries)?)
}

/// Logical readout of bit `k`.
pub fn logical_readout(reg: &LogicalRegister, k: usize, rng_seed: u64) -> Result<(u8, LogicalRegister)> {
    reg.readout(k, rng_seed)
}
