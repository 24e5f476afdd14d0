use nalgebra::{DMatrix, Matrix4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gates::{self, Gate2};
use super::operator::{check_dense, DenseOperator, Propagator};
use super::pauli::{Axis, PauliSum, PauliTerm};
use crate::{Error, Result, C64};

/// Unitarity tolerance for user-supplied gates.
pub const UNITARY_TOL: f64 = 1e-10;

/// Pure state of `n_qubits` qubits. Qubit 0 is the least-significant bit of
/// the basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_dense(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, got: index + 1 });
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// Wraps amplitudes whose norm is 1 within `1e-10`; the stored copy is
    /// renormalized exactly.
    pub fn from_amplitudes(n_qubits: usize, amps: Vec<C64>) -> Result<Self> {
        check_dense(n_qubits)?;
        let dim = 1usize << n_qubits;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: amps.len() });
        }
        let norm = norm_of(&amps);
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Invalid(format!("state norm {norm} differs from 1")));
        }
        Ok(Self { n_qubits, amps: amps.into_iter().map(|a| a / norm).collect() })
    }

    /// Builds from sparse `(index, amplitude)` pairs, normalizing.
    pub fn from_sparse(n_qubits: usize, entries: &[(usize, C64)]) -> Result<Self> {
        check_dense(n_qubits)?;
        let dim = 1usize << n_qubits;
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        for &(i, a) in entries {
            if i >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i + 1 });
            }
            amps[i] += a;
        }
        let norm = norm_of(&amps);
        if norm == 0.0 {
            return Err(Error::Invalid("zero vector".into()));
        }
        Ok(Self { n_qubits, amps: amps.into_iter().map(|a| a / norm).collect() })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        norm_of(&self.amps)
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() });
        }
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum())
    }

    /// `|⟨self|other⟩|²`, insensitive to global phase.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// `self ⊗ high`: the qubits of `high` are appended above those of `self`.
    pub fn tensor(&self, high: &StateVector) -> Result<Self> {
        let n = self.n_qubits + high.n_qubits;
        check_dense(n)?;
        let mut amps = Vec::with_capacity(1 << n);
        for h in &high.amps {
            amps.extend(self.amps.iter().map(|l| l * h));
        }
        Ok(Self { n_qubits: n, amps })
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange { qubit, n_qubits: self.n_qubits });
        }
        Ok(())
    }

    /// `(I ⊗ … ⊗ u ⊗ … ⊗ I)|ψ⟩`. Rejects `u` whose unitarity residual exceeds
    /// [`UNITARY_TOL`].
    pub fn apply_local_gate(&self, qubit: usize, u: &Gate2) -> Result<Self> {
        self.check_qubit(qubit)?;
        let residual = gates::unitarity_residual(u);
        if residual > UNITARY_TOL || residual.is_nan() {
            return Err(Error::NotUnitary { residual });
        }
        let mut out = self.clone();
        out.apply_local_in_place(qubit, u);
        Ok(out)
    }

    pub(crate) fn apply_local_in_place(&mut self, qubit: usize, u: &Gate2) {
        let bit = 1usize << qubit;
        let (u00, u01, u10, u11) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
        for i0 in 0..self.amps.len() {
            if i0 & bit != 0 {
                continue;
            }
            let i1 = i0 | bit;
            let (a0, a1) = (self.amps[i0], self.amps[i1]);
            self.amps[i0] = u00 * a0 + u01 * a1;
            self.amps[i1] = u10 * a0 + u11 * a1;
        }
    }

    /// Applies a 4×4 unitary to `(first, second)`; in the local basis
    /// `first` is the low bit.
    pub fn apply_two_qubit(&self, first: usize, second: usize, u: &Matrix4<C64>) -> Result<Self> {
        self.check_qubit(first)?;
        self.check_qubit(second)?;
        if first == second {
            return Err(Error::RepeatedQubit(first));
        }
        let (b1, b2) = (1usize << first, 1usize << second);
        let mut out = self.clone();
        for base in 0..self.amps.len() {
            if base & (b1 | b2) != 0 {
                continue;
            }
            let idx = [base, base | b1, base | b2, base | b1 | b2];
            let v: [C64; 4] = idx.map(|i| self.amps[i]);
            for (r, &i) in idx.iter().enumerate() {
                out.amps[i] = (0..4).map(|c| u[(r, c)] * v[c]).sum();
            }
        }
        Ok(out)
    }

    /// `e^{−iθP}|ψ⟩` for a Pauli string `P`.
    pub fn apply_pauli_exp(&self, factors: &[(usize, Axis)], theta: f64) -> Result<Self> {
        for &(q, _) in factors {
            self.check_qubit(q)?;
        }
        let term = PauliTerm::new(1.0, factors.iter().copied())?;
        let (s, c) = theta.sin_cos();
        let mut out: Vec<C64> = self.amps.iter().map(|a| a * c).collect();
        term.apply_into(C64::new(0.0, -s), &self.amps, &mut out);
        Ok(Self { n_qubits: self.n_qubits, amps: out })
    }

    pub fn apply_operator(&self, op: &DenseOperator) -> Result<Self> {
        Ok(Self { n_qubits: self.n_qubits, amps: op.apply(&self.amps)? })
    }

    /// `e^{−iHt}|ψ⟩` through an exact eigendecomposition of `H`.
    pub fn evolve(&self, h: &PauliSum, duration: f64) -> Result<Self> {
        if duration < 0.0 {
            return Err(Error::NegativeDuration(duration));
        }
        if h.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch { expected: self.n_qubits, got: h.n_qubits() });
        }
        if duration == 0.0 {
            return Ok(self.clone());
        }
        self.evolve_with(&Propagator::new(h)?, duration)
    }

    pub fn evolve_with(&self, prop: &Propagator, duration: f64) -> Result<Self> {
        Ok(Self { n_qubits: self.n_qubits, amps: prop.evolve(&self.amps, duration)? })
    }

    /// Probability that `qubit` reads 1.
    pub fn probability_one(&self, qubit: usize) -> Result<f64> {
        self.check_qubit(qubit)?;
        let bit = 1usize << qubit;
        Ok(self.amps.iter().enumerate().filter(|(i, _)| i & bit != 0).map(|(_, a)| a.norm_sqr()).sum())
    }

    /// Z-basis measurement with a fresh generator seeded by `seed`.
    pub fn measure_z(&self, qubit: usize, seed: u64) -> Result<(u8, StateVector)> {
        self.measure_z_with(qubit, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Z-basis measurement drawing from `rng`. A branch of probability zero
    /// is never selected.
    pub fn measure_z_with<R: Rng + ?Sized>(&self, qubit: usize, rng: &mut R) -> Result<(u8, StateVector)> {
        let p1 = self.probability_one(qubit)?;
        let u: f64 = rng.random();
        let outcome = u8::from(u < p1);
        Ok((outcome, self.project(qubit, outcome)?))
    }

    /// Post-measurement state for a given outcome.
    pub fn project(&self, qubit: usize, outcome: u8) -> Result<Self> {
        self.check_qubit(qubit)?;
        let bit = 1usize << qubit;
        let want = outcome != 0;
        let mut amps = self.amps.clone();
        for (i, a) in amps.iter_mut().enumerate() {
            if (i & bit != 0) != want {
                *a = C64::new(0.0, 0.0);
            }
        }
        let norm = norm_of(&amps);
        if norm == 0.0 {
            return Err(Error::Invalid(format!("outcome {outcome} on qubit {qubit} has probability zero")));
        }
        Ok(Self { n_qubits: self.n_qubits, amps: amps.into_iter().map(|a| a / norm).collect() })
    }

    /// Reduced density matrix on `keep`; bit `i` of the reduced index is
    /// qubit `keep[i]`.
    pub fn reduced_density(&self, keep: &[usize]) -> Result<DMatrix<C64>> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        for (i, &q) in keep.iter().enumerate() {
            self.check_qubit(q)?;
            if keep[..i].contains(&q) {
                return Err(Error::RepeatedQubit(q));
            }
        }
        let traced: Vec<usize> = (0..self.n_qubits).filter(|q| !keep.contains(q)).collect();
        let kd = 1usize << keep.len();
        let spread = |bits: usize, qubits: &[usize]| -> usize {
            qubits.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &q)| 1usize << q).sum()
        };
        let keep_idx: Vec<usize> = (0..kd).map(|r| spread(r, keep)).collect();
        let mut rho = DMatrix::<C64>::zeros(kd, kd);
        for e in 0..(1usize << traced.len()) {
            let env = spread(e, &traced);
            for (r, &ri) in keep_idx.iter().enumerate() {
                let ar = self.amps[ri | env];
                if ar == C64::new(0.0, 0.0) {
                    continue;
                }
                for (c, &ci) in keep_idx.iter().enumerate() {
                    rho[(r, c)] += ar * self.amps[ci | env].conj();
                }
            }
        }
        Ok(rho)
    }
}

fn norm_of(amps: &[C64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}
