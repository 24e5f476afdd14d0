use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::pauli::PauliSum;
use crate::{Error, Result, C64};

/// Largest register that may be materialized densely.
pub const MAX_DENSE_QUBITS: usize = 12;

pub(crate) fn check_dense(n_qubits: usize) -> Result<()> {
    if n_qubits > MAX_DENSE_QUBITS {
        return Err(Error::DimensionGuard { n_qubits, max: MAX_DENSE_QUBITS });
    }
    Ok(())
}

/// Square complex matrix on a power-of-two dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    matrix: DMatrix<C64>,
}

impl DenseOperator {
    pub fn new(matrix: DMatrix<C64>) -> Result<Self> {
        let (r, c) = matrix.shape();
        if r != c {
            return Err(Error::DimensionMismatch { expected: r, got: c });
        }
        if !r.is_power_of_two() {
            return Err(Error::Invalid(format!("operator dimension {r} is not a power of two")));
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: DMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<C64> {
        self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self { matrix: self.matrix.adjoint() }
    }

    /// `self · rhs`
    pub fn compose(&self, rhs: &DenseOperator) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: rhs.dim() });
        }
        Ok(Self { matrix: &self.matrix * &rhs.matrix })
    }

    pub fn apply(&self, amps: &[C64]) -> Result<Vec<C64>> {
        if amps.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: amps.len() });
        }
        let v = DVector::from_column_slice(amps);
        Ok((&self.matrix * v).as_slice().to_vec())
    }

    /// `‖U†U − I‖_max`
    pub fn unitarity_residual(&self) -> f64 {
        max_abs_diff(&(self.matrix.adjoint() * &self.matrix), &DMatrix::identity(self.dim(), self.dim()))
    }

    /// `‖M − M†‖_max`
    pub fn hermiticity_residual(&self) -> f64 {
        max_abs_diff(&self.matrix, &self.matrix.adjoint())
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        max_abs_diff(&self.matrix, &other.matrix)
    }
}

pub(crate) fn max_abs_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Dense matrix of a Pauli sum.
pub fn matrix_of(h: &PauliSum) -> Result<DenseOperator> {
    check_dense(h.n_qubits())?;
    let dim = 1usize << h.n_qubits();
    let mut m = DMatrix::<C64>::zeros(dim, dim);
    for t in h.terms() {
        let c = t.coefficient();
        for j in 0..dim {
            let (k, phase) = t.map_basis(j);
            m[(k, j)] += phase * c;
        }
    }
    Ok(DenseOperator { matrix: m })
}

/// Spectral form of a Hermitian operator, used to evaluate `e^{−iHt}`
/// without any integrator error.
#[derive(Clone, Debug)]
pub enum Propagator {
    /// Diagonal in the computational basis: only the energies are stored.
    Diagonal(Vec<f64>),
    Spectral { energies: Vec<f64>, vectors: DMatrix<C64> },
}

impl Propagator {
    pub fn new(h: &PauliSum) -> Result<Self> {
        check_dense(h.n_qubits())?;
        let dim = 1usize << h.n_qubits();
        if h.is_diagonal() {
            let mut e = vec![0.0; dim];
            for t in h.terms() {
                for (j, ej) in e.iter_mut().enumerate() {
                    *ej += t.coefficient() * t.map_basis(j).1.re;
                }
            }
            return Ok(Propagator::Diagonal(e));
        }
        let m = matrix_of(h)?.into_matrix();
        // Products with an even number of y factors are real; take the
        // cheaper real path when the whole operator is.
        if m.iter().all(|z| z.im == 0.0) {
            let re = m.map(|z| z.re);
            let eig = SymmetricEigen::new(re);
            Ok(Propagator::Spectral {
                energies: eig.eigenvalues.iter().copied().collect(),
                vectors: eig.eigenvectors.map(|x| C64::new(x, 0.0)),
            })
        } else {
            let eig = SymmetricEigen::new(m);
            Ok(Propagator::Spectral {
                energies: eig.eigenvalues.iter().copied().collect(),
                vectors: eig.eigenvectors,
            })
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Propagator::Diagonal(e) => e.len(),
            Propagator::Spectral { energies, .. } => energies.len(),
        }
    }

    pub fn energies(&self) -> &[f64] {
        match self {
            Propagator::Diagonal(e) => e,
            Propagator::Spectral { energies, .. } => energies,
        }
    }

    fn phases(&self, t: f64) -> Vec<C64> {
        self.energies().iter().map(|&e| C64::from_polar(1.0, -e * t)).collect()
    }

    /// `e^{−iHt}` as a dense matrix.
    pub fn unitary(&self, t: f64) -> Result<DenseOperator> {
        if t < 0.0 {
            return Err(Error::NegativeDuration(t));
        }
        let ph = self.phases(t);
        let matrix = match self {
            Propagator::Diagonal(_) => DMatrix::from_diagonal(&DVector::from_vec(ph)),
            Propagator::Spectral { vectors, .. } => {
                let mut scaled = vectors.clone();
                for (mut col, p) in scaled.column_iter_mut().zip(&ph) {
                    col *= *p;
                }
                scaled * vectors.adjoint()
            }
        };
        Ok(DenseOperator { matrix })
    }

    /// `e^{−iHt}|ψ⟩` without forming the unitary.
    pub fn evolve(&self, amps: &[C64], t: f64) -> Result<Vec<C64>> {
        if t < 0.0 {
            return Err(Error::NegativeDuration(t));
        }
        if amps.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: amps.len() });
        }
        let ph = self.phases(t);
        Ok(match self {
            Propagator::Diagonal(_) => amps.iter().zip(&ph).map(|(a, p)| a * p).collect(),
            Propagator::Spectral { vectors, .. } => {
                let psi = DVector::from_column_slice(amps);
                let mut coeffs = vectors.ad_mul(&psi);
                for (c, p) in coeffs.iter_mut().zip(&ph) {
                    *c *= *p;
                }
                (vectors * coeffs).as_slice().to_vec()
            }
        })
    }
}

/// `e^{−iHt}` via exact eigendecomposition.
pub fn unitary_of_evolution(h: &PauliSum, duration: f64) -> Result<DenseOperator> {
    if duration < 0.0 {
        return Err(Error::NegativeDuration(duration));
    }
    Propagator::new(h)?.unitary(duration)
}
