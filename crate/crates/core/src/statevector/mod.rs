//! Dense state-vector simulation: Pauli-sum Hamiltonians, exact evolution by
//! eigendecomposition, local gates, measurement and partial traces.

pub mod gates;
mod operator;
mod pauli;
mod state;

pub use gates::Gate2;
pub use operator::{matrix_of, unitary_of_evolution, DenseOperator, Propagator, MAX_DENSE_QUBITS};
pub use pauli::{Axis, PauliSum, PauliTerm};
pub use state::{StateVector, UNITARY_TOL};

use crate::Result;

/// Free-function form of [`StateVector::apply_local_gate`].
pub fn apply_local_gate(state: &StateVector, qubit: usize, u: &Gate2) -> Result<StateVector> {
    state.apply_local_gate(qubit, u)
}

/// Free-function form of [`StateVector::evolve`].
pub fn evolve(state: &StateVector, h: &PauliSum, duration: f64) -> Result<StateVector> {
    state.evolve(h, duration)
}

/// Free-function form of [`StateVector::measure_z`].
pub fn measure_z(state: &StateVector, qubit: usize, rng_seed: u64) -> Result<(u8, StateVector)> {
    state.measure_z(qubit, rng_seed)
}

/// Free-function form of [`StateVector::reduced_density`].
pub fn reduced_density(state: &StateVector, keep: &[usize]) -> Result<nalgebra::DMatrix<crate::C64>> {
    state.reduced_density(keep)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    use nalgebra::{DMatrix, Matrix2};

    use super::*;
    use crate::{Error, C64};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn xx_plus_yy() -> PauliSum {
        PauliSum::from_terms(
            2,
            [PauliTerm::pair(1.0, 0, 1, Axis::X).unwrap(), PauliTerm::pair(1.0, 0, 1, Axis::Y).unwrap()],
        )
        .unwrap()
    }

    fn kron(a: &DMatrix<C64>, b: &DMatrix<C64>) -> DMatrix<C64> {
        a.kronecker(b)
    }

    fn pauli_dense(axis: Axis) -> DMatrix<C64> {
        let g = gates::pauli(axis);
        DMatrix::from_fn(2, 2, |r, c| g[(r, c)])
    }

    #[test]
    fn local_gate_examples() {
        let zero = StateVector::zero(1).unwrap();
        let one = apply_local_gate(&zero, 0, &gates::pauli(Axis::X)).unwrap();
        assert_eq!(one, StateVector::basis(1, 1).unwrap());

        let psi = StateVector::from_amplitudes(2, vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(psi.apply_local_gate(1, &gates::identity()).unwrap(), psi);

        let plus = zero.apply_local_gate(0, &gates::hadamard()).unwrap();
        assert!(close(plus.amplitudes(), &[c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)], 1e-15));
    }

    #[test]
    fn local_gate_errors() {
        let zero = StateVector::zero(2).unwrap();
        assert_eq!(
            zero.apply_local_gate(2, &gates::hadamard()).unwrap_err(),
            Error::QubitOutOfRange { qubit: 2, n_qubits: 2 }
        );
        let bad = Matrix2::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        match zero.apply_local_gate(0, &bad) {
            Err(Error::NotUnitary { residual }) => assert!(residual >= 1.0),
            other => panic!("expected NotUnitary, got {other:?}"),
        }
    }

    #[test]
    fn gate_on_high_qubit_uses_lsb_ordering() {
        let s = StateVector::zero(3).unwrap().apply_local_gate(2, &gates::pauli(Axis::X)).unwrap();
        assert_eq!(s, StateVector::basis(3, 0b100).unwrap());
    }

    #[test]
    fn matrix_of_examples() {
        let z = PauliSum::from_terms(1, [PauliTerm::new(1.0, [(0, Axis::Z)]).unwrap()]).unwrap();
        let m = matrix_of(&z).unwrap();
        assert_eq!(m.matrix(), &DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0, 0.0), c(-1.0, 0.0)])));

        let zz = PauliSum::from_terms(2, [PauliTerm::pair(1.0, 0, 1, Axis::Z).unwrap()]).unwrap();
        let d: Vec<f64> = (0..4).map(|i| matrix_of(&zz).unwrap().matrix()[(i, i)].re).collect();
        assert_eq!(d, vec![1.0, -1.0, -1.0, 1.0]);

        // hand expansion: only |01⟩⟨10| and |10⟩⟨01| survive, each with weight 2
        let m = matrix_of(&xx_plus_yy()).unwrap();
        for r in 0..4 {
            for col in 0..4 {
                let want = if (r, col) == (1, 2) || (r, col) == (2, 1) { 2.0 } else { 0.0 };
                assert_eq!(m.matrix()[(r, col)], c(want, 0.0), "entry ({r},{col})");
            }
        }
        assert_eq!(m.hermiticity_residual(), 0.0);
    }

    #[test]
    fn matrix_of_matches_kronecker_products() {
        // qubit 0 is the least significant bit, so it is the right factor
        let term = PauliTerm::new(0.7, [(0, Axis::Y), (2, Axis::X)]).unwrap();
        let h = PauliSum::from_terms(3, [term]).unwrap();
        let id = DMatrix::<C64>::identity(2, 2);
        let expect = kron(&kron(&pauli_dense(Axis::X), &id), &pauli_dense(Axis::Y)) * c(0.7, 0.0);
        let got = matrix_of(&h).unwrap();
        assert!(operator::max_abs_diff(got.matrix(), &expect) < 1e-15);
    }

    #[test]
    fn matrix_of_dimension_guard() {
        let h = PauliSum::new(13);
        assert_eq!(matrix_of(&h).unwrap_err(), Error::DimensionGuard { n_qubits: 13, max: 12 });
    }

    #[test]
    fn pauli_term_rejects_repeated_qubit() {
        assert_eq!(PauliTerm::new(1.0, [(1, Axis::X), (1, Axis::Z)]).unwrap_err(), Error::RepeatedQubit(1));
        let mut s = PauliSum::new(2);
        assert!(s.push(PauliTerm::new(1.0, [(2, Axis::X)]).unwrap()).is_err());
    }

    #[test]
    fn evolve_examples() {
        let psi = StateVector::from_amplitudes(2, vec![c(0.5, 0.5), c(0.5, 0.0), c(0.0, 0.5), c(0.0, 0.0)]).unwrap();
        assert_eq!(evolve(&psi, &xx_plus_yy(), 0.0).unwrap(), psi);

        let z = PauliSum::from_terms(1, [PauliTerm::new(1.0, [(0, Axis::Z)]).unwrap()]).unwrap();
        let out = evolve(&StateVector::zero(1).unwrap(), &z, PI / 2.0).unwrap();
        assert!(close(out.amplitudes(), &[c(0.0, -1.0), c(0.0, 0.0)], 1e-14));

        let out = evolve(&StateVector::basis(2, 0b01).unwrap(), &xx_plus_yy(), PI / 4.0).unwrap();
        assert!(close(out.amplitudes(), &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0), c(0.0, 0.0)], 1e-14));

        assert_eq!(evolve(&psi, &xx_plus_yy(), -1.0).unwrap_err(), Error::NegativeDuration(-1.0));
    }

    #[test]
    fn unitary_of_evolution_examples() {
        let u = unitary_of_evolution(&xx_plus_yy(), 0.0).unwrap();
        assert!(u.max_abs_diff(&DenseOperator::identity(4)) < 1e-15);

        let z = PauliSum::from_terms(1, [PauliTerm::new(1.0, [(0, Axis::Z)]).unwrap()]).unwrap();
        let u = unitary_of_evolution(&z, PI).unwrap();
        let minus_i = DenseOperator::new(-DMatrix::<C64>::identity(2, 2)).unwrap();
        assert!(u.max_abs_diff(&minus_i) < 1e-15);

        // 4×4 oracle: (XX+YY)² = 4 on the {01,10} block, so
        // e^{−iπ/4(XX+YY)} = cos(π/2)·1 − i·sin(π/2)·(XX+YY)/2 there
        let u = unitary_of_evolution(&xx_plus_yy(), PI / 4.0).unwrap();
        let mut want = DMatrix::<C64>::zeros(4, 4);
        want[(0, 0)] = c(1.0, 0.0);
        want[(3, 3)] = c(1.0, 0.0);
        want[(1, 2)] = c(0.0, -1.0);
        want[(2, 1)] = c(0.0, -1.0);
        assert!(operator::max_abs_diff(u.matrix(), &want) < 1e-14);
        assert!(u.unitarity_residual() < 1e-14);
    }

    #[test]
    fn complex_hamiltonian_takes_hermitian_path() {
        let h = PauliSum::from_terms(2, [PauliTerm::new(0.8, [(0, Axis::Y)]).unwrap(), PauliTerm::new(0.3, [(0, Axis::X), (1, Axis::Z)]).unwrap()])
            .unwrap();
        let u = unitary_of_evolution(&h, 1.3).unwrap();
        assert!(u.unitarity_residual() < 1e-13);
        // Y rotation check on the single-qubit part
        let y = PauliSum::from_terms(1, [PauliTerm::new(1.0, [(0, Axis::Y)]).unwrap()]).unwrap();
        let u = unitary_of_evolution(&y, 0.4).unwrap();
        let g = gates::rotation(Axis::Y, 0.8);
        let want = DMatrix::from_fn(2, 2, |r, c| g[(r, c)]);
        assert!(operator::max_abs_diff(u.matrix(), &want) < 1e-14);
    }

    #[test]
    fn measurement_examples() {
        let one = StateVector::basis(1, 1).unwrap();
        for seed in 0..20 {
            let (b, post) = measure_z(&one, 0, seed).unwrap();
            assert_eq!(b, 1);
            assert_eq!(post, one);
        }

        let plus = StateVector::zero(1).unwrap().apply_local_gate(0, &gates::hadamard()).unwrap();
        let ones: u32 = (0..10_000u64).map(|s| u32::from(measure_z(&plus, 0, s).unwrap().0)).sum();
        let freq = f64::from(ones) / 10_000.0;
        assert!((freq - 0.5).abs() <= 0.02, "frequency {freq}");

        let (b, post) = measure_z(&plus, 0, 42).unwrap();
        assert_eq!(post, StateVector::basis(1, b as usize).unwrap());
        assert_eq!(measure_z(&plus, 0, 42).unwrap().0, b);
    }

    #[test]
    fn reduced_density_examples() {
        let psi = StateVector::from_amplitudes(2, vec![c(0.6, 0.0), c(0.0, 0.0), c(0.0, 0.8), c(0.0, 0.0)]).unwrap();
        let rho = reduced_density(&psi, &[0, 1]).unwrap();
        let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
        assert!(operator::max_abs_diff(&rho, &(&v * v.adjoint())) < 1e-15);

        let singlet = StateVector::from_sparse(2, &[(0b01, c(1.0, 0.0)), (0b10, c(-1.0, 0.0))]).unwrap();
        let rho = reduced_density(&singlet, &[0]).unwrap();
        assert!(operator::max_abs_diff(&rho, &(DMatrix::identity(2, 2) * c(0.5, 0.0))) < 1e-15);

        assert_eq!(reduced_density(&singlet, &[]).unwrap_err(), Error::EmptySelection);
    }

    #[test]
    fn two_qubit_gate_agrees_with_evolution() {
        let u = unitary_of_evolution(&xx_plus_yy(), 0.37).unwrap();
        let m4 = nalgebra::Matrix4::from_fn(|r, c| u.matrix()[(r, c)]);
        let entries: Vec<(usize, C64)> = (0..8).map(|i| (i, c(i as f64, 1.0))).collect();
        let psi = StateVector::from_sparse(3, &entries).unwrap();
        let h3 = PauliSum::from_terms(
            3,
            [PauliTerm::pair(1.0, 0, 2, Axis::X).unwrap(), PauliTerm::pair(1.0, 0, 2, Axis::Y).unwrap()],
        )
        .unwrap();
        let a = psi.apply_two_qubit(0, 2, &m4).unwrap();
        let b = psi.evolve(&h3, 0.37).unwrap();
        assert!(close(a.amplitudes(), b.amplitudes(), 1e-13));
    }

    #[test]
    fn pauli_exp_matches_evolution() {
        let psi = StateVector::from_sparse(3, &[(0, c(1.0, 0.0)), (5, c(0.0, 1.0)), (6, c(0.5, 0.5))]).unwrap();
        let f = [(0, Axis::Y), (2, Axis::X)];
        let h = PauliSum::from_terms(3, [PauliTerm::new(1.0, f).unwrap()]).unwrap();
        let a = psi.apply_pauli_exp(&f, 0.9).unwrap();
        let b = psi.evolve(&h, 0.9).unwrap();
        assert!(close(a.amplitudes(), b.amplitudes(), 1e-14));
    }
}
