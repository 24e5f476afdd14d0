//! Gate compilation for the Ising chain.
//!
//! Every schedule here is exact: the only evolution is under the full chain
//! Hamiltonian for durations that make the relevant phases rational multiples
//! of π, while neighbouring bits sit in the code space and see no coupling.

use crate::model::DiagonalChain;
use crate::schedule::{Instruction, LocalGate, PulseSchedule, Quantity};
use crate::statevector::Axis;
use crate::{Error, Result};

/// A logical gate request for the Ising chain.
#[derive(Clone, Debug, PartialEq)]
pub enum IsingGate {
    Rz { k: usize, angle: Quantity },
    Hadamard { k: usize },
    Cphase { k: usize, l: usize },
    Cnot { control: usize, target: usize },
}

fn check_bit(arch: &DiagonalChain, k: usize) -> Result<()> {
    if k >= arch.n_logical() {
        return Err(Error::LogicalOutOfRange { index: k, width: arch.n_logical() });
    }
    Ok(())
}

fn check_pair(arch: &DiagonalChain, k: usize, l: usize) -> Result<()> {
    check_bit(arch, k)?;
    check_bit(arch, l)?;
    if k.abs_diff(l) != 1 {
        return Err(Error::NotAdjacent(k, l));
    }
    Ok(())
}

pub fn compile(arch: &DiagonalChain, gate: &IsingGate) -> Result<PulseSchedule> {
    match *gate {
        IsingGate::Rz { k, angle } => rz_logical(arch, k, angle),
        IsingGate::Hadamard { k } => hadamard_logical(arch, k),
        IsingGate::Cphase { k, l } => cphase_logical(arch, k, l),
        IsingGate::Cnot { control, target } => cnot_logical(arch, control, target),
    }
}

/// Logical `diag(e^{−iθ/2}, e^{iθ/2})` as one z rotation on qubit `a`.
pub fn rz_logical(arch: &DiagonalChain, k: usize, angle: Quantity) -> Result<PulseSchedule> {
    check_bit(arch, k)?;
    let mut s = PulseSchedule::new(format!("rz_L({k}, {angle})"));
    s.push(Instruction::rotation(arch.a(k), Axis::Z, angle));
    Ok(s)
}

/// Same logical phase applied through qubit `b`, which needs the opposite
/// physical angle.
pub fn rz_logical_on_b(arch: &DiagonalChain, k: usize, angle: Quantity) -> Result<PulseSchedule> {
    check_bit(arch, k)?;
    let mut s = PulseSchedule::new(format!("rz_L({k}, {angle}) via b"));
    s.push(Instruction::rotation(arch.b(k), Axis::Z, angle.negated()));
    Ok(s)
}

/// `e^{−iZZπ/4}·e^{iZ_aπ/4}·e^{iZ_bπ/4}` on the intra-bit edge `(a, b)`,
/// i.e. `e^{iπ/4}·diag(1,1,1,−1)`.
pub fn cphase_physical(arch: &DiagonalChain, a: usize, b: usize) -> Result<PulseSchedule> {
    if a / 2 != b / 2 || a == b || a >= arch.n_qubits() || b >= arch.n_qubits() {
        return Err(Error::Invalid(format!("({a}, {b}) is not an intra-bit edge")));
    }
    let j = arch.coupling(a, b).ok_or_else(|| Error::Invalid(format!("no coupling on ({a}, {b})")))?;
    let mut s = PulseSchedule::new(format!("cphase({a}, {b})"));
    s.push(Instruction::rotation(a, Axis::Z, Quantity::pi(-1, 2)))
        .push(Instruction::rotation(b, Axis::Z, Quantity::pi(-1, 2)))
        .push(Instruction::evolve(Quantity::pi_over(1, 4, j)));
    Ok(s)
}

fn cnot_physical(arch: &DiagonalChain, control: usize, target: usize) -> Result<PulseSchedule> {
    let mut s = PulseSchedule::new(format!("cnot({control}, {target})"));
    s.push(Instruction::gate(target, LocalGate::H));
    s.append(&cphase_physical(arch, control, target)?);
    s.push(Instruction::gate(target, LocalGate::H));
    Ok(s)
}

/// `CNOT(a,b)·H_a·CNOT(a,b)`: 9 locals, 2 evolves, `π/(2·j0)`. Neighbours
/// must be in the code space.
pub fn hadamard_logical(arch: &DiagonalChain, k: usize) -> Result<PulseSchedule> {
    check_bit(arch, k)?;
    let [a, b] = arch.qubits_of(k);
    let cnot = cnot_physical(arch, a, b)?;
    let mut s = PulseSchedule::new(format!("h_L({k})"));
    s.append(&cnot);
    s.push(Instruction::gate(a, LocalGate::H));
    s.append(&cnot);
    Ok(s)
}

/// Logical Hadamards on several pairwise non-adjacent bits sharing their two
/// evolution periods. All targeted bits must have the same intra coupling.
pub fn hadamard_parallel(arch: &DiagonalChain, bits: &[usize]) -> Result<PulseSchedule> {
    let mut sorted = bits.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        return Err(Error::EmptySelection);
    }
    for &k in &sorted {
        check_bit(arch, k)?;
    }
    if let Some(w) = sorted.windows(2).find(|w| w[1] - w[0] < 2) {
        return Err(Error::Invalid(format!("bits {} and {} are adjacent or repeated", w[0], w[1])));
    }
    let j = |k: usize| arch.coupling(arch.a(k), arch.b(k));
    if sorted.iter().any(|&k| j(k) != j(sorted[0])) {
        return Err(Error::Invalid("parallel Hadamards need equal intra couplings".into()));
    }
    let t = Quantity::pi_over(1, 4, j(sorted[0]).unwrap_or(arch.j0()));
    let mut s = PulseSchedule::new(format!("h_L({sorted:?})"));
    let each = |s: &mut PulseSchedule, f: &dyn Fn(usize, usize) -> Vec<Instruction>| {
        for &k in &sorted {
            for ins in f(arch.a(k), arch.b(k)) {
                s.push(ins);
            }
        }
    };
    let pre = |a: usize, b: usize| {
        vec![
            Instruction::gate(b, LocalGate::H),
            Instruction::rotation(a, Axis::Z, Quantity::pi(-1, 2)),
            Instruction::rotation(b, Axis::Z, Quantity::pi(-1, 2)),
        ]
    };
    let mid = |a: usize, b: usize| {
        vec![
            Instruction::gate(b, LocalGate::H),
            Instruction::gate(a, LocalGate::H),
            Instruction::gate(b, LocalGate::H),
            Instruction::rotation(a, Axis::Z, Quantity::pi(-1, 2)),
            Instruction::rotation(b, Axis::Z, Quantity::pi(-1, 2)),
        ]
    };
    each(&mut s, &pre);
    s.push(Instruction::evolve(t));
    each(&mut s, &mid);
    s.push(Instruction::evolve(t));
    each(&mut s, &|_, b| vec![Instruction::gate(b, LocalGate::H)]);
    Ok(s)
}

/// Logical CPHASE between adjacent bits: flip both `b`s, let the cross
/// coupling act for `π/(16·j1)`, add `e^{iπ/8·Z}` on all four qubits, flip
/// back. The four cross couplings must be equal.
pub fn cphase_logical(arch: &DiagonalChain, k: usize, l: usize) -> Result<PulseSchedule> {
    check_pair(arch, k, l)?;
    let qs = [arch.a(k), arch.b(k), arch.a(l), arch.b(l)];
    let j1 = arch.coupling(qs[0], qs[2]);
    for (p, q) in [(qs[0], qs[3]), (qs[1], qs[2]), (qs[1], qs[3])] {
        if arch.coupling(p, q) != j1 {
            return Err(Error::Invalid(format!("cross couplings between bits {k} and {l} differ")));
        }
    }
    let j1 = j1.ok_or_else(|| Error::Invalid(format!("bits {k} and {l} are not coupled")))?;
    let mut s = PulseSchedule::new(format!("cphase_L({k}, {l})"));
    s.push(Instruction::gate(arch.b(k), LocalGate::X)).push(Instruction::gate(arch.b(l), LocalGate::X));
    s.push(Instruction::evolve(Quantity::pi_over(1, 16, j1)));
    for q in qs {
        s.push(Instruction::rotation(q, Axis::Z, Quantity::pi(-1, 4)));
    }
    s.push(Instruction::gate(arch.b(k), LocalGate::X)).push(Instruction::gate(arch.b(l), LocalGate::X));
    Ok(s)
}

/// `H_L(target)·CPHASE_L·H_L(target)`.
pub fn cnot_logical(arch: &DiagonalChain, control: usize, target: usize) -> Result<PulseSchedule> {
    check_pair(arch, control, target)?;
    let h = hadamard_logical(arch, target)?;
    let mut s = PulseSchedule::new(format!("cnot_L({control}, {target})"));
    s.append(&h).append(&cphase_logical(arch, control, target)?).append(&h);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    use nalgebra::DMatrix;
    use num_rational::Rational64;

    use super::*;
    use crate::model::Architecture;
    use crate::schedule::{accounting, schedule_unitary};
    use crate::verify::{phase_aligned_distance, process_fidelity, restricted_unitary, Embedding};
    use crate::C64;

    fn chain(n: usize) -> DiagonalChain {
        DiagonalChain::new(n, 1.3, 0.45).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn hadamard() -> DMatrix<C64> {
        let h = c(FRAC_1_SQRT_2, 0.0);
        DMatrix::from_row_slice(2, 2, &[h, h, h, -h])
    }

    fn cz() -> DMatrix<C64> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1., 0.), c(1., 0.), c(1., 0.), c(-1., 0.)]))
    }

    #[test]
    fn rz_phases() {
        let arch = chain(1);
        let a: Architecture = arch.clone().into();
        let id = DMatrix::identity(2, 2);
        let r = process_fidelity(&rz_logical(&arch, 0, Quantity::ZERO).unwrap(), &a, &id, &Embedding::code(&a).unwrap()).unwrap();
        assert!(r.fidelity >= 1.0 - 1e-12);
        let z = DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]);
        for s in [rz_logical(&arch, 0, Quantity::pi(1, 1)).unwrap(), rz_logical_on_b(&arch, 0, Quantity::pi(1, 1)).unwrap()] {
            let r = process_fidelity(&s, &a, &z, &Embedding::code(&a).unwrap()).unwrap();
            assert!(r.fidelity >= 1.0 - 1e-10 && r.leakage <= 1e-12);
        }
        // generic angle: logical diag(e^{−iθ/2}, e^{iθ/2})
        let theta = 0.77;
        let want = DMatrix::from_row_slice(2, 2, &[C64::from_polar(1.0, -theta / 2.0), c(0., 0.), c(0., 0.), C64::from_polar(1.0, theta / 2.0)]);
        for s in [rz_logical(&arch, 0, Quantity::float(theta)).unwrap(), rz_logical_on_b(&arch, 0, Quantity::float(theta)).unwrap()] {
            let m = restricted_unitary(&s, &a, &Embedding::code(&a).unwrap()).unwrap();
            assert!((&m - &want).norm() < 1e-12);
        }
        let cost = accounting(&rz_logical(&arch, 0, Quantity::pi(1, 3)).unwrap());
        assert_eq!((cost.local_gate_count, cost.evolve_count, cost.total_evolve_time), (1, 0, 0.0));
    }

    #[test]
    fn cphase_physical_matches_phase_oracle() {
        let arch = chain(1);
        let u = schedule_unitary(&cphase_physical(&arch, 0, 1).unwrap(), &arch.clone().into()).unwrap();
        // per basis state: ZZ evolution phase times the two e^{iπ/4·Z} factors
        for idx in 0..4usize {
            let z = |q: usize| if idx >> q & 1 == 1 { -1.0 } else { 1.0 };
            let phase = -PI / 4.0 * z(0) * z(1) + PI / 4.0 * z(0) + PI / 4.0 * z(1);
            assert!((u.matrix()[(idx, idx)] - C64::from_polar(1.0, phase)).norm() < 1e-12);
        }
        let want = cz() * C64::from_polar(1.0, PI / 4.0);
        assert!((u.matrix() - want).norm() < 1e-12);
        let cost = accounting(&cphase_physical(&arch, 0, 1).unwrap());
        assert_eq!((cost.local_gate_count, cost.evolve_count), (2, 1));
        assert_eq!(cost.time_over(arch.j0()), Some(Rational64::new(1, 4)));
        assert!(cphase_physical(&chain(2), 1, 2).is_err());
    }

    #[test]
    fn hadamard_exact_and_neighbour_independent() {
        let arch = chain(3);
        let a: Architecture = arch.clone().into();
        for k in 0..3 {
            let s = hadamard_logical(&arch, k).unwrap();
            let cost = accounting(&s);
            assert_eq!((cost.local_gate_count, cost.evolve_count, s.len()), (9, 2, 11));
            assert_eq!(cost.time_over(arch.j0()), Some(Rational64::new(1, 2)));
            let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
            let mut first: Option<DMatrix<C64>> = None;
            for config in 0..4usize {
                let mut fixed = vec![0u8; 3];
                for (i, &o) in others.iter().enumerate() {
                    fixed[o] = (config >> i & 1) as u8;
                }
                let emb = Embedding::logical(&a, &[k], &fixed).unwrap();
                let r = process_fidelity(&s, &a, &hadamard(), &emb).unwrap();
                assert!(r.fidelity >= 1.0 - 1e-10 && r.leakage <= 1e-10, "k={k} config={config}");
                let m = restricted_unitary(&s, &a, &emb).unwrap();
                match &first {
                    None => first = Some(m),
                    Some(f) => assert!(phase_aligned_distance(f, &m) < 1e-10),
                }
            }
            let twice = s.clone().then(&s);
            let id = DMatrix::identity(2, 2);
            assert!(process_fidelity(&twice, &a, &id, &Embedding::logical(&a, &[k], &[0; 3]).unwrap()).unwrap().fidelity >= 1.0 - 1e-10);
        }
    }

    #[test]
    fn half_parallel_hadamards_commute() {
        let arch = chain(3);
        let a: Architecture = arch.clone().into();
        let h0 = hadamard_logical(&arch, 0).unwrap();
        let h2 = hadamard_logical(&arch, 2).unwrap();
        let u02 = schedule_unitary(&h0.clone().then(&h2), &a).unwrap();
        let u20 = schedule_unitary(&h2.clone().then(&h0), &a).unwrap();
        let emb = Embedding::code(&a).unwrap();
        let m02 = emb.restrict(&u02);
        let m20 = emb.restrict(&u20);
        assert!((&m02 - &m20).norm() < 1e-10);

        let merged = hadamard_parallel(&arch, &[0, 2]).unwrap();
        let cost = accounting(&merged);
        assert_eq!((cost.local_gate_count, cost.evolve_count), (18, 2));
        let m = restricted_unitary(&merged, &a, &emb).unwrap();
        assert!(phase_aligned_distance(&m, &m02) < 1e-10);
        assert!(hadamard_parallel(&arch, &[0, 1]).is_err());
    }

    #[test]
    fn cphase_logical_exact() {
        for n in 2..=4 {
            let arch = chain(n);
            let a: Architecture = arch.clone().into();
            for k in 0..n - 1 {
                let s = cphase_logical(&arch, k, k + 1).unwrap();
                let cost = accounting(&s);
                assert_eq!((cost.local_gate_count, cost.evolve_count), (8, 1));
                assert_eq!(cost.time_over(arch.j1()), Some(Rational64::new(1, 16)));
                let emb = Embedding::logical(&a, &[k, k + 1], &vec![0; n]).unwrap();
                let r = process_fidelity(&s, &a, &cz(), &emb).unwrap();
                assert!(r.fidelity >= 1.0 - 1e-10 && r.leakage <= 1e-10);
            }
        }
        assert_eq!(cphase_logical(&chain(3), 0, 2).unwrap_err(), Error::NotAdjacent(0, 2));
    }

    #[test]
    fn cphase_logical_ignores_j0() {
        let mats: Vec<DMatrix<C64>> = [1.0, 3.0]
            .iter()
            .map(|&j0| {
                let arch = DiagonalChain::new(2, j0, 0.5).unwrap();
                let a: Architecture = arch.clone().into();
                restricted_unitary(&cphase_logical(&arch, 0, 1).unwrap(), &a, &Embedding::code(&a).unwrap()).unwrap()
            })
            .collect();
        assert!(phase_aligned_distance(&mats[0], &mats[1]) < 1e-10);
    }

    #[test]
    fn cnot_logical_truth_table() {
        let arch = chain(2);
        let a: Architecture = arch.clone().into();
        let s = cnot_logical(&arch, 0, 1).unwrap();
        let cost = accounting(&s);
        assert_eq!((cost.local_gate_count, cost.evolve_count), (26, 5));
        assert_eq!(cost.time_over(arch.j1()), Some(Rational64::new(1, 16)));
        assert_eq!(cost.time_over(arch.j0()), Some(Rational64::new(1, 1)));
        // logical index: bit 0 = control
        let mut cnot = DMatrix::zeros(4, 4);
        for x in 0..4usize {
            let y = if x & 1 == 1 { x ^ 2 } else { x };
            cnot[(y, x)] = c(1., 0.);
        }
        let r = process_fidelity(&s, &a, &cnot, &Embedding::code(&a).unwrap()).unwrap();
        assert!(r.fidelity >= 1.0 - 1e-10 && r.leakage <= 1e-10);
    }

    #[test]
    fn compile_dispatch_and_errors() {
        let arch = chain(2);
        assert_eq!(compile(&arch, &IsingGate::Hadamard { k: 1 }).unwrap(), hadamard_logical(&arch, 1).unwrap());
        assert!(compile(&arch, &IsingGate::Hadamard { k: 2 }).is_err());
        assert!(compile(&arch, &IsingGate::Cnot { control: 1, target: 1 }).is_err());
        let skew = DiagonalChain::new(2, 1.0, 0.5).unwrap().with_edge_coupling(0, 3, 0.7).unwrap();
        assert!(cphase_logical(&skew, 0, 1).is_err());
    }
}
