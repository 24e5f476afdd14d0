//! Randomized invariants.

mod common;

use common::*;
use ifsim::compile_ising::hadamard_logical;
use ifsim::encoding::{annihilation_residual, encode, leakage, LogicalRegister};
use ifsim::model::{Architecture, DiagonalChain, ExchangeChain};
use ifsim::schedule::{accounting, deserialize, execute, schedule_unitary, serialize, Instruction, LocalGate, PulseSchedule, Quantity};
use ifsim::statevector::{gates, Axis, PauliSum, PauliTerm, StateVector};
use ifsim::C64;
use proptest::prelude::*;

fn axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::X), Just(Axis::Y), Just(Axis::Z)]
}

fn hamiltonian(n: usize) -> impl Strategy<Value = PauliSum> {
    prop::collection::vec((-2.0f64..2.0, prop::collection::vec(prop::option::of(axis()), n)), 1..6).prop_map(move |terms| {
        let mut h = PauliSum::new(n);
        for (coef, ops) in terms {
            let factors = ops.into_iter().enumerate().filter_map(|(q, a)| a.map(|a| (q, a)));
            h.push(PauliTerm::new(coef, factors).unwrap()).unwrap();
        }
        h
    })
}

fn state(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n).prop_filter_map("non-zero", move |v| {
        let entries: Vec<(usize, C64)> = v.into_iter().enumerate().map(|(i, (re, im))| (i, C64::new(re, im))).collect();
        StateVector::from_sparse(n, &entries).ok()
    })
}

fn instruction(n: usize) -> impl Strategy<Value = Instruction> {
    prop_oneof![
        (0..n, axis(), -7.0f64..7.0).prop_map(|(q, a, th)| Instruction::rotation(q, a, Quantity::float(th))),
        (0..n, prop_oneof![Just(LocalGate::H), Just(LocalGate::X), Just(LocalGate::Y), Just(LocalGate::Z)])
            .prop_map(|(q, g)| Instruction::gate(q, g)),
        (0.0f64..3.0).prop_map(|t| Instruction::evolve(Quantity::float(t))),
        (1i64..64).prop_map(|d| Instruction::evolve(Quantity::pi(1, d))),
    ]
}

fn schedule(n: usize) -> impl Strategy<Value = PulseSchedule> {
    prop::collection::vec(instruction(n), 0..12).prop_map(|ins| PulseSchedule { label: "random".into(), instructions: ins })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evolution_preserves_norm((h, psi) in (1usize..=4).prop_flat_map(|n| (hamiltonian(n), state(n))), t in 0.0f64..5.0) {
        let out = psi.evolve(&h, t).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn evolution_composes((h, psi) in (1usize..=4).prop_flat_map(|n| (hamiltonian(n), state(n))), t1 in 0.0f64..2.0, t2 in 0.0f64..2.0) {
        let two = psi.evolve(&h, t1).unwrap().evolve(&h, t2).unwrap();
        let one = psi.evolve(&h, t1 + t2).unwrap();
        prop_assert!(max_diff(two.amplitudes(), one.amplitudes()) < 1e-10);
    }

    #[test]
    fn evolve_matches_series(h in hamiltonian(3), psi in state(3), t in 0.0f64..2.0) {
        let want = mat_vec(&propagator(&dense(&h), t), psi.amplitudes());
        prop_assert!(max_diff(psi.evolve(&h, t).unwrap().amplitudes(), &want) < 1e-10);
    }

    #[test]
    fn schedule_unitary_is_unitary(s in schedule(4), j0 in 0.2f64..3.0, j1 in 0.2f64..3.0) {
        let arch: Architecture = DiagonalChain::new(2, j0, j1).unwrap().into();
        let u = schedule_unitary(&s, &arch).unwrap();
        prop_assert!(u.unitarity_residual() < 1e-10);
        let oracle = common::schedule_unitary(&s, &dense(&arch.build_hamiltonian().unwrap()), 4);
        prop_assert!((u.matrix() - oracle).norm() < 1e-9);
    }

    #[test]
    fn execution_preserves_norm(s in schedule(6), psi in state(6), jz in 0.0f64..2.0) {
        let arch: Architecture = ExchangeChain::new(2, 1.0, jz).unwrap().into();
        let out = execute(&s, &arch, &psi, 7).unwrap();
        prop_assert!((out.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn accounting_is_additive(a in schedule(4), b in schedule(4)) {
        let joined = a.clone().then(&b);
        let (ca, cb, cj) = (accounting(&a), accounting(&b), accounting(&joined));
        prop_assert_eq!(ca.local_gate_count + cb.local_gate_count, cj.local_gate_count);
        prop_assert_eq!(ca.evolve_count + cb.evolve_count, cj.evolve_count);
        prop_assert!((ca.total_evolve_time + cb.total_evolve_time - cj.total_evolve_time).abs() < 1e-12);
    }

    #[test]
    fn document_round_trip(s in schedule(6)) {
        prop_assert_eq!(deserialize(&serialize(&s)).unwrap(), s);
    }

    #[test]
    fn codewords_annihilated(width in 2usize..=4, j0 in 0.1f64..3.0, j1 in 0.1f64..3.0, x in 0usize..16) {
        let chain = DiagonalChain::new(width, j0, j1).unwrap();
        let arch: Architecture = chain.clone().into();
        let bits: Vec<u8> = (0..width).map(|k| (x >> k & 1) as u8).collect();
        let reg = encode(&bits, &arch).unwrap();
        for k in 0..width - 1 {
            prop_assert!(annihilation_residual(&chain.interaction_between(k, k + 1).unwrap(), reg.state()).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn idle_registers_do_not_evolve(
        amps in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4),
        j0 in 0.1f64..3.0, j1 in 0.1f64..3.0, jz in 0.0f64..2.0, t in 0.0f64..10.0,
    ) {
        let amps: Vec<C64> = amps.into_iter().map(|(re, im)| C64::new(re, im)).collect();
        prop_assume!(amps.iter().map(|a| a.norm_sqr()).sum::<f64>() > 1e-3);
        let archs: [Architecture; 2] = [DiagonalChain::new(2, j0, j1).unwrap().into(), ExchangeChain::new(2, 1.0, jz).unwrap().into()];
        for arch in archs {
            let reg = LogicalRegister::from_logical(&arch, &amps).unwrap();
            let mut s = PulseSchedule::new("idle");
            s.push(Instruction::evolve(Quantity::float(t)));
            let out = reg.apply(&s, 0).unwrap();
            prop_assert!(1.0 - reg.state().inner(out.state()).unwrap().norm_sqr() < 1e-10);
        }
    }

    #[test]
    fn hadamard_stays_in_code_space(j0 in 0.2f64..3.0, j1 in 0.2f64..3.0, k in 0usize..3, x in 0usize..8) {
        let chain = DiagonalChain::new(3, j0, j1).unwrap();
        let arch: Architecture = chain.clone().into();
        let bits: Vec<u8> = (0..3).map(|i| (x >> i & 1) as u8).collect();
        let out = encode(&bits, &arch).unwrap().apply(&hadamard_logical(&chain, k).unwrap(), 0).unwrap();
        prop_assert!(leakage(out.state(), &arch).unwrap() < 1e-10);
    }

    #[test]
    fn local_gates_keep_unitarity(th in -10.0f64..10.0, a in axis()) {
        prop_assert!(gates::unitarity_residual(&gates::rotation(a, th)) < 1e-14);
    }
}
