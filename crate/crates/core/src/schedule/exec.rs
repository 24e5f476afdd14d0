use std::collections::HashMap;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Instruction, PulseSchedule};
use crate::model::Architecture;
use crate::par::{self, Mode};
use crate::statevector::{gates, Axis, DenseOperator, Gate2, Propagator, StateVector, MAX_DENSE_QUBITS};
use crate::{Error, Result, C64};

/// Runs schedules against one architecture. The chain Hamiltonian is
/// diagonalized once; every `Evolve` uses it in full.
#[derive(Clone, Debug)]
pub struct Executor {
    arch: Architecture,
    propagator: Propagator,
    mode: Mode,
}

enum Step<'a> {
    Local(usize, Gate2),
    Evolve(usize),
    Measure(usize),
    PauliExp(&'a [(usize, Axis)], f64),
}

enum Evolution {
    Phases(Vec<C64>),
    Dense(DenseOperator),
}

struct Plan<'a> {
    steps: Vec<Step<'a>>,
    evolutions: Vec<Evolution>,
}

impl Executor {
    pub fn new(arch: &Architecture) -> Result<Self> {
        let h = arch.build_hamiltonian()?;
        Ok(Self { arch: arch.clone(), propagator: Propagator::new(&h)?, mode: Mode::default() })
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn arch(&self) -> &Architecture {
        &self.arch
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn plan<'a>(&self, sched: &'a PulseSchedule) -> Result<Plan<'a>> {
        let n = self.arch.n_qubits();
        let mut steps = Vec::with_capacity(sched.len());
        let mut evolutions = Vec::new();
        let mut index_of: HashMap<u64, usize> = HashMap::new();
        for ins in &sched.instructions {
            ins.validate()?;
            if let Some(&q) = ins.qubits().iter().find(|&&q| q >= n) {
                return Err(Error::QubitOutOfRange { qubit: q, n_qubits: n });
            }
            steps.push(match ins {
                Instruction::LocalRotation { qubit, axis, angle } => Step::Local(*qubit, gates::rotation(*axis, angle.value())),
                Instruction::LocalUnitary { qubit, gate } => Step::Local(*qubit, gate.matrix()),
                Instruction::MeasureZ { qubit } => Step::Measure(*qubit),
                Instruction::IdealPauliExp { factors, angle } => Step::PauliExp(factors, angle.value()),
                Instruction::Evolve { duration } => {
                    let t = duration.value();
                    let slot = match index_of.get(&t.to_bits()) {
                        Some(&i) => i,
                        None => {
                            evolutions.push(self.evolution(t)?);
                            index_of.insert(t.to_bits(), evolutions.len() - 1);
                            evolutions.len() - 1
                        }
                    };
                    Step::Evolve(slot)
                }
            });
        }
        Ok(Plan { steps, evolutions })
    }

    fn evolution(&self, t: f64) -> Result<Evolution> {
        Ok(match &self.propagator {
            Propagator::Diagonal(e) => Evolution::Phases(e.iter().map(|&x| C64::from_polar(1.0, -x * t)).collect()),
            Propagator::Spectral { .. } => Evolution::Dense(self.propagator.unitary(t)?),
        })
    }

    fn fold(&self, plan: &Plan<'_>, mut state: StateVector, rng: &mut ChaCha8Rng) -> Result<StateVector> {
        for step in &plan.steps {
            state = match step {
                Step::Local(q, u) => {
                    state.apply_local_in_place(*q, u);
                    state
                }
                Step::Evolve(slot) => match &plan.evolutions[*slot] {
                    Evolution::Phases(ph) => {
                        let amps = state.amplitudes().iter().zip(ph).map(|(a, p)| a * p).collect();
                        StateVector::from_amplitudes(state.n_qubits(), amps)?
                    }
                    Evolution::Dense(u) => state.apply_operator(u)?,
                },
                Step::Measure(q) => state.measure_z_with(*q, rng)?.1,
                Step::PauliExp(f, theta) => state.apply_pauli_exp(f, *theta)?,
            };
        }
        Ok(state)
    }

    fn check_state(&self, s: &StateVector) -> Result<()> {
        if s.n_qubits() != self.arch.n_qubits() {
            return Err(Error::DimensionMismatch { expected: self.arch.n_qubits(), got: s.n_qubits() });
        }
        Ok(())
    }

    /// Folds the schedule over `initial`. Measurements draw from a ChaCha8
    /// stream seeded with `seed`.
    pub fn run(&self, sched: &PulseSchedule, initial: &StateVector, seed: u64) -> Result<StateVector> {
        self.check_state(initial)?;
        let plan = self.plan(sched)?;
        self.fold(&plan, initial.clone(), &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Runs a measurement-free schedule on each input, in parallel when the
    /// executor's mode allows.
    pub fn run_batch(&self, sched: &PulseSchedule, inputs: &[StateVector]) -> Result<Vec<StateVector>> {
        if let Some(i) = sched.instructions.iter().position(|i| matches!(i, Instruction::MeasureZ { .. })) {
            return Err(Error::MeasurementInSchedule(i));
        }
        for s in inputs {
            self.check_state(s)?;
        }
        let plan = self.plan(sched)?;
        // no measurement, so the generator is never drawn from
        par::try_map(self.mode, inputs, |s| self.fold(&plan, s.clone(), &mut ChaCha8Rng::seed_from_u64(0)))
    }

    /// Ordered product of the instruction unitaries.
    pub fn unitary(&self, sched: &PulseSchedule) -> Result<DenseOperator> {
        let n = self.arch.n_qubits();
        if n > MAX_DENSE_QUBITS {
            return Err(Error::DimensionGuard { n_qubits: n, max: MAX_DENSE_QUBITS });
        }
        let dim = 1usize << n;
        let basis: Vec<StateVector> = (0..dim).map(|i| StateVector::basis(n, i)).collect::<Result<_>>()?;
        let cols = self.run_batch(sched, &basis)?;
        let m = DMatrix::from_fn(dim, dim, |r, c| cols[c].amplitudes()[r]);
        DenseOperator::new(m)
    }
}

/// Executes `sched` on `arch` from `initial`.
pub fn execute(sched: &PulseSchedule, arch: &Architecture, initial: &StateVector, rng_seed: u64) -> Result<StateVector> {
    Executor::new(arch)?.run(sched, initial, rng_seed)
}

/// Full unitary of a measurement-free schedule.
pub fn schedule_unitary(sched: &PulseSchedule, arch: &Architecture) -> Result<DenseOperator> {
    Executor::new(arch)?.unitary(sched)
}
