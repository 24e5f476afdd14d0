//! Pulse schedules: an ordered list of instantaneous local gates and timed
//! free evolutions under the architecture's always-on Hamiltonian.

mod doc;
mod exec;
mod quantity;

use std::fmt;
use std::ops::Add;

use num_rational::Rational64;
use serde::Serialize;

pub use doc::{deserialize, serialize};
pub use exec::{execute, schedule_unitary, Executor};
pub use quantity::{format_hex_float, Quantity};

use crate::statevector::{gates, Axis, Gate2, UNITARY_TOL};
use crate::{Error, Result};

/// Single-qubit unitary carried by a [`Instruction::LocalUnitary`].
#[derive(Clone, Debug, PartialEq)]
pub enum LocalGate {
    H,
    X,
    Y,
    Z,
    Matrix(Gate2),
}

impl LocalGate {
    pub fn matrix(&self) -> Gate2 {
        match self {
            LocalGate::H => gates::hadamard(),
            LocalGate::X => gates::pauli(Axis::X),
            LocalGate::Y => gates::pauli(Axis::Y),
            LocalGate::Z => gates::pauli(Axis::Z),
            LocalGate::Matrix(m) => *m,
        }
    }

    pub fn pauli(axis: Axis) -> Self {
        match axis {
            Axis::X => LocalGate::X,
            Axis::Y => LocalGate::Y,
            Axis::Z => LocalGate::Z,
        }
    }

    pub fn name(&self) -> Option<&'static str> {
        match self {
            LocalGate::H => Some("h"),
            LocalGate::X => Some("x"),
            LocalGate::Y => Some("y"),
            LocalGate::Z => Some("z"),
            LocalGate::Matrix(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instruction {
    /// `e^{−i(angle/2)σ^axis}` on one qubit.
    LocalRotation { qubit: usize, axis: Axis, angle: Quantity },
    LocalUnitary { qubit: usize, gate: LocalGate },
    /// Free evolution under the full chain Hamiltonian.
    Evolve { duration: Quantity },
    MeasureZ { qubit: usize },
    /// `e^{−i·angle·P}` applied exactly. Not physically available; used only
    /// to substitute ideal blocks when isolating synthesis error.
    IdealPauliExp { factors: Vec<(usize, Axis)>, angle: Quantity },
}

impl Instruction {
    pub fn rotation(qubit: usize, axis: Axis, angle: Quantity) -> Self {
        Instruction::LocalRotation { qubit, axis, angle }
    }

    pub fn gate(qubit: usize, gate: LocalGate) -> Self {
        Instruction::LocalUnitary { qubit, gate }
    }

    pub fn evolve(duration: Quantity) -> Self {
        Instruction::Evolve { duration }
    }

    /// Checks the instruction's own invariants (not qubit ranges).
    pub fn validate(&self) -> Result<()> {
        match self {
            Instruction::Evolve { duration } => {
                let t = duration.value();
                if t.is_nan() || t < 0.0 || !t.is_finite() {
                    return Err(Error::NegativeDuration(t));
                }
            }
            Instruction::LocalUnitary { gate: LocalGate::Matrix(m), .. } => {
                let residual = gates::unitarity_residual(m);
                if residual.is_nan() || residual > UNITARY_TOL {
                    return Err(Error::NotUnitary { residual });
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Instruction::LocalRotation { qubit, .. }
            | Instruction::LocalUnitary { qubit, .. }
            | Instruction::MeasureZ { qubit } => vec![*qubit],
            Instruction::Evolve { .. } => Vec::new(),
            Instruction::IdealPauliExp { factors, .. } => factors.iter().map(|&(q, _)| q).collect(),
        }
    }

    pub fn is_local(&self) -> bool {
        matches!(self, Instruction::LocalRotation { .. } | Instruction::LocalUnitary { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PulseSchedule {
    pub label: String,
    pub instructions: Vec<Instruction>,
}

impl PulseSchedule {
    pub fn new(label: impl Into<String>) -> Self {
        Self { label: label.into(), instructions: Vec::new() }
    }

    pub fn push(&mut self, ins: Instruction) -> &mut Self {
        self.instructions.push(ins);
        self
    }

    /// Appends `other`'s instructions after this schedule's.
    pub fn append(&mut self, other: &PulseSchedule) -> &mut Self {
        self.instructions.extend(other.instructions.iter().cloned());
        self
    }

    pub fn then(mut self, other: &PulseSchedule) -> Self {
        self.append(other);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Instruction> {
        self.instructions.iter()
    }

    pub fn has_measurement(&self) -> bool {
        self.instructions.iter().any(|i| matches!(i, Instruction::MeasureZ { .. }))
    }

    pub fn accounting(&self) -> CostReport {
        accounting(self)
    }
}

/// Counted cost of a schedule. Local gates are free in time; only evolution
/// is charged.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CostReport {
    pub local_gate_count: usize,
    pub evolve_count: usize,
    pub total_evolve_time: f64,
    /// Exact total as one `ratio·π/divisor` term per distinct divisor, in
    /// ascending divisor order. `None` when some duration is a bare float.
    #[serde(serialize_with = "ser_symbolic")]
    pub symbolic_time: Option<Vec<Quantity>>,
    pub ideal_exp_count: usize,
    pub measure_count: usize,
}

fn ser_symbolic<S: serde::Serializer>(v: &Option<Vec<Quantity>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(_) => s.collect_str(&SymbolicTime(v)),
        None => s.serialize_none(),
    }
}

struct SymbolicTime<'a>(&'a Option<Vec<Quantity>>);

impl fmt::Display for SymbolicTime<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => f.write_str("inexact"),
            Some(terms) if terms.is_empty() => f.write_str("0"),
            Some(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

impl CostReport {
    fn empty() -> Self {
        Self {
            local_gate_count: 0,
            evolve_count: 0,
            total_evolve_time: 0.0,
            symbolic_time: Some(Vec::new()),
            ideal_exp_count: 0,
            measure_count: 0,
        }
    }

    /// Exact coefficient of `π/divisor` in the total evolution time; zero if
    /// no duration uses that divisor, `None` if the total is inexact.
    pub fn time_over(&self, divisor: f64) -> Option<Rational64> {
        let terms = self.symbolic_time.as_ref()?;
        Some(
            terms
                .iter()
                .find_map(|q| match q {
                    Quantity::Pi { ratio, divisor: d } if *d == divisor => Some(*ratio),
                    _ => None,
                })
                .unwrap_or_else(|| Rational64::from_integer(0)),
        )
    }

    pub fn symbolic_time_string(&self) -> String {
        SymbolicTime(&self.symbolic_time).to_string()
    }
}

impl fmt::Display for CostReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "locals={} evolves={} time={} ({:.12})",
            self.local_gate_count,
            self.evolve_count,
            self.symbolic_time_string(),
            self.total_evolve_time
        )?;
        if self.ideal_exp_count > 0 {
            write!(f, " ideal={}", self.ideal_exp_count)?;
        }
        if self.measure_count > 0 {
            write!(f, " measurements={}", self.measure_count)?;
        }
        Ok(())
    }
}

impl Add for CostReport {
    type Output = CostReport;

    fn add(self, rhs: CostReport) -> CostReport {
        let symbolic = match (self.symbolic_time, rhs.symbolic_time) {
            (Some(a), Some(b)) => Some(merge_symbolic(a.into_iter().chain(b))),
            _ => None,
        };
        let mut floats = Neumaier::default();
        floats.add(self.total_evolve_time);
        floats.add(rhs.total_evolve_time);
        CostReport {
            local_gate_count: self.local_gate_count + rhs.local_gate_count,
            evolve_count: self.evolve_count + rhs.evolve_count,
            total_evolve_time: match &symbolic {
                Some(terms) => symbolic_value(terms),
                None => floats.total(),
            },
            symbolic_time: symbolic,
            ideal_exp_count: self.ideal_exp_count + rhs.ideal_exp_count,
            measure_count: self.measure_count + rhs.measure_count,
        }
    }
}

fn merge_symbolic(items: impl IntoIterator<Item = Quantity>) -> Vec<Quantity> {
    let mut groups: Vec<(f64, Rational64)> = Vec::new();
    for q in items {
        if let Quantity::Pi { ratio, divisor } = q {
            match groups.iter_mut().find(|(d, _)| *d == divisor) {
                Some((_, r)) => *r += ratio,
                None => groups.push((divisor, ratio)),
            }
        }
    }
    groups.sort_by(|a, b| a.0.total_cmp(&b.0));
    groups
        .into_iter()
        .filter(|(_, r)| *r.numer() != 0)
        .map(|(divisor, ratio)| Quantity::Pi { ratio, divisor })
        .collect()
}

fn symbolic_value(terms: &[Quantity]) -> f64 {
    let mut s = Neumaier::default();
    for t in terms {
        s.add(t.value());
    }
    s.total()
}

/// Neumaier compensated summation.
#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Counts local gates and evolutions and sums evolution time exactly.
pub fn accounting(sched: &PulseSchedule) -> CostReport {
    let mut r = CostReport::empty();
    let mut exact = true;
    let mut floats = Neumaier::default();
    let mut durations = Vec::new();
    for ins in &sched.instructions {
        match ins {
            Instruction::LocalRotation { .. } | Instruction::LocalUnitary { .. } => r.local_gate_count += 1,
            Instruction::Evolve { duration } => {
                r.evolve_count += 1;
                exact &= duration.is_exact();
                floats.add(duration.value());
                durations.push(*duration);
            }
            Instruction::MeasureZ { .. } => r.measure_count += 1,
            Instruction::IdealPauliExp { .. } => r.ideal_exp_count += 1,
        }
    }
    if exact {
        let terms = merge_symbolic(durations);
        r.total_evolve_time = symbolic_value(&terms);
        r.symbolic_time = Some(terms);
    } else {
        r.total_evolve_time = floats.total();
        r.symbolic_time = None;
    }
    r
}
