//! Gate compilation for the exchange chain.
//!
//! Two-qubit interactions are carved out of the always-on star-dot exchange
//! by selective coupling: local π pulses conjugate the evolution so that
//! unwanted terms cancel. For the group of stars `q1, q2` around isolator
//! `(i1, i2)`:
//!
//! 1. `P_q1 P_q2 · e^{−iHt} · P_q1 P_q2 · e^{−iHt} ≈ e^{−i2jxy·t·Σ_q^P Σ_i^P}`
//!    (P ∈ {X, Y}; the only approximate step);
//! 2. conjugating by `Z` on the other star keeps one star;
//! 3. conjugating by `Z` on the other dot keeps one dot,
//!
//! leaving `e^{−i8jxy·t·P_s P_d}`. With `t = π/(32·N·jxy)` and `N`
//! repetitions this builds `e^{−i(XX+YY)π/4}` on a star-dot pair.

use crate::model::{ExchangeChain, IsolatorGroup};
use crate::schedule::{Instruction, LocalGate, PulseSchedule, Quantity};
use crate::statevector::{Axis, Gate2};
use crate::{Error, Result};

/// Repetition count `N` of the synthesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SynthesisParams {
    n_reps: usize,
}

impl Default for SynthesisParams {
    fn default() -> Self {
        Self { n_reps: 32 }
    }
}

impl SynthesisParams {
    pub fn new(n_reps: usize) -> Result<Self> {
        if n_reps == 0 {
            return Err(Error::InvalidRepetitions);
        }
        Ok(Self { n_reps })
    }

    pub fn n_reps(&self) -> usize {
        self.n_reps
    }

    /// `t = π/(32·N·jxy)`.
    pub fn base_dt(&self, jxy: f64) -> Quantity {
        Quantity::pi_over(1, 32 * self.n_reps as i64, jxy)
    }
}

/// How the first conjugation level is realized.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Level1 {
    /// Physical: two evolutions sandwiched by star π pulses.
    #[default]
    Trotter,
    /// Exact target exponential, for isolating the Trotter error.
    Ideal,
}

/// A logical or pair-level gate request for the exchange chain.
#[derive(Clone, Debug, PartialEq)]
pub enum ExchangeGate {
    Swap { star: usize, dot: usize },
    XxQuarter { star: usize, dot: usize },
    Cphase { k: usize, l: usize },
    Local { k: usize, gate: LocalGate },
}

pub fn compile(arch: &ExchangeChain, gate: &ExchangeGate, params: SynthesisParams) -> Result<PulseSchedule> {
    match gate {
        ExchangeGate::Swap { star, dot } => synth_swap(arch, *star, *dot, params, Level1::Trotter),
        ExchangeGate::XxQuarter { star, dot } => synth_xx_quarter(arch, *star, *dot, params, Level1::Trotter),
        ExchangeGate::Cphase { k, l } => cphase_logical_exchange(arch, *k, *l, params),
        ExchangeGate::Local { k, gate } => local_logical_gate_exchange(arch, *k, gate.clone()),
    }
}

/// Shared `jxy` of the four star-dot edges of a group.
fn group_jxy(arch: &ExchangeChain, g: &IsolatorGroup) -> Result<f64> {
    let mut jxy = None;
    for s in g.stars {
        for d in g.dots {
            let c = arch.coupling(s, d).ok_or(Error::PairNotInGroup { star: s, dot: d })?;
            match jxy {
                None => jxy = Some(c.jxy),
                Some(j) if j != c.jxy => {
                    return Err(Error::InvalidArchitecture(format!(
                        "isolator {} has unequal exchange couplings",
                        g.isolator
                    )))
                }
                _ => {}
            }
        }
    }
    jxy.ok_or_else(|| Error::InvalidArchitecture("empty group".into()))
}

fn level1(s: &mut PulseSchedule, g: &IsolatorGroup, axis: Axis, t: Quantity, mode: Level1, ideal_angle: Quantity) {
    match mode {
        Level1::Trotter => {
            for _ in 0..2 {
                for q in g.stars {
                    s.push(Instruction::gate(q, LocalGate::pauli(axis)));
                }
                s.push(Instruction::evolve(t));
            }
        }
        Level1::Ideal => {
            for q in g.stars {
                for d in g.dots {
                    s.push(Instruction::IdealPauliExp { factors: vec![(q, axis), (d, axis)], angle: ideal_angle });
                }
            }
        }
    }
}

/// One selective-coupling block: `≈ e^{−i8jxy·t·P_s P_d}` on the pair, with
/// 22 locals and 8 evolutions of `t` in physical mode.
pub fn synth_block(
    arch: &ExchangeChain,
    star: usize,
    dot: usize,
    axis: Axis,
    params: SynthesisParams,
    mode: Level1,
) -> Result<PulseSchedule> {
    if axis == Axis::Z {
        return Err(Error::Invalid("selective coupling blocks use the x or y axis".into()));
    }
    let g = arch.group_of_pair(star, dot)?;
    let jxy = group_jxy(arch, &g)?;
    let t = params.base_dt(jxy);
    // 2·jxy·t = π/(16N)
    let ideal = Quantity::pi(1, 16 * params.n_reps as i64);
    let other_star = g.other_star(star).expect("star is in its group");
    let other_dot = g.other_dot(dot).expect("dot is in its group");

    let mut l1 = PulseSchedule::default();
    level1(&mut l1, &g, axis, t, mode, ideal);
    let conj = |inner: &PulseSchedule, q: usize| {
        let mut s = PulseSchedule::default();
        s.push(Instruction::gate(q, LocalGate::Z));
        s.append(inner);
        s.push(Instruction::gate(q, LocalGate::Z));
        s.append(inner);
        s
    };
    let l2 = conj(&l1, other_star);
    let l3 = conj(&l2, other_dot);
    Ok(l3.with_label(format!("{}{}({star}, {dot})", axis.name(), axis.name())))
}

pub fn synth_xx_block(arch: &ExchangeChain, star: usize, dot: usize, params: SynthesisParams) -> Result<PulseSchedule> {
    synth_block(arch, star, dot, Axis::X, params, Level1::Trotter)
}

/// `≈ e^{−i(XX+YY)π/4}` on `(star, dot)`: `N` repetitions of an xx block and
/// a yy block; 44N locals, total evolution `π/(2·jxy)`.
pub fn synth_swap(arch: &ExchangeChain, star: usize, dot: usize, params: SynthesisParams, mode: Level1) -> Result<PulseSchedule> {
    let xx = synth_block(arch, star, dot, Axis::X, params, mode)?;
    let yy = synth_block(arch, star, dot, Axis::Y, params, mode)?;
    let mut s = PulseSchedule::new(format!("swap({star}, {dot}; N={})", params.n_reps));
    for _ in 0..params.n_reps {
        s.append(&xx).append(&yy);
    }
    Ok(s)
}

/// `≈ e^{−iXXπ/4}` on `(star, dot)`: `N` xx blocks; 22N locals, `π/(4·jxy)`.
pub fn synth_xx_quarter(arch: &ExchangeChain, star: usize, dot: usize, params: SynthesisParams, mode: Level1) -> Result<PulseSchedule> {
    let xx = synth_block(arch, star, dot, Axis::X, params, mode)?;
    let mut s = PulseSchedule::new(format!("xx_quarter({star}, {dot}; N={})", params.n_reps));
    for _ in 0..params.n_reps {
        s.append(&xx);
    }
    Ok(s)
}

/// Logical CPHASE between adjacent bits `k`, `k+1`, through the first dot
/// `i1` of the shared isolator:
///
/// swap(q1, i1); CPHASE(i1, q2) from an xx quarter gate dressed with
/// Hadamards and `e^{iπ/4·Z}` phases; swap(q1, i1); `Z_q1 Z_i1`.
///
/// The swap squares to `Z⊗Z`, which the final pair of Z gates removes. Total
/// evolution `5π/(4·jxy)`, `110N + 8` locals.
pub fn cphase_logical_exchange(arch: &ExchangeChain, k: usize, l: usize, params: SynthesisParams) -> Result<PulseSchedule> {
    for i in [k, l] {
        if i >= arch.n_logical() {
            return Err(Error::LogicalOutOfRange { index: i, width: arch.n_logical() });
        }
    }
    if k.abs_diff(l) != 1 {
        return Err(Error::NotAdjacent(k, l));
    }
    let lo = k.min(l);
    let (q1, q2, i1) = (arch.star(lo), arch.star(lo + 1), arch.dots(lo)[0]);
    let swap = synth_swap(arch, q1, i1, params, Level1::Trotter)?;
    let mut s = PulseSchedule::new(format!("cphase_L({k}, {l}; N={})", params.n_reps));
    s.append(&swap);
    s.push(Instruction::gate(i1, LocalGate::H)).push(Instruction::gate(q2, LocalGate::H));
    s.append(&synth_xx_quarter(arch, q2, i1, params, Level1::Trotter)?);
    s.push(Instruction::gate(i1, LocalGate::H)).push(Instruction::gate(q2, LocalGate::H));
    s.push(Instruction::rotation(i1, Axis::Z, Quantity::pi(-1, 2)))
        .push(Instruction::rotation(q2, Axis::Z, Quantity::pi(-1, 2)));
    s.append(&swap);
    s.push(Instruction::gate(q1, LocalGate::Z)).push(Instruction::gate(i1, LocalGate::Z));
    Ok(s)
}

/// `u` on the star of bit `k`; exact.
pub fn local_logical_gate_exchange(arch: &ExchangeChain, k: usize, gate: LocalGate) -> Result<PulseSchedule> {
    if k >= arch.n_logical() {
        return Err(Error::LogicalOutOfRange { index: k, width: arch.n_logical() });
    }
    let mut s = PulseSchedule::new(format!("local_L({k})"));
    s.push(Instruction::gate(arch.star(k), gate));
    Ok(s)
}

/// Convenience for a raw 2×2 matrix.
pub fn local_matrix_exchange(arch: &ExchangeChain, k: usize, u: Gate2) -> Result<PulseSchedule> {
    local_logical_gate_exchange(arch, k, LocalGate::Matrix(u))
}
