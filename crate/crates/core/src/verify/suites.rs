//! Named verification suites and the cost comparison table.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::str::FromStr;

use nalgebra::DMatrix;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::report::{Check, Comparison};
use super::sweep::{trotter_sweep, TrotterSweep};
use super::{
    cphase_target, embed_low, iswap_target, phase_aligned_distance, process_fidelity_with, restricted_unitary_with,
    xx_quarter_target, Embedding,
};
use crate::compile_exchange::{
    cphase_logical_exchange, local_logical_gate_exchange, synth_swap, synth_xx_quarter, Level1, SynthesisParams,
};
use crate::compile_ising::{cnot_logical, cphase_logical, hadamard_logical};
use crate::encoding::{annihilation_residual, encode, LogicalRegister};
use crate::model::{Architecture, DiagonalChain, ExchangeChain};
use crate::par::{self, Mode};
use crate::schedule::{accounting, CostReport, Executor, Instruction, LocalGate, PulseSchedule, Quantity};
use crate::statevector::{gates, Axis};
use crate::{Error, Result, C64};

/// Pass/fail tolerances. Defaults come from the embedded `thresholds.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Thresholds {
    pub annihilation_residual: f64,
    pub exact_infidelity: f64,
    pub exact_leakage: f64,
    pub idle_infidelity: f64,
    pub bell_amplitude: f64,
    pub parallel_exact: f64,
    pub trotter_ratio: [f64; 2],
    pub trotter_slope: [f64; 2],
    pub swap_fidelity_n64: f64,
    pub exchange_cphase_fidelity: f64,
    pub exchange_cphase_phase: f64,
    pub leakage_slack: f64,
}

const DEFAULT_THRESHOLDS: &str = include_str!("thresholds.json");

impl Default for Thresholds {
    fn default() -> Self {
        serde_json::from_str(DEFAULT_THRESHOLDS).expect("embedded threshold table parses")
    }
}

impl Thresholds {
    /// Overrides one entry; `value` is JSON (`1e-9`, `[1.5, 2.5]`).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let mut table = serde_json::to_value(&*self).map_err(|e| Error::Invalid(e.to_string()))?;
        let slot = table
            .get_mut(key)
            .ok_or_else(|| Error::Invalid(format!("unknown threshold `{key}`")))?;
        *slot = serde_json::from_str(value).map_err(|e| Error::Parse(format!("threshold `{key}`: {e}")))?;
        *self = serde_json::from_value(table).map_err(|e| Error::Parse(format!("threshold `{key}`: {e}")))?;
        Ok(())
    }
}

/// Parameters shared by all suites.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub thresholds: Thresholds,
    /// `N` for the encoded exchange gate.
    pub n_reps: usize,
    /// `N` values of the Trotter sweep.
    pub ns: Vec<usize>,
    pub jzs: Vec<f64>,
    pub oracle_ns: Vec<usize>,
    pub idle_times: Vec<f64>,
    pub mode: Mode,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            thresholds: Thresholds::default(),
            n_reps: 32,
            ns: vec![8, 16, 32, 64],
            jzs: vec![0.0, 0.5, 1.0],
            oracle_ns: vec![1, 4],
            idle_times: vec![0.3, 1.7, 5.0],
            mode: Mode::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Diagonal,
    Exchange,
    Trotter,
    Costs,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["diagonal", "exchange", "trotter", "costs", "all"];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diagonal" => Ok(Suite::Diagonal),
            "exchange" => Ok(Suite::Exchange),
            "trotter" => Ok(Suite::Trotter),
            "costs" => Ok(Suite::Costs),
            "all" => Ok(Suite::All),
            other => Err(Error::Invalid(format!("unknown suite `{other}` (expected one of {})", Suite::NAMES.join(", ")))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub sweeps: Vec<TrotterSweep>,
    pub costs: Vec<CostRow>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.sweeps.extend(other.sweeps);
        self.costs.extend(other.costs);
    }
}

/// Runs a suite; `All` runs the four suites in parallel and concatenates
/// them in name order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    match suite {
        Suite::Diagonal => Ok(Report { checks: diagonal_suite(cfg)?, ..Report::default() }),
        Suite::Exchange => Ok(Report { checks: exchange_suite(cfg)?, ..Report::default() }),
        Suite::Trotter => trotter_suite(cfg),
        Suite::Costs => {
            let (costs, checks) = cost_comparison()?;
            Ok(Report { checks, costs, ..Report::default() })
        }
        Suite::All => {
            let parts = [Suite::Costs, Suite::Diagonal, Suite::Exchange, Suite::Trotter];
            let reports = par::try_map(cfg.mode, &parts, |&s| run_suite(s, cfg))?;
            let mut out = Report::default();
            for r in reports {
                out.merge(r);
            }
            Ok(out)
        }
    }
}

fn exact_count(suite: &str, case: &str, metric: &str, got: usize, want: usize) -> Check {
    Check::new(suite, case, metric, got as f64, Comparison::Within(want as f64, want as f64))
}

/// `|t/π·divisor − want|`; zero when the symbolic total is exactly `want`.
fn time_error(cost: &CostReport, divisor: f64, want: Rational64) -> f64 {
    match cost.time_over(divisor) {
        Some(r) if cost.symbolic_time.as_ref().map_or(0, |t| t.len()) <= 1 => {
            let d = r - want;
            (*d.numer() as f64 / *d.denom() as f64).abs()
        }
        _ => f64::INFINITY,
    }
}

fn all_bits(width: usize) -> Vec<Vec<u8>> {
    (0..1usize << width).map(|x| (0..width).map(|k| (x >> k & 1) as u8).collect()).collect()
}

/// Annihilation, idle invariance, neighbour independence and readout round
/// trip for one architecture.
pub fn invariance_suites(arch: &Architecture, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let th = &cfg.thresholds;
    let suite = arch.kind();
    let exec = Executor::new(arch)?.with_mode(cfg.mode);
    let width = arch.n_logical();
    let mut checks = Vec::new();

    let mut residual: f64 = 0.0;
    for bits in all_bits(width) {
        let reg = encode(&bits, arch)?;
        for k in 0..width.saturating_sub(1) {
            residual = residual.max(annihilation_residual(&arch.interaction_between(k, k + 1)?, reg.state())?);
        }
    }
    checks.push(Check::new(suite, "annihilation", "max_residual", residual, Comparison::AtMost(th.annihilation_residual)));

    let unit = match arch {
        Architecture::Diagonal(c) => c.j0(),
        Architecture::Exchange(c) => c.jxy(),
    };
    let emb = Embedding::code(arch)?;
    let id = DMatrix::identity(emb.dim(), emb.dim());
    for &t in &cfg.idle_times {
        let mut s = PulseSchedule::new("idle");
        s.push(Instruction::evolve(Quantity::float(t / unit)));
        let r = process_fidelity_with(&exec, &s, &id, &emb)?;
        checks.push(Check::new(suite, format!("idle T={t}"), "infidelity", r.infidelity(), Comparison::AtMost(th.idle_infidelity)));
    }

    let mut mismatches = 0usize;
    for bits in all_bits(width) {
        let reg = encode(&bits, arch)?;
        for (k, &b) in bits.iter().enumerate() {
            if reg.readout(k, 0)?.0 != b {
                mismatches += 1;
            }
        }
    }
    checks.push(Check::new(suite, "readout", "mismatches", mismatches as f64, Comparison::AtMost(0.0)));

    match arch {
        Architecture::Diagonal(c) => {
            let mut worst: f64 = 0.0;
            for k in 0..width {
                let s = hadamard_logical(c, k)?;
                let others: Vec<usize> = (0..width).filter(|&i| i != k).collect();
                let mut first: Option<DMatrix<C64>> = None;
                for config in 0..1usize << others.len() {
                    let mut fixed = vec![0u8; width];
                    for (i, &o) in others.iter().enumerate() {
                        fixed[o] = (config >> i & 1) as u8;
                    }
                    let m = restricted_unitary_with(&exec, &s, &Embedding::logical(arch, &[k], &fixed)?)?;
                    match &first {
                        None => first = Some(m),
                        Some(f) => worst = worst.max(phase_aligned_distance(f, &m)),
                    }
                }
            }
            checks.push(Check::new(suite, "neighbour independence", "max_distance", worst, Comparison::AtMost(th.exact_infidelity)));
        }
        Architecture::Exchange(c) => {
            let us: Vec<_> = (0..width).map(|k| gates::rotation(Axis::Y, 0.3 + k as f64) * gates::hadamard()).collect();
            let mut s = PulseSchedule::new("parallel stars");
            let mut target = DMatrix::identity(1, 1);
            for (k, u) in us.iter().enumerate() {
                s.append(&local_logical_gate_exchange(c, k, LocalGate::Matrix(*u))?);
                let small = DMatrix::from_fn(2, 2, |r, col| u[(r, col)]);
                target = small.kronecker(&target);
            }
            let r = process_fidelity_with(&exec, &s, &target, &emb)?;
            checks.push(Check::new(suite, "parallel stars", "infidelity", r.infidelity(), Comparison::AtMost(th.parallel_exact)));

            let reg = LogicalRegister::from_logical(arch, &vec![C64::new(1.0, 0.0); 1 << width])?;
            let mut worst: f64 = 0.0;
            for k in 0..width {
                let out = reg.apply_with(&exec, &local_logical_gate_exchange(c, k, LocalGate::X)?, 0)?;
                for other in (0..width).filter(|&o| o != k) {
                    let keep = arch.qubits_of(other);
                    let before = reg.state().reduced_density(&keep)?;
                    let after = out.state().reduced_density(&keep)?;
                    worst = worst.max((before - after).iter().map(|x| x.norm()).fold(0.0, f64::max));
                }
            }
            checks.push(Check::new(suite, "idle neighbours", "max_density_change", worst, Comparison::AtMost(th.parallel_exact)));
        }
    }
    Ok(checks)
}

/// Ising chain: invariance suites plus every compiled gate and the Bell
/// circuit.
pub fn diagonal_suite(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let th = &cfg.thresholds;
    let s = "diagonal";
    let chain = DiagonalChain::new(3, 1.0, 0.5)?;
    let arch: Architecture = chain.clone().into();
    let exec = Executor::new(&arch)?.with_mode(cfg.mode);
    let mut checks = invariance_suites(&arch, cfg)?;

    let h = DMatrix::from_fn(2, 2, |r, c| C64::new(if r == 1 && c == 1 { -FRAC_1_SQRT_2 } else { FRAC_1_SQRT_2 }, 0.0));
    for k in 0..chain.n_logical() {
        let sched = hadamard_logical(&chain, k)?;
        let r = process_fidelity_with(&exec, &sched, &h, &Embedding::logical(&arch, &[k], &[0; 3])?)?;
        let case = format!("hadamard k={k}");
        checks.push(Check::new(s, case.clone(), "infidelity", r.infidelity(), Comparison::AtMost(th.exact_infidelity)));
        checks.push(Check::new(s, case.clone(), "leakage", r.leakage, Comparison::AtMost(th.exact_leakage)));
        checks.push(exact_count(s, &case, "locals", r.cost.local_gate_count, 9));
        checks.push(exact_count(s, &case, "evolves", r.cost.evolve_count, 2));
        checks.push(Check::new(s, case, "time_error_pi_over_j0", time_error(&r.cost, chain.j0(), Rational64::new(1, 2)), Comparison::AtMost(0.0)));
    }

    for k in 0..chain.n_logical() - 1 {
        let sched = cphase_logical(&chain, k, k + 1)?;
        let r = process_fidelity_with(&exec, &sched, &cphase_target(), &Embedding::logical(&arch, &[k, k + 1], &[0; 3])?)?;
        let case = format!("cphase ({k},{})", k + 1);
        checks.push(Check::new(s, case.clone(), "infidelity", r.infidelity(), Comparison::AtMost(th.exact_infidelity)));
        checks.push(Check::new(s, case.clone(), "leakage", r.leakage, Comparison::AtMost(th.exact_leakage)));
        checks.push(exact_count(s, &case, "locals", r.cost.local_gate_count, 8));
        checks.push(exact_count(s, &case, "evolves", r.cost.evolve_count, 1));
        checks.push(Check::new(s, case, "time_error_pi_over_j1", time_error(&r.cost, chain.j1(), Rational64::new(1, 16)), Comparison::AtMost(0.0)));
    }

    let mats = [1.0, 3.0]
        .iter()
        .map(|&j0| {
            let c = DiagonalChain::new(2, j0, 0.5)?;
            let a: Architecture = c.clone().into();
            restricted_unitary_with(&Executor::new(&a)?, &cphase_logical(&c, 0, 1)?, &Embedding::code(&a)?)
        })
        .collect::<Result<Vec<_>>>()?;
    checks.push(Check::new(s, "cphase j0 in {1,3}", "distance", phase_aligned_distance(&mats[0], &mats[1]), Comparison::AtMost(th.exact_infidelity)));

    let mut cnot = DMatrix::zeros(4, 4);
    for x in 0..4usize {
        cnot[(if x & 1 == 1 { x ^ 2 } else { x }, x)] = C64::new(1.0, 0.0);
    }
    let sched = cnot_logical(&chain, 0, 1)?;
    let r = process_fidelity_with(&exec, &sched, &cnot, &Embedding::logical(&arch, &[0, 1], &[0; 3])?)?;
    checks.push(Check::new(s, "cnot (0,1)", "infidelity", r.infidelity(), Comparison::AtMost(th.exact_infidelity)));
    checks.push(exact_count(s, "cnot (0,1)", "locals", r.cost.local_gate_count, 26));

    let pair = DiagonalChain::new(2, 1.0, 0.5)?;
    let bell = bell_amplitudes(&pair)?;
    let want = [FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2];
    let err = bell.iter().zip(want).map(|(a, w)| (a - w).norm()).fold(0.0, f64::max);
    checks.push(Check::new(s, "bell", "max_amplitude_error", err, Comparison::AtMost(th.bell_amplitude)));
    Ok(checks)
}

/// Logical amplitudes of `CNOT_L(0→1)·H_L(0)` on encoded `[0, 0]`, with the
/// global phase fixed so the `|00⟩` amplitude is real and non-negative.
pub fn bell_amplitudes(chain: &DiagonalChain) -> Result<Vec<C64>> {
    let arch: Architecture = chain.clone().into();
    let mut prog = hadamard_logical(chain, 0)?;
    prog.append(&cnot_logical(chain, 0, 1)?);
    let reg = encode(&[0, 0], &arch)?.apply(&prog, 0)?;
    let amps = reg.logical_amplitudes()?;
    let phase = if amps[0].norm() > 0.0 { amps[0].conj() / amps[0].norm() } else { C64::new(1.0, 0.0) };
    Ok(amps.iter().map(|a| a * phase).collect())
}

/// Exchange chain: invariance suites, oracle injection, swap and encoded
/// CPHASE synthesis.
pub fn exchange_suite(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let th = &cfg.thresholds;
    let s = "exchange";
    let mut checks = Vec::new();
    for &jz in &cfg.jzs {
        let arch: Architecture = ExchangeChain::new(2, 1.0, jz)?.into();
        for mut c in invariance_suites(&arch, cfg)? {
            c.case = format!("{} jz={jz}", c.case);
            checks.push(c);
        }
    }

    let chain = ExchangeChain::new(2, 1.0, 0.0)?;
    let arch: Architecture = chain.clone().into();
    let exec = Executor::new(&arch)?.with_mode(cfg.mode);
    let emb = Embedding::group_pair(&chain, 0, 1)?;
    let swap_target = embed_low(&iswap_target(), emb.dim());
    for &n in &cfg.oracle_ns {
        let sched = synth_swap(&chain, 0, 1, SynthesisParams::new(n)?, Level1::Ideal)?;
        let r = process_fidelity_with(&exec, &sched, &swap_target, &emb)?;
        checks.push(Check::new(s, format!("oracle swap N={n}"), "infidelity", r.infidelity(), Comparison::AtMost(th.exact_infidelity)));
        let xx = synth_xx_quarter(&chain, 0, 1, SynthesisParams::new(n)?, Level1::Ideal)?;
        let r = process_fidelity_with(&exec, &xx, &embed_low(&xx_quarter_target(), emb.dim()), &emb)?;
        checks.push(Check::new(s, format!("oracle xx quarter N={n}"), "infidelity", r.infidelity(), Comparison::AtMost(th.exact_infidelity)));
    }
    let r = process_fidelity_with(&exec, &synth_swap(&chain, 0, 1, SynthesisParams::new(64)?, Level1::Trotter)?, &swap_target, &emb)?;
    checks.push(Check::new(s, "swap N=64", "fidelity", r.fidelity, Comparison::AtLeast(th.swap_fidelity_n64)));

    for &jz in &cfg.jzs {
        let chain = ExchangeChain::new(2, 1.0, jz)?;
        checks.extend(exchange_cphase_checks(&chain, cfg)?);
    }
    Ok(checks)
}

/// Encoded CPHASE on bits (0, 1): fidelity, leakage budget, phase pattern
/// and exact time at `cfg.n_reps`, plus monotone improvement over N.
pub fn exchange_cphase_checks(chain: &ExchangeChain, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let th = &cfg.thresholds;
    let s = "exchange";
    let arch: Architecture = chain.clone().into();
    let exec = Executor::new(&arch)?.with_mode(cfg.mode);
    let emb = Embedding::code(&arch)?;
    let case = format!("cphase jz={} N={}", chain.jz(), cfg.n_reps);
    let sched = cphase_logical_exchange(chain, 0, 1, SynthesisParams::new(cfg.n_reps)?)?;
    let m = restricted_unitary_with(&exec, &sched, &emb)?;
    let fidelity = super::overlap_fidelity(&cphase_target(), &m).min(1.0);
    let leakage = super::leakage_of(&m);
    let cost = accounting(&sched);
    let mut checks = vec![
        Check::new(s, case.clone(), "fidelity", fidelity, Comparison::AtLeast(th.exchange_cphase_fidelity)),
        Check::new(s, case.clone(), "leakage_minus_infidelity", leakage - (1.0 - fidelity), Comparison::AtMost(th.leakage_slack)),
        Check::new(s, case.clone(), "time_error_pi_over_jxy", time_error(&cost, chain.jxy(), Rational64::new(5, 4)), Comparison::AtMost(0.0)),
        Check::new(s, case.clone(), "time_over_reference_bound", cost.total_evolve_time / (1.5 * PI / chain.jxy()), Comparison::AtMost(1.0)),
        exact_count(s, &case, "locals", cost.local_gate_count, 110 * cfg.n_reps + 8),
    ];
    let phase = if m[(0, 0)].norm() > 0.0 { m[(0, 0)].conj() / m[(0, 0)].norm() } else { C64::new(1.0, 0.0) };
    let pattern = (0..4)
        .map(|x| (m[(x, x)] * phase - cphase_target()[(x, x)]).norm())
        .fold(0.0, f64::max);
    checks.push(Check::new(s, case, "diagonal_phase_error", pattern, Comparison::AtMost(th.exchange_cphase_phase)));

    let fids = [8usize, 16, 32]
        .iter()
        .map(|&n| {
            let sched = cphase_logical_exchange(chain, 0, 1, SynthesisParams::new(n)?)?;
            Ok(super::overlap_fidelity(&cphase_target(), &restricted_unitary_with(&exec, &sched, &emb)?))
        })
        .collect::<Result<Vec<f64>>>()?;
    let monotone = fids.windows(2).all(|w| w[1] > w[0]);
    checks.push(Check::new(s, format!("cphase jz={} N=8,16,32", chain.jz()), "fidelity_increasing", monotone as u8 as f64, Comparison::AtLeast(1.0)));
    Ok(checks)
}

fn trotter_suite(cfg: &SuiteConfig) -> Result<Report> {
    let th = &cfg.thresholds;
    let s = "trotter";
    let base = ExchangeChain::new(2, 1.0, 0.0)?;
    let sweeps = trotter_sweep(&base, 0, 1, &cfg.ns, &cfg.jzs, cfg.mode)?;
    let mut checks = Vec::new();
    for sw in &sweeps {
        for row in &sw.rows {
            let case = format!("jz={} N={}", sw.jz, row.n_reps);
            checks.push(exact_count(s, &case, "locals", row.local_gate_count, 44 * row.n_reps));
            let sched = synth_swap(&base, 0, 1, SynthesisParams::new(row.n_reps)?, Level1::Trotter)?;
            checks.push(Check::new(s, case, "time_error_pi_over_jxy", time_error(&accounting(&sched), base.jxy(), Rational64::new(1, 2)), Comparison::AtMost(0.0)));
        }
        for (w, ratio) in sw.rows.windows(2).zip(&sw.ratios) {
            if w[1].n_reps == 2 * w[0].n_reps {
                let case = format!("jz={} N={}/{}", sw.jz, w[0].n_reps, w[1].n_reps);
                checks.push(Check::new(s, case, "error_ratio", *ratio, Comparison::Within(th.trotter_ratio[0], th.trotter_ratio[1])));
            }
        }
        checks.push(Check::new(s, format!("jz={}", sw.jz), "loglog_slope", sw.slope, Comparison::Within(th.trotter_slope[0], th.trotter_slope[1])));
        checks.push(Check::new(s, format!("jz={}", sw.jz), "error_monotone", sw.monotone as u8 as f64, Comparison::AtLeast(1.0)));
    }
    Ok(Report { checks, sweeps, costs: Vec::new() })
}

/// One row of the interaction-time comparison, in units of `1/j` of the
/// relevant coupling.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CostRow {
    pub architecture: String,
    pub gate: String,
    pub time: String,
    pub value: f64,
    /// `reference` for published figures, `compiled` for totals counted from
    /// this crate's schedules.
    pub provenance: String,
}

fn row(architecture: &str, gate: &str, time: Quantity, unit: &str, provenance: &str) -> CostRow {
    CostRow {
        architecture: architecture.into(),
        gate: gate.into(),
        time: format!("{time}/{unit}"),
        value: time.value(),
        provenance: provenance.into(),
    }
}

fn total(cost: &CostReport) -> Result<Quantity> {
    match cost.symbolic_time.as_deref() {
        Some([q]) => Ok(*q),
        _ => Err(Error::Invalid("expected a single exact time term".into())),
    }
}

/// Encoded two-bit gate times against switchable-coupling gates, with the
/// two comparisons as checks.
pub fn cost_comparison() -> Result<(Vec<CostRow>, Vec<Check>)> {
    let ising = DiagonalChain::new(2, 1.0, 1.0)?;
    let xy = ExchangeChain::new(2, 1.0, 0.0)?;
    let ising_cphase = total(&accounting(&cphase_logical(&ising, 0, 1)?))?;
    let xy_cphase = total(&accounting(&cphase_logical_exchange(&xy, 0, 1, SynthesisParams::new(1)?)?))?;
    let rows = vec![
        row("diagonal", "encoded cphase", Quantity::pi(1, 16), "j1", "reference"),
        row("diagonal", "encoded cphase", ising_cphase, "j1", "compiled"),
        row("diagonal", "switchable ising cphase", Quantity::pi(1, 4), "j1", "reference"),
        row("exchange", "encoded two-bit gate", Quantity::pi(3, 2), "jxy", "reference"),
        row("exchange", "encoded two-bit gate", xy_cphase, "jxy", "compiled"),
        row("exchange", "switchable xy two-bit gate", Quantity::pi(1, 4), "jxy", "reference"),
    ];
    let s = "costs";
    let checks = vec![
        Check::new(s, "diagonal encoded vs switchable", "time", rows[1].value, Comparison::Below(rows[2].value)),
        Check::new(s, "diagonal compiled vs reference", "time_difference", (rows[1].value - rows[0].value).abs(), Comparison::AtMost(0.0)),
        Check::new(s, "exchange compiled vs reference", "time", rows[4].value, Comparison::AtMost(rows[3].value)),
    ];
    Ok((rows, checks))
}
