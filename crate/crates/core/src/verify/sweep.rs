//! Trotter error sweeps of the swap synthesis.

use serde::Serialize;

use super::{embed_low, iswap_target, process_fidelity_with, Embedding};
use crate::compile_exchange::{synth_swap, Level1, SynthesisParams};
use crate::model::{Architecture, ExchangeChain};
use crate::par::{self, Mode};
use crate::schedule::Executor;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrotterSweepRow {
    pub jz: f64,
    pub n_reps: usize,
    pub error: f64,
    pub leakage: f64,
    pub total_evolve_time: f64,
    pub local_gate_count: usize,
}

/// Rows for one `jz`, sorted by `N`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrotterSweep {
    pub jz: f64,
    pub rows: Vec<TrotterSweepRow>,
    /// `ε(N_i)/ε(N_{i+1})` for consecutive rows.
    pub ratios: Vec<f64>,
    /// Least-squares slope of `log ε` against `log N`.
    pub slope: f64,
    pub monotone: bool,
}

/// Least-squares slope of `(ln x, ln y)`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Swap synthesis error on `(star, dot)` of a chain like `base` for each
/// `jz` and `N`. The error is `1 − F` against `e^{−i(XX+YY)π/4}` on the
/// group embedding. The `(jz, N)` grid runs in parallel under `mode`.
pub fn trotter_sweep(base: &ExchangeChain, star: usize, dot: usize, ns: &[usize], jzs: &[f64], mode: Mode) -> Result<Vec<TrotterSweep>> {
    if ns.is_empty() || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("N values must be non-empty and strictly increasing".into()));
    }
    let params: Vec<SynthesisParams> = ns.iter().map(|&n| SynthesisParams::new(n)).collect::<Result<_>>()?;
    let chains: Vec<ExchangeChain> =
        jzs.iter().map(|&jz| ExchangeChain::new(base.n_logical(), base.jxy(), jz)).collect::<Result<_>>()?;
    let execs: Vec<Executor> = chains
        .iter()
        .map(|c| Ok(Executor::new(&Architecture::from(c.clone()))?.with_mode(Mode::Sequential)))
        .collect::<Result<_>>()?;
    let grid: Vec<(usize, SynthesisParams)> = (0..chains.len()).flat_map(|i| params.iter().map(move |&p| (i, p))).collect();
    let rows = par::try_map(mode, &grid, |&(i, p)| -> Result<TrotterSweepRow> {
        let chain = &chains[i];
        let emb = Embedding::group_pair(chain, star, dot)?;
        let target = embed_low(&iswap_target(), emb.dim());
        let sched = synth_swap(chain, star, dot, p, Level1::Trotter)?;
        let r = process_fidelity_with(&execs[i], &sched, &target, &emb)?;
        Ok(TrotterSweepRow {
            jz: chain.jz(),
            n_reps: p.n_reps(),
            error: r.infidelity().max(0.0),
            leakage: r.leakage,
            total_evolve_time: r.cost.total_evolve_time,
            local_gate_count: r.cost.local_gate_count,
        })
    })?;
    Ok(rows
        .chunks(ns.len())
        .map(|chunk| {
            let rows = chunk.to_vec();
            let ratios = rows.windows(2).map(|w| w[0].error / w[1].error).collect();
            let xs: Vec<f64> = rows.iter().map(|r| r.n_reps as f64).collect();
            let ys: Vec<f64> = rows.iter().map(|r| r.error).collect();
            TrotterSweep {
                jz: rows[0].jz,
                slope: fit_slope(&xs, &ys),
                monotone: rows.windows(2).all(|w| w[1].error <= w[0].error),
                ratios,
                rows,
            }
        })
        .collect())
}
