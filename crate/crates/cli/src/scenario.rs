//! Scenario documents: architecture, gate program, synthesis parameters.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use ifsim::compile_exchange::{self, ExchangeGate, Level1, SynthesisParams};
use ifsim::compile_ising::{self, IsingGate};
use ifsim::model::{Architecture, DiagonalChain, ExchangeChain};
use ifsim::schedule::{LocalGate, PulseSchedule, Quantity};
use ifsim::statevector::{gates, Axis};
use serde::Deserialize;

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ArchSpec {
    pub kind: String,
    pub n_logical: usize,
    #[serde(default)]
    pub j0: Option<Quantity>,
    #[serde(default)]
    pub j1: Option<Quantity>,
    #[serde(default)]
    pub jxy: Option<Quantity>,
    #[serde(default)]
    pub jz: Option<Quantity>,
}

impl ArchSpec {
    pub fn build(&self) -> Result<Architecture> {
        let v = |q: Option<Quantity>, default: f64| q.map_or(default, |q| q.value());
        Ok(match self.kind.as_str() {
            "diagonal" => {
                if self.jxy.is_some() || self.jz.is_some() {
                    bail!("architecture.jxy/jz apply to the exchange chain only");
                }
                DiagonalChain::new(self.n_logical, v(self.j0, 1.0), v(self.j1, 0.5))?.into()
            }
            "exchange" => {
                if self.j0.is_some() || self.j1.is_some() {
                    bail!("architecture.j0/j1 apply to the diagonal chain only");
                }
                ExchangeChain::new(self.n_logical, v(self.jxy, 1.0), v(self.jz, 0.0))?.into()
            }
            other => bail!("unknown architecture kind `{other}` (expected `diagonal` or `exchange`)"),
        })
    }
}

/// One logical gate request. Which fields are needed depends on `gate`.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GateRequest {
    pub gate: String,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub control: Option<usize>,
    pub target: Option<usize>,
    pub star: Option<usize>,
    pub dot: Option<usize>,
    pub angle: Option<Quantity>,
}

fn need<T: Copy>(v: Option<T>, field: &str, gate: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("gate `{gate}` needs `{field}`"))
}

impl GateRequest {
    pub fn compile(&self, arch: &Architecture, params: SynthesisParams, level1: Level1) -> Result<PulseSchedule> {
        let g = self.gate.as_str();
        let sched = match arch {
            Architecture::Diagonal(c) => {
                let req = match g {
                    "rz" => IsingGate::Rz { k: need(self.k, "k", g)?, angle: need(self.angle, "angle", g)? },
                    "h" | "hadamard" => IsingGate::Hadamard { k: need(self.k, "k", g)? },
                    "cz" | "cphase" => IsingGate::Cphase { k: need(self.k, "k", g)?, l: need(self.l, "l", g)? },
                    "cnot" => IsingGate::Cnot { control: need(self.control, "control", g)?, target: need(self.target, "target", g)? },
                    other => bail!("unknown gate `{other}` for the diagonal architecture (expected rz, hadamard, cphase, cnot)"),
                };
                compile_ising::compile(c, &req)?
            }
            Architecture::Exchange(c) => {
                let local = |gate: LocalGate| -> Result<ExchangeGate> { Ok(ExchangeGate::Local { k: need(self.k, "k", g)?, gate }) };
                let rot = |axis: Axis| -> Result<ExchangeGate> {
                    local(LocalGate::Matrix(gates::rotation(axis, need(self.angle, "angle", g)?.value())))
                };
                match g {
                    "swap" => compile_exchange::synth_swap(c, need(self.star, "star", g)?, need(self.dot, "dot", g)?, params, level1)?,
                    "xx_quarter" => {
                        compile_exchange::synth_xx_quarter(c, need(self.star, "star", g)?, need(self.dot, "dot", g)?, params, level1)?
                    }
                    _ => {
                        let req = match g {
                            "cz" | "cphase" => ExchangeGate::Cphase { k: need(self.k, "k", g)?, l: need(self.l, "l", g)? },
                            "h" | "hadamard" => local(LocalGate::H)?,
                            "x" => local(LocalGate::X)?,
                            "y" => local(LocalGate::Y)?,
                            "z" => local(LocalGate::Z)?,
                            "rx" => rot(Axis::X)?,
                            "ry" => rot(Axis::Y)?,
                            "rz" => rot(Axis::Z)?,
                            other => bail!(
                                "unknown gate `{other}` for the exchange architecture (expected swap, xx_quarter, cphase, h, x, y, z, rx, ry, rz)"
                            ),
                        };
                        compile_exchange::compile(c, &req, params)?
                    }
                }
            }
        };
        Ok(sched)
    }
}

fn default_n_reps() -> usize {
    32
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Synthesis {
    #[serde(default = "default_n_reps")]
    pub n_reps: usize,
    #[serde(default)]
    pub ideal_level1: bool,
}

impl Default for Synthesis {
    fn default() -> Self {
        Self { n_reps: default_n_reps(), ideal_level1: false }
    }
}

impl Synthesis {
    pub fn params(&self) -> Result<(SynthesisParams, Level1)> {
        let level1 = if self.ideal_level1 { Level1::Ideal } else { Level1::Trotter };
        Ok((SynthesisParams::new(self.n_reps).context("synthesis.n_reps")?, level1))
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub architecture: ArchSpec,
    #[serde(default)]
    pub program: Vec<GateRequest>,
    #[serde(default)]
    pub initial: Option<Vec<u8>>,
    #[serde(default)]
    pub synthesis: Synthesis,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub shots: usize,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub thresholds: BTreeMap<String, serde_json::Value>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    /// Parses JSON, reporting the failing field path and position.
    pub fn parse(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            anyhow!("config error at `{path}`: {}", e.into_inner())
        })
    }

    /// Concatenation of every program entry.
    pub fn compile_program(&self, arch: &Architecture) -> Result<PulseSchedule> {
        let (params, level1) = self.synthesis.params()?;
        let mut out = PulseSchedule::new("program");
        for (i, g) in self.program.iter().enumerate() {
            out.append(&g.compile(arch, params, level1).with_context(|| format!("program[{i}]"))?);
        }
        Ok(out)
    }
}
