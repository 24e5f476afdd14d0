//! `ifsim`: compile, simulate and verify gates on always-on coupled chains.
//!
//! Exit codes: 0 success, 1 a verification threshold failed, 2 usage or
//! configuration error.

mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use ifsim::encoding::encode;
use ifsim::model::ExchangeChain;
use ifsim::par::Mode;
use ifsim::schedule::{self, CostReport, Executor, Quantity};
use ifsim::verify::{checks_csv, checks_json, costs_csv, run_suite, sweeps_csv, trotter_sweep, Suite, SuiteConfig, TrotterSweepRow};
use serde::Serialize;

use output::{to_csv, to_json, write_atomic, Format};
use scenario::{ArchSpec, GateRequest, Scenario};

#[derive(Parser, Debug)]
#[command(name = "ifsim", version, about = "Gates on chains with always-on couplings")]
struct Cli {
    /// Scenario document (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the scenario seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compile one gate and write its pulse schedule to `<out>/<gate>.json`.
    Compile(Box<CompileArgs>),
    /// Run the scenario program from its encoded initial state.
    Simulate,
    /// Run a verification suite (diagonal, exchange, trotter, costs, all).
    Verify(VerifyArgs),
    /// Swap synthesis error against the repetition count.
    TrotterSweep(SweepArgs),
}

#[derive(Args, Debug)]
struct ArchArgs {
    /// `diagonal` or `exchange`.
    #[arg(long)]
    arch: Option<String>,
    #[arg(long)]
    n_logical: Option<usize>,
    #[arg(long)]
    j0: Option<Quantity>,
    #[arg(long)]
    j1: Option<Quantity>,
    #[arg(long)]
    jxy: Option<Quantity>,
    #[arg(long)]
    jz: Option<Quantity>,
}

impl ArchArgs {
    fn apply(&self, mut arch: ArchSpec) -> ArchSpec {
        if let Some(kind) = &self.arch {
            if *kind != arch.kind {
                arch = ArchSpec { kind: kind.clone(), n_logical: arch.n_logical, j0: None, j1: None, jxy: None, jz: None };
            }
        }
        arch.n_logical = self.n_logical.unwrap_or(arch.n_logical);
        arch.j0 = self.j0.or(arch.j0);
        arch.j1 = self.j1.or(arch.j1);
        arch.jxy = self.jxy.or(arch.jxy);
        arch.jz = self.jz.or(arch.jz);
        arch
    }
}

#[derive(Args, Debug)]
struct CompileArgs {
    /// Gate name, e.g. `hadamard`, `cnot`, `swap`, `cphase`.
    gate: String,
    #[command(flatten)]
    arch: ArchArgs,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    control: Option<usize>,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long)]
    star: Option<usize>,
    #[arg(long)]
    dot: Option<usize>,
    /// Rotation angle, e.g. `pi/8`.
    #[arg(long)]
    angle: Option<Quantity>,
    /// Repetitions `N` of the exchange synthesis.
    #[arg(long)]
    n_reps: Option<usize>,
    /// Use exact XX exponentials for the inner blocks.
    #[arg(long)]
    ideal: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    /// Trotter sweep repetition counts.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    jz: Option<Vec<f64>>,
    /// Repetitions for the encoded exchange gate.
    #[arg(long)]
    n_reps: Option<usize>,
    /// Threshold override `key=value` (value is JSON); repeatable.
    #[arg(long = "threshold", value_name = "KEY=VALUE")]
    thresholds: Vec<String>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "8,16,32,64")]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0,0.5,1")]
    jz: Vec<f64>,
    #[arg(long, default_value = "1.0")]
    jxy: Quantity,
    #[arg(long)]
    sequential: bool,
}

enum Outcome {
    Ok,
    ThresholdFailure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ThresholdFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let scenario = cli.config.as_deref().map(Scenario::load).transpose()?;
    match &cli.command {
        Command::Compile(args) => compile(cli, scenario.as_ref(), args),
        Command::Simulate => {
            let Some(scenario) = scenario else { bail!("simulate needs --config") };
            simulate(cli, &scenario)
        }
        Command::Verify(args) => verify(cli, scenario.as_ref(), args),
        Command::TrotterSweep(args) => sweep(cli, args),
    }
}

fn out_dir(cli: &Cli, scenario: Option<&Scenario>) -> PathBuf {
    cli.out.clone().or_else(|| scenario.and_then(|s| s.output.clone())).unwrap_or_else(|| PathBuf::from("."))
}

fn mode(sequential: bool) -> Mode {
    if sequential {
        Mode::Sequential
    } else {
        Mode::Parallel
    }
}

fn print_cost(format: Format, cost: &CostReport) -> Result<()> {
    match format {
        Format::Json => print!("{}", to_json(cost)?),
        Format::Csv => print!("{}", to_csv(std::slice::from_ref(cost))?),
    }
    Ok(())
}

fn compile(cli: &Cli, scenario: Option<&Scenario>, args: &CompileArgs) -> Result<Outcome> {
    let base = scenario.map(|s| s.architecture.clone()).unwrap_or(ArchSpec {
        kind: "diagonal".into(),
        n_logical: 2,
        j0: None,
        j1: None,
        jxy: None,
        jz: None,
    });
    let arch = args.arch.apply(base).build()?;
    let mut synthesis = scenario.map(|s| s.synthesis.clone()).unwrap_or_default();
    synthesis.n_reps = args.n_reps.unwrap_or(synthesis.n_reps);
    synthesis.ideal_level1 |= args.ideal;
    let (params, level1) = synthesis.params()?;
    let req = GateRequest {
        gate: args.gate.clone(),
        k: args.k,
        l: args.l,
        control: args.control,
        target: args.target,
        star: args.star,
        dot: args.dot,
        angle: args.angle,
    };
    let sched = req.compile(&arch, params, level1)?;
    let path = out_dir(cli, scenario).join(format!("{}.json", args.gate));
    write_atomic(&path, &schedule::serialize(&sched))?;
    print_cost(cli.format, &sched.accounting())?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct AmplitudeRow {
    /// Logical bits, bit 0 first.
    outcome: String,
    re: f64,
    im: f64,
    probability: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
}

#[derive(Serialize)]
struct SimulationReport {
    architecture: &'static str,
    n_logical: usize,
    initial: Vec<u8>,
    seed: u64,
    shots: usize,
    leakage: f64,
    cost: CostReport,
    amplitudes: Vec<AmplitudeRow>,
}

fn simulate(cli: &Cli, scenario: &Scenario) -> Result<Outcome> {
    let arch = scenario.architecture.build()?;
    let width = arch.n_logical();
    let initial = scenario.initial.clone().unwrap_or_else(|| vec![0; width]);
    let seed = cli.seed.unwrap_or(scenario.seed);
    let program = scenario.compile_program(&arch)?;
    let exec = Executor::new(&arch)?;
    let reg = encode(&initial, &arch).context("initial")?.apply_with(&exec, &program, seed)?;
    let amps = reg.logical_amplitudes()?;
    // Fix the global phase so the first non-negligible amplitude is real and positive.
    let phase = amps
        .iter()
        .find(|a| a.norm() > 1e-6)
        .map_or(ifsim::C64::new(1.0, 0.0), |a| a.conj() / a.norm());
    let counts = (scenario.shots > 0).then(|| reg.sample_counts(scenario.shots, seed)).transpose()?;
    let rows = amps
        .iter()
        .enumerate()
        .map(|(x, a)| {
            let a = a * phase;
            AmplitudeRow {
                outcome: (0..width).map(|k| if x >> k & 1 == 1 { '1' } else { '0' }).collect(),
                re: a.re,
                im: a.im,
                probability: a.norm_sqr(),
                count: counts.as_ref().map(|c| c[x]),
            }
        })
        .collect();
    let report = SimulationReport {
        architecture: arch.kind(),
        n_logical: width,
        initial,
        seed,
        shots: scenario.shots,
        leakage: reg.leakage()?,
        cost: program.accounting(),
        amplitudes: rows,
    };
    let text = match cli.format {
        Format::Json => to_json(&report)?,
        Format::Csv => to_csv(&report.amplitudes)?,
    };
    print!("{text}");
    if cli.out.is_some() || scenario.output.is_some() {
        write_atomic(&out_dir(cli, Some(scenario)).join(format!("simulate.{}", cli.format.ext())), &text)?;
    }
    Ok(Outcome::Ok)
}

fn verify(cli: &Cli, scenario: Option<&Scenario>, args: &VerifyArgs) -> Result<Outcome> {
    let suite: Suite = args.suite.parse()?;
    let mut cfg = SuiteConfig { mode: mode(args.sequential), ..SuiteConfig::default() };
    if let Some(s) = scenario {
        cfg.n_reps = s.synthesis.n_reps;
        for (key, value) in &s.thresholds {
            cfg.thresholds.set(key, &value.to_string()).context("config thresholds")?;
        }
    }
    for t in &args.thresholds {
        let Some((key, value)) = t.split_once('=') else { bail!("--threshold expects KEY=VALUE, got `{t}`") };
        cfg.thresholds.set(key.trim(), value.trim())?;
    }
    if let Some(n) = &args.n {
        cfg.ns = n.clone();
    }
    if let Some(jz) = &args.jz {
        cfg.jzs = jz.clone();
    }
    cfg.n_reps = args.n_reps.unwrap_or(cfg.n_reps);

    let report = run_suite(suite, &cfg)?;
    for c in &report.checks {
        println!("{c}");
    }
    let dir = out_dir(cli, scenario);
    match cli.format {
        Format::Csv => {
            write_atomic(&dir.join("checks.csv"), &checks_csv(&report.checks)?)?;
            if !report.sweeps.is_empty() {
                write_atomic(&dir.join("sweeps.csv"), &sweeps_csv(&report.sweeps)?)?;
            }
            if !report.costs.is_empty() {
                print_costs(&report.costs)?;
                write_atomic(&dir.join("costs.csv"), &costs_csv(&report.costs)?)?;
            }
        }
        Format::Json => {
            write_atomic(&dir.join("checks.json"), &checks_json(&report.checks)?)?;
            write_atomic(&dir.join("report.json"), &to_json(&report)?)?;
            if !report.costs.is_empty() {
                print_costs(&report.costs)?;
            }
        }
    }
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    println!("{} checks, {failed} failed", report.checks.len());
    Ok(if failed == 0 { Outcome::Ok } else { Outcome::ThresholdFailure })
}

fn print_costs(rows: &[ifsim::verify::CostRow]) -> Result<()> {
    println!("{:<10} {:<28} {:<14} {:>10}  source", "arch", "gate", "time", "value");
    for r in rows {
        println!("{:<10} {:<28} {:<14} {:>10.6}  {}", r.architecture, r.gate, r.time, r.value, r.provenance);
    }
    Ok(())
}

fn sweep(cli: &Cli, args: &SweepArgs) -> Result<Outcome> {
    let base = ExchangeChain::new(2, args.jxy.value(), 0.0)?;
    let sweeps = trotter_sweep(&base, 0, 1, &args.n, &args.jz, mode(args.sequential))?;
    let rows: Vec<TrotterSweepRow> = sweeps.iter().flat_map(|s| s.rows.iter().cloned()).collect();
    let text = match cli.format {
        Format::Csv => sweeps_csv(&sweeps)?,
        Format::Json => to_json(&sweeps)?,
    };
    println!("{:>5} {:>5} {:>12} {:>12} {:>10} {:>7}", "jz", "N", "error", "leakage", "time", "locals");
    for r in &rows {
        println!(
            "{:>5} {:>5} {:>12.4e} {:>12.4e} {:>10.6} {:>7}",
            r.jz, r.n_reps, r.error, r.leakage, r.total_evolve_time, r.local_gate_count
        );
    }
    for s in &sweeps {
        println!("jz={}: slope {:.3}, monotone {}", s.jz, s.slope, s.monotone);
    }
    write_atomic(&out_dir(cli, None).join(format!("trotter.{}", cli.format.ext())), &text)?;
    Ok(Outcome::Ok)
}
