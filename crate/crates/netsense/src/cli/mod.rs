//! Command-line front end.
//!
//! Subcommands: `gen`, `sweep`, `correlate`, `scaling`, `simulate`. Every
//! run resolves its configuration (config file < `NETSENSE_SEED` < flags),
//! writes the artifacts into `--out-dir`, and records a manifest with the
//! fully resolved parameters so outputs can be reproduced byte for byte.
//!
//! Exit codes: 0 success; 1 usage or config error; 2 stability or
//! divergence failure; 3 undefined statistic.

pub mod config;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use crate::analysis::{self, ScalingMode};
use crate::dynamics::{self, NodalDynamics};
use crate::error::{Error, Result};
use crate::netgen::{self, GraphKind, GraphSpec, WeightDist, WeightMode, WeightedGraph};
use crate::plot::{self, Series};
use crate::sensitivity::{self, FrequencySweep};
use crate::simulate::{self, Forcing, SimConfig};
use crate::spectral::{self, SpectralDecomposition};
use config::{
    resolve_seed, DynamicsConfig, FileConfig, GraphConfig, GridConfig, ScalingConfig,
    SimulateConfig,
};

#[derive(Parser)]
#[command(
    name = "netsense",
    version,
    about = "Frequency-domain sensitivity analysis of linearly coupled networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph; write its edge list and summary stats
    Gen(GenArgs),
    /// Sweep the mean and per-node frequency response of a network
    Sweep(SweepArgs),
    /// Correlate node degree with response magnitude across frequency
    Correlate(CorrelateArgs),
    /// Spectral-weight scaling across network sizes, with a class verdict
    Scaling(ScalingArgs),
    /// Integrate the forced network in time and cross-check the frequency domain
    Simulate(SimulateArgs),
}

#[derive(Args, Debug, Clone, Default)]
struct CommonArgs {
    /// JSON config file; flags override its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (default "out")
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Master seed (flag > NETSENSE_SEED > config > 0)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug, Clone, Default)]
struct GraphArgs {
    /// er | ba | powerlaw-config | ring-lattice | watts-strogatz |
    /// random-geometric | star | path | cycle | complete | file
    #[arg(long)]
    kind: Option<String>,
    /// Node count
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (er)
    #[arg(long)]
    p: Option<f64>,
    /// Edges per new node (ba)
    #[arg(long)]
    m: Option<usize>,
    /// Degree-distribution exponent (powerlaw-config)
    #[arg(long)]
    gamma: Option<f64>,
    /// Minimum degree (powerlaw-config, default 1)
    #[arg(long)]
    k_min: Option<usize>,
    /// Neighbors per side (ring-lattice, watts-strogatz)
    #[arg(long)]
    lattice_k: Option<usize>,
    /// Rewire probability (watts-strogatz)
    #[arg(long)]
    rewire: Option<f64>,
    /// Connection radius (random-geometric)
    #[arg(long)]
    radius: Option<f64>,
    /// Edge-list file (kind = file)
    #[arg(long)]
    path: Option<PathBuf>,
    /// Edge-weight distribution: constant | uniform
    #[arg(long)]
    weights: Option<String>,
    /// Weight handling for kind = file: from-file | constant
    #[arg(long)]
    weight_mode: Option<String>,
}

impl GraphArgs {
    fn to_config(&self) -> Result<GraphConfig> {
        let weight_dist = match self.weights.as_deref() {
            None => None,
            Some("constant") => Some(WeightDist::Constant),
            Some("uniform") => Some(WeightDist::Uniform),
            Some(other) => {
                return Err(Error::Config(format!(
                    "--weights must be constant or uniform (got {other:?})"
                )))
            }
        };
        let weight_mode = match self.weight_mode.as_deref() {
            None => None,
            Some("from-file") => Some(WeightMode::FromFile),
            Some("constant") => Some(WeightMode::Constant),
            Some(other) => {
                return Err(Error::Config(format!(
                    "--weight-mode must be from-file or constant (got {other:?})"
                )))
            }
        };
        Ok(GraphConfig {
            kind: self.kind.clone(),
            n: self.n,
            p: self.p,
            m: self.m,
            gamma: self.gamma,
            k_min: self.k_min,
            lattice_k: self.lattice_k,
            rewire: self.rewire,
            radius: self.radius,
            path: self.path.clone(),
            weight_dist,
            weight_mode,
        })
    }
}

#[derive(Args, Debug, Clone, Default)]
struct DynArgs {
    /// 1 | 2 | custom (default 2)
    #[arg(long)]
    order: Option<String>,
    /// Natural frequency (default sqrt(2))
    #[arg(long)]
    omega_n: Option<f64>,
    /// Damping ratio (default 0.05)
    #[arg(long)]
    zeta: Option<f64>,
    /// Input gain (default 0.37949)
    #[arg(long)]
    k: Option<f64>,
    /// Coefficients of g in ascending powers (order = custom)
    #[arg(long, value_delimiter = ',')]
    g_coeffs: Option<Vec<f64>>,
    /// Set k = (1 - margin)/lambda_1 of the generated network
    #[arg(long)]
    auto_gain_margin: Option<f64>,
}

impl DynArgs {
    fn to_config(&self) -> DynamicsConfig {
        DynamicsConfig {
            order: self.order.clone(),
            omega_n: self.omega_n,
            zeta: self.zeta,
            k: self.k,
            g_coeffs: self.g_coeffs.clone(),
            auto_gain_margin: self.auto_gain_margin,
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
struct GridArgs {
    /// Lowest frequency (default 1e-2 * omega_n)
    #[arg(long)]
    omega_min: Option<f64>,
    /// Highest frequency (default 1e2 * omega_n)
    #[arg(long)]
    omega_max: Option<f64>,
    /// Number of log-spaced points (default 400)
    #[arg(long)]
    points: Option<usize>,
}

impl GridArgs {
    fn to_config(&self) -> GridConfig {
        GridConfig {
            omega_min: self.omega_min,
            omega_max: self.omega_max,
            points: self.points,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    graph: GraphArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    dynamics: DynArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Also render a Bode plot (bode.svg)
    #[arg(long)]
    svg: bool,
    /// Include per-node magnitude/phase columns in the CSV
    #[arg(long)]
    per_node: bool,
    /// Write the eigendecomposition (decomposition.json)
    #[arg(long)]
    dump_spectrum: bool,
    /// Include eigenvectors in decomposition.json (large); implies --dump-spectrum
    #[arg(long)]
    dump_eigenvectors: bool,
}

#[derive(Args, Debug)]
struct CorrelateArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    dynamics: DynArgs,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args, Debug)]
struct ScalingArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    dynamics: DynArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Comma-separated network sizes (default 256,512,1024,2048)
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Independent trials per size (default 10)
    #[arg(long)]
    trials: Option<usize>,
    /// Regression mode: er (log(1 - w1)) or sf (log w1); defaults by family
    #[arg(long)]
    mode: Option<String>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    dynamics: DynArgs,
    /// Forcing frequency (default omega_n)
    #[arg(long)]
    forcing_omega: Option<f64>,
    /// Forcing amplitude (default 1)
    #[arg(long)]
    amplitude: Option<f64>,
    /// Integration step (default chosen from the periods)
    #[arg(long)]
    dt: Option<f64>,
    /// Horizon (default 20 forcing periods or the transient time)
    #[arg(long)]
    t_end: Option<f64>,
    /// Keep every n-th sample in the trajectory CSV (default 10)
    #[arg(long)]
    every: Option<usize>,
}

/// Entry point for the binary; returns the process exit code.
pub fn main_from(args: impl IntoIterator<Item = OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Correlate(args) => cmd_correlate(args),
        Command::Scaling(args) => cmd_scaling(args),
        Command::Simulate(args) => cmd_simulate(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unstable { .. }
        | Error::Divergence { .. }
        | Error::NearPole { .. }
        | Error::ResidualTooLarge { .. } => 2,
        Error::ConstantDegrees => 3,
        _ => 1,
    }
}

struct Resolved {
    file: FileConfig,
    out_dir: PathBuf,
    seed: u64,
}

fn resolve_common(common: &CommonArgs) -> Result<Resolved> {
    let file = match &common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let seed = resolve_seed(common.seed, file.seed)?;
    let out_dir = common
        .out_dir
        .clone()
        .or_else(|| file.out_dir.clone())
        .unwrap_or_else(|| PathBuf::from("out"));
    fs::create_dir_all(&out_dir)?;
    Ok(Resolved {
        file,
        out_dir,
        seed,
    })
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn write_manifest(
    out_dir: &Path,
    command: &str,
    seed: u64,
    resolved: serde_json::Value,
) -> Result<()> {
    let manifest = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "format": 1,
        "seed": seed,
        "config": resolved,
    });
    write_json(&out_dir.join("manifest.json"), &manifest)
}

fn degree_histogram(g: &WeightedGraph) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for &d in g.degree() {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

fn graph_stats(g: &WeightedGraph) -> serde_json::Value {
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "kappa": g.kappa(),
        "degree_histogram": degree_histogram(g),
    })
}

fn prepare_network(
    spec: &GraphSpec,
) -> Result<(WeightedGraph, netgen::InteractionMatrix, SpectralDecomposition)> {
    let graph = netgen::generate(spec)?;
    let a = netgen::interaction_matrix(&graph)?;
    let dec = spectral::decompose(&a)?;
    Ok((graph, a, dec))
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let r = resolve_common(&args.common)?;
    let graph_cfg = r.file.graph.clone().overlaid(args.graph.to_config()?);
    let spec = graph_cfg.resolve(r.seed)?;
    let graph = netgen::generate(&spec)?;

    netgen::save_edge_list(&graph, r.out_dir.join("graph.edges"))?;
    let stats = graph_stats(&graph);
    write_json(&r.out_dir.join("stats.json"), &stats)?;
    write_manifest(&r.out_dir, "gen", r.seed, json!({ "graph": spec }))?;
    println!("{stats}");
    Ok(())
}

/// Shared setup for the sweep-shaped commands: build the network, resolve
/// dynamics (auto-gain sees lambda_1), resolve the grid, run the sweep.
fn sweep_pipeline(
    file: &FileConfig,
    seed: u64,
    graph_args: &GraphArgs,
    dyn_args: &DynArgs,
    grid_args: &GridArgs,
) -> Result<(
    GraphSpec,
    WeightedGraph,
    NodalDynamics,
    SpectralDecomposition,
    FrequencySweep,
)> {
    let graph_cfg = file.graph.clone().overlaid(graph_args.to_config()?);
    let spec = graph_cfg.resolve(seed)?;
    let (graph, a, dec) = prepare_network(&spec)?;
    let dyn_cfg = file.dynamics.clone().overlaid(dyn_args.to_config());
    let dyn_ = dyn_cfg.resolve(Some(dec.lambda_max()))?;
    let grid_cfg = file.grid.clone().overlaid(grid_args.to_config());
    let grid = grid_cfg.resolve(dyn_.omega_n().unwrap_or(1.0))?;
    let sweep = sensitivity::sweep(&a, &dec, &dyn_, &grid)?;
    Ok((spec, graph, dyn_, dec, sweep))
}

fn sweep_manifest(
    spec: &GraphSpec,
    dyn_: &NodalDynamics,
    sweep: &FrequencySweep,
) -> serde_json::Value {
    json!({
        "graph": spec,
        "dynamics": dyn_,
        "grid": {
            "omega_min": sweep.omegas().first(),
            "omega_max": sweep.omegas().last(),
            "points": sweep.omegas().len(),
        },
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let r = resolve_common(&args.common)?;
    let (spec, _graph, dyn_, dec, sweep) =
        sweep_pipeline(&r.file, r.seed, &args.graph, &args.dynamics, &args.grid)?;

    let mut csv = Vec::new();
    let per_node = args.per_node || r.file.per_node.unwrap_or(false);
    sweep.write_csv(&mut csv, per_node)?;
    fs::write(r.out_dir.join("sweep.csv"), &csv)?;

    if args.dump_spectrum || args.dump_eigenvectors {
        write_json(
            &r.out_dir.join("decomposition.json"),
            &dec.export_json(args.dump_eigenvectors),
        )?;
    }

    if args.svg || r.file.svg.unwrap_or(false) {
        let mag_mean = sweep.mean_magnitude_db();
        let mag_first: Vec<f64> = sweep
            .first_mode()
            .iter()
            .map(|z| 20.0 * z.norm().log10())
            .collect();
        let mag_residue: Vec<f64> = sweep
            .residue_part()
            .iter()
            .map(|z| 20.0 * z.norm().log10())
            .collect();
        let phase_mean: Vec<f64> = sweep
            .mean_response()
            .iter()
            .map(|z| z.arg().to_degrees())
            .collect();
        let svg = plot::bode_svg(
            "mean response",
            sweep.omegas(),
            &[
                Series {
                    label: "mean",
                    color: "#111111",
                    y: &mag_mean,
                },
                Series {
                    label: "first mode",
                    color: "#1f77b4",
                    y: &mag_first,
                },
                Series {
                    label: "residue",
                    color: "#9467bd",
                    y: &mag_residue,
                },
            ],
            &[Series {
                label: "mean",
                color: "#111111",
                y: &phase_mean,
            }],
        );
        fs::write(r.out_dir.join("bode.svg"), svg)?;
    }

    write_manifest(
        &r.out_dir,
        "sweep",
        r.seed,
        sweep_manifest(&spec, &dyn_, &sweep),
    )?;
    let summary = json!({
        "lambda_max": dec.lambda_max(),
        "w1": dec.weights()[0],
        "residue": dec.residue(),
        "peak_count": analysis::count_peaks(&sweep),
        "skipped_frequencies": sweep.skipped().len(),
    });
    println!("{summary}");
    Ok(())
}

fn cmd_correlate(args: CorrelateArgs) -> Result<()> {
    let r = resolve_common(&args.common)?;
    let (spec, graph, dyn_, _dec, sweep) =
        sweep_pipeline(&r.file, r.seed, &args.graph, &args.dynamics, &args.grid)?;

    let curve = analysis::degree_correlation(&graph, &sweep)?;
    let crossover = analysis::find_crossover(&curve);

    let mut csv = Vec::new();
    curve.write_csv(&mut csv)?;
    fs::write(r.out_dir.join("correlation.csv"), &csv)?;
    let report = json!({
        "crossover": crossover,
        "omega_n": dyn_.omega_n(),
    });
    write_json(&r.out_dir.join("crossover.json"), &report)?;
    write_manifest(
        &r.out_dir,
        "correlate",
        r.seed,
        sweep_manifest(&spec, &dyn_, &sweep),
    )?;
    println!("{report}");
    Ok(())
}

fn cmd_scaling(args: ScalingArgs) -> Result<()> {
    let r = resolve_common(&args.common)?;
    let scaling_cfg = r.file.scaling.clone().overlaid(ScalingConfig {
        sizes: args.sizes.clone(),
        trials: args.trials,
        mode: args.mode.clone(),
    });
    let sizes = scaling_cfg
        .sizes
        .unwrap_or_else(|| vec![256, 512, 1024, 2048]);
    let trials = scaling_cfg.trials.unwrap_or(10);

    let mut graph_cfg = r.file.graph.clone().overlaid(args.graph.to_config()?);
    if graph_cfg.n.is_none() {
        graph_cfg.n = sizes.first().copied();
    }
    let template = graph_cfg.resolve(r.seed)?;

    // Heavy-tailed families regress log w1 by default. Vertex-transitive
    // families also default to sf: with constant weights their w1 is
    // exactly 1, which makes the er-mode transform log(1 - w1) degenerate.
    let mode = match scaling_cfg.mode.as_deref() {
        Some("er") => ScalingMode::Er,
        Some("sf") => ScalingMode::Sf,
        Some(other) => {
            return Err(Error::Config(format!(
                "--mode must be er or sf (got {other:?})"
            )))
        }
        None => match template.kind {
            GraphKind::Ba { .. }
            | GraphKind::PowerlawConfig { .. }
            | GraphKind::Complete
            | GraphKind::RingLattice { .. }
            | GraphKind::Cycle => ScalingMode::Sf,
            _ => ScalingMode::Er,
        },
    };

    let scaling = analysis::weight_scaling(&template, &sizes, trials, mode)?;

    // Classification sweep on a fresh sample at the largest size.
    let largest = *sizes.last().unwrap();
    let sweep_seed = netgen::derive_trial_seed(r.seed, (sizes.len() * trials) as u64);
    let sweep_spec = template.with_n(largest).with_seed(sweep_seed);
    let (_graph, a, dec) = prepare_network(&sweep_spec)?;
    let dyn_cfg = r.file.dynamics.clone().overlaid(args.dynamics.to_config());
    let dyn_ = dyn_cfg.resolve(Some(dec.lambda_max()))?;
    let grid_cfg = r.file.grid.clone().overlaid(args.grid.to_config());
    let grid = grid_cfg.resolve(dyn_.omega_n().unwrap_or(1.0))?;
    let sweep = sensitivity::sweep(&a, &dec, &dyn_, &grid)?;

    let verdict = analysis::classify(&scaling, &sweep);

    let mut csv = Vec::new();
    scaling.write_csv(&mut csv)?;
    fs::write(r.out_dir.join("scaling.csv"), &csv)?;
    write_json(
        &r.out_dir.join("scaling.json"),
        &serde_json::to_value(&scaling)?,
    )?;
    let verdict_json = serde_json::to_value(&verdict)?;
    write_json(&r.out_dir.join("verdict.json"), &verdict_json)?;
    write_manifest(
        &r.out_dir,
        "scaling",
        r.seed,
        json!({
            "family": template,
            "sizes": sizes,
            "trials": trials,
            "mode": mode,
            "dynamics": dyn_,
            "sweep_seed": sweep_seed,
        }),
    )?;
    println!("{verdict_json}");
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let r = resolve_common(&args.common)?;
    let graph_cfg = r.file.graph.clone().overlaid(args.graph.to_config()?);
    let spec = graph_cfg.resolve(r.seed)?;
    let (_graph, a, dec) = prepare_network(&spec)?;
    let dyn_cfg = r.file.dynamics.clone().overlaid(args.dynamics.to_config());
    let dyn_ = dyn_cfg.resolve(Some(dec.lambda_max()))?;

    // Gate before integrating; divergence detection is a backstop.
    let report = dynamics::is_stable(&dyn_, dec.lambda_max())?;
    if !report.stable {
        return Err(Error::Unstable {
            lambda: dec.lambda_max(),
            margin: report.margin,
        });
    }

    let sim_cfg_file = r.file.simulate.clone().overlaid(SimulateConfig {
        forcing_omega: args.forcing_omega,
        amplitude: args.amplitude,
        dt: args.dt,
        t_end: args.t_end,
        every: args.every,
    });
    let omega_n = dyn_.omega_n().ok_or_else(|| {
        Error::InvalidParameter("time-domain simulation needs canonical dynamics".into())
    })?;
    let zeta = match dyn_.descriptor() {
        Some(dynamics::Descriptor::SecondOrder { zeta, .. }) => zeta,
        _ => 1.0,
    };
    let forcing = Forcing {
        omega: sim_cfg_file.forcing_omega.unwrap_or(omega_n),
        amplitude: sim_cfg_file.amplitude.unwrap_or(1.0),
    };
    let mut cfg = SimConfig::auto(forcing, omega_n, zeta);
    if let Some(dt) = sim_cfg_file.dt {
        cfg.dt = dt;
    }
    if let Some(t_end) = sim_cfg_file.t_end {
        cfg.t_end = t_end;
    }

    let traj = simulate::simulate_forced(&a, &dyn_, &cfg)?;
    let fits = simulate::steady_state(&traj, forcing.omega)?;
    let reference = sensitivity::node_sensitivity(&a, &dyn_, forcing.omega)?;

    let mut rows = Vec::new();
    let mut max_amp_err: f64 = 0.0;
    let mut max_phase_err: f64 = 0.0;
    for (node, (fit, z)) in fits.iter().zip(reference.iter()).enumerate() {
        let amp_err_pct = 100.0 * (fit.amplitude_gain - z.norm()).abs() / z.norm();
        let mut phase_err = (fit.phase - z.arg()).to_degrees();
        phase_err = (phase_err + 180.0).rem_euclid(360.0) - 180.0;
        max_amp_err = max_amp_err.max(amp_err_pct);
        max_phase_err = max_phase_err.max(phase_err.abs());
        rows.push(json!({
            "node": node,
            "sim_gain": fit.amplitude_gain,
            "ref_gain": z.norm(),
            "amp_err_pct": amp_err_pct,
            "sim_phase_deg": fit.phase.to_degrees(),
            "ref_phase_deg": z.arg().to_degrees(),
            "phase_err_deg": phase_err.abs(),
            "steady": fit.steady,
        }));
    }

    let mut csv = Vec::new();
    traj.write_csv(&mut csv, sim_cfg_file.every.unwrap_or(10))?;
    fs::write(r.out_dir.join("trajectory.csv"), &csv)?;
    let crosscheck = json!({
        "forcing": { "omega": forcing.omega, "amplitude": forcing.amplitude },
        "dt": cfg.dt,
        "t_end": cfg.t_end,
        "max_amp_err_pct": max_amp_err,
        "max_phase_err_deg": max_phase_err,
        "nodes": rows,
    });
    write_json(&r.out_dir.join("crosscheck.json"), &crosscheck)?;
    write_manifest(
        &r.out_dir,
        "simulate",
        r.seed,
        json!({
            "graph": spec,
            "dynamics": dyn_,
            "sim": { "dt": cfg.dt, "t_end": cfg.t_end, "forcing": forcing },
        }),
    )?;
    println!(
        "{}",
        json!({
            "max_amp_err_pct": max_amp_err,
            "max_phase_err_deg": max_phase_err,
        })
    );
    Ok(())
}
