//! Argument parsing and the subcommands of `lens`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lenscluster_core::analytic::{
    build_double_bubble, build_lens, density_at_infinity, energy_in_region, liquid_drop_min, radial_exterior_graph,
    AnalyticCluster,
};
use lenscluster_core::cluster2d::{
    discretize_bubble, discretize_lens, validate_cluster, volume_vector, weighted_energy, PolyCluster,
};
use lenscluster_core::math::unit_ball_measure;
use lenscluster_core::minimize::{jitter, junction_angles, minimize, MinimizeConfig};
use lenscluster_core::symmetrize::{
    cluster_energy, interface_measure, projection_measure, symmetric_energy_identity, symmetrize_cluster,
};
use lenscluster_core::{solve_junction_angles, Region, WeightSystem};
use serde::Serialize;
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::formats::{
    emit, parse_region, read_cluster, read_json, read_weights, to_json, ClusterJson, Columns, ColumnsJson,
};
use crate::render::cluster_svg;
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "lens", version, about = "Weighted lens clusters, double bubbles and their numerical checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct an analytic object, optionally as a polygonal cluster.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Weighted energy of an analytic lens or bubble, or of a cluster file.
    Energy(EnergyArgs),
    /// Steiner-symmetrize a column set or column cluster and report the inequalities.
    Symmetrize(SymmetrizeArgs),
    /// Volume-constrained descent on a polygonal cluster.
    Minimize(MinimizeArgs),
    /// Junction angles from the weights, or measured on a cluster.
    Angles(AnglesArgs),
    /// Energy density at infinity of a lens.
    Density(DensityArgs),
    /// Radially symmetric exterior minimal graph and its asymptotic fit.
    RadialGraph(RadialArgs),
    /// Run the acceptance suite and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also draw the (polygonal) cluster as SVG.
    #[arg(long)]
    pub render: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Discretization {
    /// Emit a polygonal cluster with at most this edge length.
    #[arg(long)]
    pub h: Option<f64>,
    /// Truncation radius of the polygonal cluster.
    #[arg(long, default_value_t = 2.0)]
    pub r_trunc: f64,
    /// Uniform vertex jitter amplitude applied to the polygon.
    #[arg(long)]
    pub jitter: Option<f64>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum BuildCommand {
    Lens {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 1.0)]
        volume: f64,
        #[command(flatten)]
        poly: Discretization,
        #[command(flatten)]
        output: Output,
    },
    Bubble {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        m: f64,
        #[command(flatten)]
        poly: Discretization,
        #[command(flatten)]
        output: Output,
    },
    Drop {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        volume: f64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
pub struct EnergyArgs {
    #[arg(long)]
    pub weights: PathBuf,
    /// Polygonal cluster file; without it the analytic lens (or bubble with --m) is used.
    #[arg(long)]
    pub cluster: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 1.0)]
    pub volume: f64,
    #[arg(long)]
    pub m: Option<f64>,
    /// ball:R, cyl:R or all.
    #[arg(long, value_parser = parse_region)]
    pub region: Region,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SymmetrizeArgs {
    /// Column set or column cluster file.
    #[arg(long)]
    pub cluster: PathBuf,
    /// Needed for cluster energies and the symmetric identity.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    #[arg(long, value_parser = parse_region, default_value = "all")]
    pub region: Region,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MinimizeArgs {
    #[arg(long)]
    pub cluster: PathBuf,
    #[arg(long)]
    pub weights: PathBuf,
    /// MinimizeConfig JSON; missing fields take their defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Overrides the config seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Jitter the input by this amplitude (seeded) before descending.
    #[arg(long)]
    pub jitter: Option<f64>,
    /// Energy trace as CSV (iter, energy, volume, max_grad).
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Also write the final cluster alone, in the cluster file format.
    #[arg(long)]
    pub final_cluster: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct AnglesArgs {
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Measure the junction angles of this cluster instead.
    #[arg(long)]
    pub cluster: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[arg(long)]
    pub weights: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 1.0)]
    pub volume: f64,
    /// Comma-separated radii, increasing.
    #[arg(long, value_delimiter = ',', default_value = "4,8,16,32,64")]
    pub schedule: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RadialArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub flux: f64,
    #[arg(long, default_value_t = 2.0)]
    pub r0: f64,
    #[arg(long, default_value_t = 200.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 400)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run a single criterion.
    #[arg(long)]
    pub only: Option<u8>,
    /// Write the full results as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

pub fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Build(b) => build(b),
        Command::Energy(a) => energy(a),
        Command::Symmetrize(a) => symmetrize(a),
        Command::Minimize(a) => run_minimize(a),
        Command::Angles(a) => angles(a),
        Command::Density(a) => density(a),
        Command::RadialGraph(a) => radial(a),
        Command::Verify(a) => run_verify(a),
    }
}

fn write_json<T: Serialize>(out: Option<&Path>, value: &T) -> CliResult<()> {
    emit(out, &to_json(value))
}

fn render(path: Option<&Path>, pc: &PolyCluster) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, cluster_svg(pc)).map_err(|e| CliError::io(p, e)),
        None => Ok(()),
    }
}

fn finish_poly(pc: PolyCluster, poly: &Discretization) -> PolyCluster {
    match poly.jitter {
        Some(a) => jitter(&pc, a, poly.seed),
        None => pc,
    }
}

fn build(cmd: BuildCommand) -> CliResult<()> {
    match cmd {
        BuildCommand::Lens { weights, dim, volume, poly, output } => {
            let w = read_weights(&weights)?;
            let lens = build_lens(&w, dim, volume)?;
            let drawing = if poly.h.is_some() || output.render.is_some() {
                if dim != 2 {
                    return Err(CliError::Usage("polygonal output needs --dim 2".into()));
                }
                let pc = discretize_lens(&lens, poly.h.unwrap_or(0.01), poly.r_trunc)?;
                Some(finish_poly(pc, &poly))
            } else {
                None
            };
            if let Some(pc) = &drawing {
                render(output.render.as_deref(), pc)?;
            }
            match (poly.h, &drawing) {
                (Some(_), Some(pc)) => write_json(output.out.as_deref(), &ClusterJson::from(pc)),
                _ => write_json(output.out.as_deref(), &lens),
            }
        }
        BuildCommand::Bubble { weights, m, poly, output } => {
            let w = read_weights(&weights)?;
            let bubble = build_double_bubble(&w, m)?;
            let drawing = if poly.h.is_some() || output.render.is_some() {
                let pc = discretize_bubble(&bubble, poly.h.unwrap_or(0.01), poly.r_trunc)?;
                Some(finish_poly(pc, &poly))
            } else {
                None
            };
            if let Some(pc) = &drawing {
                render(output.render.as_deref(), pc)?;
            }
            match (poly.h, &drawing) {
                (Some(_), Some(pc)) => write_json(output.out.as_deref(), &ClusterJson::from(pc)),
                _ => write_json(output.out.as_deref(), &bubble),
            }
        }
        BuildCommand::Drop { beta, volume, dim, output } => {
            let drop = liquid_drop_min(beta, volume, dim)?;
            if output.render.is_some() {
                return Err(CliError::Usage("drops are not rendered; build the reflected lens instead".into()));
            }
            write_json(output.out.as_deref(), &drop)
        }
    }
}

fn energy(a: EnergyArgs) -> CliResult<()> {
    let w = read_weights(&a.weights)?;
    if let Some(path) = &a.cluster {
        let pc = read_cluster(path)?;
        let report = weighted_energy(&pc, &w, &a.region)?;
        let diagnostics = validate_cluster(&pc);
        let volumes = volume_vector(&pc).map(|v| v.is_finite().then_some(v));
        return write_json(a.out.as_deref(), &json!({ "energy": report, "volumes": volumes, "diagnostics": diagnostics }));
    }
    let report = match a.m {
        Some(m) => {
            if a.dim != 2 {
                return Err(CliError::Usage("double bubbles are planar; use --dim 2".into()));
            }
            let b = build_double_bubble(&w, m)?;
            energy_in_region(&b as &dyn AnalyticCluster, &a.region)?
        }
        None => energy_in_region(&build_lens(&w, a.dim, a.volume)?, &a.region)?,
    };
    write_json(a.out.as_deref(), &json!({ "energy": report }))
}

fn symmetrize(a: SymmetrizeArgs) -> CliResult<()> {
    let columns = read_json::<ColumnsJson>(&a.cluster)?.into_columns()?;
    let weights = a.weights.as_deref().map(read_weights).transpose()?;
    match columns {
        Columns::Set(e) => {
            let s = e.steiner_symmetral();
            let (p, ps) = (e.column_perimeter(&a.region), s.column_perimeter(&a.region));
            write_json(
                a.out.as_deref(),
                &json!({
                    "volume": e.volume(),
                    "volume_symmetral": s.volume(),
                    "perimeter": p,
                    "perimeter_symmetral": ps,
                    "steiner_inequality_holds": ps <= p,
                    "symmetral": ColumnsJson::from_set(&s),
                }),
            )
        }
        Columns::Cluster(x) => {
            let s = symmetrize_cluster(&x);
            let graph = interface_measure(&x, &a.region);
            let base = projection_measure(&x, &a.region);
            let mut report = json!({
                "volume": x.set1().volume(),
                "volume_symmetral": s.set1().volume(),
                "perimeter": x.set1().column_perimeter(&a.region),
                "perimeter_symmetral": s.set1().column_perimeter(&a.region),
                "interface_measure": graph,
                "projection_measure": base,
                "projection_inequality_holds": graph >= base,
                "symmetral": ColumnsJson::from_cluster(&s),
            });
            if let Some(w) = weights {
                let rho = match a.region {
                    Region::Cylinder(r) => r,
                    _ => return Err(CliError::Usage("cluster energies need --region cyl:R".into())),
                };
                report["energy"] = json!(cluster_energy(&x, &w, rho));
                report["energy_symmetral"] = json!(cluster_energy(&s, &w, rho));
                if w.c12() == w.c13() {
                    report["identity"] = json!(symmetric_energy_identity(&s, &w, rho)?);
                }
            }
            write_json(a.out.as_deref(), &report)
        }
    }
}

fn run_minimize(a: MinimizeArgs) -> CliResult<()> {
    let w = read_weights(&a.weights)?;
    let mut cfg = match &a.config {
        Some(p) => read_json::<MinimizeConfig>(p)?,
        None => MinimizeConfig::default(),
    };
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    cfg.validate()?;
    let mut pc = read_cluster(&a.cluster)?;
    let diagnostics = validate_cluster(&pc);
    if !diagnostics.is_empty() {
        return Err(CliError::Cluster(diagnostics));
    }
    if let Some(amp) = a.jitter {
        pc = jitter(&pc, amp, cfg.seed);
    }
    let (out, report) = minimize(&pc, &w, &cfg)?;
    if let Some(p) = &a.trace {
        let mut csv = String::from("iter,energy,volume,max_grad\n");
        for r in &report.trace {
            csv.push_str(&format!("{},{},{},{}\n", r.iter, r.energy, r.volume, r.max_grad));
        }
        std::fs::write(p, csv).map_err(|e| CliError::io(p, e))?;
    }
    render(a.output.render.as_deref(), &out)?;
    if let Some(p) = &a.final_cluster {
        write_json(Some(p), &ClusterJson::from(&out))?;
    }
    write_json(
        a.output.out.as_deref(),
        &json!({ "config": cfg, "report": report, "cluster": ClusterJson::from(&out) }),
    )
}

fn angles(a: AnglesArgs) -> CliResult<()> {
    let deg = |t: [f64; 3]| t.map(f64::to_degrees);
    match (&a.cluster, &a.weights) {
        (Some(path), _) => {
            let pc = read_cluster(path)?;
            let j = junction_angles(&pc)?;
            write_json(a.out.as_deref(), &json!({ "junctions": j, "degrees": [deg(j[0]), deg(j[1])] }))
        }
        (None, Some(path)) => {
            let t = solve_junction_angles(&read_weights(path)?);
            write_json(a.out.as_deref(), &json!({ "angles": t, "degrees": deg(t.as_array()) }))
        }
        (None, None) => Err(CliError::Usage("angles needs --weights or --cluster".into())),
    }
}

fn density(a: DensityArgs) -> CliResult<()> {
    let w: WeightSystem = read_weights(&a.weights)?;
    let lens = build_lens(&w, a.dim, a.volume)?;
    let d = density_at_infinity(&lens, &a.schedule)?;
    let expected = w.c23() * unit_ball_measure(a.dim - 1);
    write_json(a.out.as_deref(), &json!({ "density": d, "expected": expected, "error": d.value - expected }))
}

fn radial(a: RadialArgs) -> CliResult<()> {
    let s = radial_exterior_graph(a.dim, a.flux, a.r0, a.rmax, a.steps)?;
    write_json(a.out.as_deref(), &s)
}

fn run_verify(a: VerifyArgs) -> CliResult<()> {
    let results = match a.only {
        Some(id) if (1..=10).contains(&id) => vec![verify::run(id)],
        Some(id) => return Err(CliError::Usage(format!("no criterion {id}; expected 1..=10"))),
        None => verify::run_all(),
    };
    for c in &results {
        println!("{}", verify::summary_line(c));
        for k in &c.checks {
            println!("      {} {}: {}", if k.passed { "ok  " } else { "FAIL" }, k.name, k.detail);
        }
    }
    let passed = results.iter().filter(|c| c.passed).count();
    println!("{passed}/{} criteria passed", results.len());
    if let Some(p) = &a.out {
        write_json(Some(p), &results)?;
    }
    Ok(())
}
