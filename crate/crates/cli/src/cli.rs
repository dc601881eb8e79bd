//! Command-line surface.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steiner_cover::conjecture3d::{run_conjecture_sets, ConjectureConfig};
use steiner_cover::cover_area::union_measure_mc_sharded;
use steiner_cover::steiner::{steiner_point_directional_sharded, DEFAULT_PROJECTION_NODES};
use steiner_cover::{
    build_cover, convex_hull_2d, excess_area_closed_form, optimal_omega_analytic, optimal_omega_numeric,
    run_conjecture_suite, run_conjecture_trial, steiner_center_angles, steiner_center_projection,
    union_area_exact, verify_coverage, Dim, Error, NMConfig, PointSet,
};

use crate::io::{parse_omega, read_input, InputFormat};
use crate::report::{self, HullReport, Payload, PlotReport, RunReport};
use crate::svg::render_svg;
use crate::CliError;

pub const THREADS_ENV: &str = "STEINER_COVER_THREADS";

#[derive(Debug, Parser)]
#[command(name = "steiner-cover", version, about = "Anchored disc covers, union areas and Steiner centers")]
pub struct Cli {
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convex hull vertices and exterior angles.
    Hull {
        input: PathBuf,
    },
    /// Steiner center of the hull.
    Steiner {
        input: PathBuf,
        /// Defaults to `angles` in 2D and `directional` in 3D.
        #[arg(long, value_enum)]
        method: Option<SteinerArg>,
        #[arg(long, default_value_t = DEFAULT_PROJECTION_NODES)]
        nodes: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Area (volume) of the union of anchored discs (balls).
    Area {
        input: PathBuf,
        #[command(flatten)]
        omega: OmegaArg,
        /// Defaults to `exact` in 2D and `mc` in 3D.
        #[arg(long, value_enum)]
        method: Option<AreaArg>,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the hull and check every sample is covered.
    CoverCheck {
        input: PathBuf,
        #[command(flatten)]
        omega: OmegaArg,
        #[arg(short = 'n', default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Anchor minimizing the union area.
    Optimize {
        input: PathBuf,
        /// Nelder–Mead instead of the closed form (always on in 3D).
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        tol: Option<f64>,
        /// Monte Carlo samples per evaluation, 3D only.
        #[arg(long, default_value_t = 100_000)]
        mc_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the 3D volume minimizer with the Steiner point.
    Conjecture3d {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Draw this many uniform points in the unit cube per trial.
        #[arg(long, value_name = "N_POINTS")]
        random: Option<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 1_000_000)]
        mc_samples: usize,
        #[arg(long, default_value_t = 1_000_000)]
        dir_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw the cover as SVG.
    Plot {
        input: PathBuf,
        #[command(flatten)]
        omega: OmegaArg,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OmegaArg {
    /// Anchor as `X,Y` or `X,Y,Z`.
    #[arg(long = "omega", allow_hyphen_values = true, value_name = "X,Y[,Z]")]
    pub omega: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SteinerArg {
    Angles,
    Projection,
    Directional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AreaArg {
    Exact,
    ClosedForm,
    Mc,
}

/// Shard count from the environment; unset means 1.
pub fn threads_from_env() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Parse(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// Outcome of a command: the report and whether it counts as success.
struct Outcome {
    report: RunReport,
    ok: bool,
}

fn done(command: &str, input: &[u8], payload: Payload) -> Result<Outcome, CliError> {
    Ok(Outcome { report: RunReport::new(command, input, payload), ok: true })
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let threads = threads_from_env()?;
    let fmt = cli.format;
    match cli.command {
        Command::Hull { input } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let hull = convex_hull_2d(&ps)?;
            done("hull", &raw, Payload::Hull(HullReport::from(&hull)))
        }
        Command::Steiner { input, method, nodes, samples, seed } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let method = method.unwrap_or(match ps.dim() {
                Dim::Two => SteinerArg::Angles,
                Dim::Three => SteinerArg::Directional,
            });
            let res = match method {
                SteinerArg::Angles => steiner_center_angles(&convex_hull_2d(&ps)?),
                SteinerArg::Projection => steiner_center_projection(&ps, nodes)?,
                SteinerArg::Directional => steiner_point_directional_sharded(&ps, samples, seed, threads)?,
            };
            done("steiner", &raw, Payload::SteinerResult(res))
        }
        Command::Area { input, omega, method, samples, seed } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let cover = build_cover(&ps, &parse_omega(&omega.omega)?)?;
            let method = method.unwrap_or(match ps.dim() {
                Dim::Two => AreaArg::Exact,
                Dim::Three => AreaArg::Mc,
            });
            let rep = match method {
                AreaArg::Exact => union_area_exact(&cover)?,
                AreaArg::ClosedForm => excess_area_closed_form(&cover).map_err(|e| match e {
                    Error::Precondition(msg) => CliError::Domain(msg.replace("use the exact method", "use --method exact")),
                    other => other.into(),
                })?,
                AreaArg::Mc => union_measure_mc_sharded(&cover, samples, seed, threads)?,
            };
            done("area", &raw, Payload::AreaReport(rep))
        }
        Command::CoverCheck { input, omega, n, seed } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let rep = verify_coverage(&ps, &parse_omega(&omega.omega)?, n, seed)?;
            let ok = rep.violations == 0;
            Ok(Outcome { report: RunReport::new("cover-check", &raw, Payload::CoverageReport(rep)), ok })
        }
        Command::Optimize { input, numeric, tol, mc_samples, seed } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let res = match (ps.dim(), numeric) {
                (Dim::Two, false) => optimal_omega_analytic(&ps)?,
                (dim, _) => {
                    let mut cfg = match dim {
                        Dim::Two => NMConfig::planar(),
                        Dim::Three => NMConfig::spatial(mc_samples, seed),
                    };
                    cfg.shards = threads;
                    if let Some(t) = tol {
                        cfg.tol = t;
                    }
                    optimal_omega_numeric(&ps, &cfg)?
                }
            };
            done("optimize", &raw, Payload::OptimizationResult(res))
        }
        Command::Conjecture3d { input, random, trials, mc_samples, dir_samples, seed } => {
            let cfg = ConjectureConfig { mc_samples, dir_samples, shards: threads, ..ConjectureConfig::default() };
            if trials == 0 {
                return Err(CliError::Domain("--trials must be at least 1".into()));
            }
            match (input, random) {
                (Some(path), _) => {
                    let (ps, raw) = read_input(&path, fmt)?;
                    if trials == 1 {
                        let rep = run_conjecture_trial(&ps, &cfg, seed)?;
                        done("conjecture3d", &raw, Payload::ConjectureReport(rep))
                    } else {
                        let sets: Vec<PointSet> = vec![ps; trials];
                        let suite = run_conjecture_sets(sets, &cfg, seed)?;
                        done("conjecture3d", &raw, Payload::ConjectureSuite(suite))
                    }
                }
                (None, Some(n_points)) => {
                    let suite = run_conjecture_suite(trials, n_points, seed, &cfg)?;
                    let raw = format!("random:{n_points}:{trials}:{seed}");
                    done("conjecture3d", raw.as_bytes(), Payload::ConjectureSuite(suite))
                }
                (None, None) => unreachable!("clap requires an input or --random"),
            }
        }
        Command::Plot { input, omega, output } => {
            let (ps, raw) = read_input(&input, fmt)?;
            let mut svg = Vec::new();
            render_svg(&ps, &parse_omega(&omega.omega)?, &mut svg)?;
            std::fs::write(&output, &svg).map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
            let rep = PlotReport { output: output.display().to_string(), circles: ps.len(), bytes: svg.len() };
            done("plot", &raw, Payload::Plot(rep))
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Reports
/// and domain errors go to `out` as JSON, usage errors to `err`. Returns the
/// process exit code: 0 success, 1 domain error or failed check, 2 usage.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let (body, code) = match execute(cli) {
        Ok(o) => (report::to_string(&o.report), if o.ok { 0 } else { 1 }),
        Err(e) => (report::to_string(&serde_json::json!({ "error": e.to_string() })), 1),
    };
    let _ = writeln!(out, "{body}");
    code
}
