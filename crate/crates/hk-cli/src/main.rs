//! `hk` — command line front end for the verification suites, kernel
//! evaluation, distribution pairings and calibration.
//!
//! Exit codes: 0 = all checks passed, 1 = at least one failure, 2 = bad
//! configuration (unknown suite, malformed config file, invalid parameters).

use clap::{Args, Parser, Subcommand, ValueEnum};
use hk_core::config::Config;
use hk_core::gallery::GalleryFunction;
use hk_core::harness::{
    calibrate, calibration_grid, run_suite, tabulate, to_canonical_json, to_csv, RangeSpec,
    SuiteName, SuiteParams, TableFormat, TabulateKind, VerificationReport,
};
use hk_core::kernel::{pair_angular, pair_spatial, pair_spectral, KernelConstants, PairingOutcome};
use hk_core::operators::OperatorParams;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hk", about = "Heisenberg-group kernel verification and evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonOpts {
    /// Flat key = value configuration file overriding tolerances/quadrature.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker-thread bound for the data-parallel loops.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        /// specfun | group | operators | identities | pairing | fundamental | all
        #[arg(long)]
        suite: String,
        /// Dimension n (informational; the suites fix their own sweeps).
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Coupling α used by the parameterized checks.
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Tabulate kernel density, spherical function or Ψ profile values.
    Eval {
        /// density | spherical | psi
        what: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Spherical frequency λ (spherical) / radius r (psi).
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0.9)]
        r: f64,
        /// Grid ranges, each min:max:count.
        #[arg(long, default_value = "0.5:2:4")]
        x: String,
        #[arg(long, default_value = "0:0:1")]
        y: String,
        /// For `psi` this is the θ range.
        #[arg(long, default_value = "0:0:1")]
        t: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Evaluate one distribution pairing ⟨Φ_α, f⟩.
    Pair {
        /// spatial | angular | spectral
        #[arg(long)]
        route: String,
        /// G1 | G2 | G3
        #[arg(long, default_value = "G1")]
        function: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Fit the global normalization scale from the fundamental-solution
    /// experiment.
    Calibrate {
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Galleries to fit (comma separated).
        #[arg(long, default_value = "G1,G3")]
        functions: String,
        /// Grid: half-width in z, nodes per z axis, half-width in t, t nodes.
        #[arg(long, default_value = "3.0:21:24.0:160")]
        grid: String,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn load_config(common: &CommonOpts) -> Result<Config, String> {
    let cfg = match &common.config {
        None => Config::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            Config::parse(&text).map_err(|e| e.to_string())?
        }
    };
    if let Some(jobs) = common.jobs {
        if jobs == 0 {
            return Err("--jobs must be >= 1".into());
        }
        hk_core::par::configure_threads(jobs);
    }
    Ok(cfg)
}

fn emit(common: &CommonOpts, text: &str) -> Result<(), String> {
    match &common.out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
    }
}

fn emit_reports(common: &CommonOpts, reports: &[VerificationReport]) -> Result<bool, String> {
    let rendered = match common.format {
        OutputFormat::Json => to_canonical_json(reports),
        OutputFormat::Csv => to_csv(reports),
    };
    emit(common, &rendered)?;
    for r in reports {
        eprintln!("{}", r.line());
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, n: _, alpha, common } => {
            let cfg = load_config(&common)?;
            let names: Vec<SuiteName> = if suite == "all" {
                SuiteName::all().to_vec()
            } else {
                vec![suite.parse().map_err(|e| format!("{e}"))?]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.extend(
                    run_suite(name, &cfg, SuiteParams { alpha }).map_err(|e| e.to_string())?,
                );
            }
            emit_reports(&common, &reports)
        }
        Command::Eval { what, n, alpha, lambda, k, r, x, y, t, common } => {
            let cfg = load_config(&common)?;
            let kind = match what.as_str() {
                "density" => TabulateKind::Density { n, alpha },
                "spherical" => TabulateKind::Spherical { n, lambda, k },
                "psi" => TabulateKind::Psi { n, alpha, r },
                other => return Err(format!("unknown eval target `{other}`")),
            };
            let fmt = match common.format {
                OutputFormat::Json => TableFormat::Json,
                OutputFormat::Csv => TableFormat::Csv,
            };
            let table = tabulate(
                kind,
                RangeSpec::parse(&x).map_err(|e| e.to_string())?,
                RangeSpec::parse(&y).map_err(|e| e.to_string())?,
                RangeSpec::parse(&t).map_err(|e| e.to_string())?,
                fmt,
                &cfg,
            )
            .map_err(|e| e.to_string())?;
            emit(&common, &table)?;
            Ok(true)
        }
        Command::Pair { route, function, n, alpha, common } => {
            let cfg = load_config(&common)?;
            let f = GalleryFunction::by_name(&function, n as usize)
                .ok_or_else(|| format!("unknown gallery function `{function}`"))?;
            let p = OperatorParams::new(n, alpha).map_err(|e| e.to_string())?;
            let constants = KernelConstants::new(n);
            let out: PairingOutcome = match route.as_str() {
                "spatial" => pair_spatial(&p, &constants, &f, &cfg.quad, &cfg.tol),
                "angular" => pair_angular(&p, &constants, &f, &cfg.quad, &cfg.tol),
                "spectral" => pair_spectral(&p, &constants, &f, &cfg.quad, &cfg.tol),
                other => return Err(format!("unknown route `{other}`")),
            }
            .map_err(|e| e.to_string())?;
            let obj = serde_json::json!({
                "route": route,
                "function": function,
                "n": n,
                "alpha": alpha,
                "value_re": out.value.re,
                "value_im": out.value.im,
                "error_estimate": out.error_estimate,
                "tail_estimate": out.tail_estimate,
            });
            emit(&common, &serde_json::to_string_pretty(&obj).unwrap())?;
            Ok(true)
        }
        Command::Calibrate { alpha, functions, grid, common } => {
            let cfg = load_config(&common)?;
            let galleries: Vec<GalleryFunction> = functions
                .split(',')
                .map(|name| {
                    GalleryFunction::by_name(name.trim(), 1)
                        .ok_or_else(|| format!("unknown gallery function `{name}`"))
                })
                .collect::<Result<_, _>>()?;
            let parts: Vec<&str> = grid.split(':').collect();
            if parts.len() != 4 {
                return Err("grid must be half_z:nz:half_t:nt".into());
            }
            let half_z: f64 = parts[0].parse().map_err(|_| "bad half_z".to_string())?;
            let nz: usize = parts[1].parse().map_err(|_| "bad nz".to_string())?;
            let half_t: f64 = parts[2].parse().map_err(|_| "bad half_t".to_string())?;
            let nt: usize = parts[3].parse().map_err(|_| "bad nt".to_string())?;
            let grid = calibration_grid(half_z, nz, half_t, nt);
            let out = calibrate(&galleries, alpha, &grid, &cfg).map_err(|e| e.to_string())?;
            let obj = serde_json::json!({
                "alpha": alpha,
                "per_gallery": out.per_gallery.iter().map(|g| serde_json::json!({
                    "gallery": g.gallery,
                    "scale": g.scale,
                    "residual_rel_sup": g.residual_rel_sup,
                })).collect::<Vec<_>>(),
                "mean_scale": out.mean_scale,
                "consistency": out.consistency,
            });
            emit(&common, &serde_json::to_string_pretty(&obj).unwrap())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
