//! `heatcg` command line: `solve`, `verify` and `pyramid`.
//!
//! Exit codes: 0 success, 1 non-convergence / failed check / failed tests,
//! 2 invalid input, 3 pyramid ordering violated.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cg::CgConfig;
use crate::heat1d::{solve_heat_with, HeatProblem, HeatSolution, Storage};
use crate::pyramid::{parse_manifest, pyramid_report, render_report, DEFAULT_UNIT_BUDGET_MS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PYRAMID: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "heatcg",
    version,
    about = "Steady 1D heat equation via finite volumes and conjugate gradients"
)]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve and write `x,temperature` CSV
    Solve(SolveOptions),
    /// Solve and compare against the analytic linear profile
    Verify {
        #[command(flatten)]
        opts: SolveOptions,
        /// Maximum accepted L2 error
        #[arg(long, default_value_t = 1e-8)]
        threshold: f64,
    },
    /// Audit a test-run manifest for the unit > integration > system shape
    Pyramid {
        manifest: PathBuf,
        #[arg(long, default_value_t = DEFAULT_UNIT_BUDGET_MS)]
        unit_budget_ms: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StorageArg {
    Dense,
    Crs,
}

#[derive(Debug, Clone, Args)]
pub struct SolveOptions {
    /// Number of cells
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    cells: u64,
    /// Diffusivity
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// Domain length
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    #[arg(long, default_value_t = 0.0)]
    t_left: f64,
    #[arg(long, default_value_t = 1.0)]
    t_right: f64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    max_iters: u64,
    /// Absolute residual tolerance
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = StorageArg::Dense)]
    storage: StorageArg,
    /// Write CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SolveOptions {
    fn problem(&self) -> Result<(HeatProblem<f64>, CgConfig<f64>), String> {
        let cells = usize::try_from(self.cells).map_err(|e| e.to_string())?;
        let iters = usize::try_from(self.max_iters).map_err(|e| e.to_string())?;
        let problem = HeatProblem::new(self.gamma, self.length, cells, self.t_left, self.t_right)
            .map_err(|e| e.to_string())?;
        let config = CgConfig::new(iters, self.tol).map_err(|e| e.to_string())?;
        Ok((problem, config))
    }

    fn storage(&self) -> Storage {
        match self.storage {
            StorageArg::Dense => Storage::Dense,
            StorageArg::Crs => Storage::Crs,
        }
    }

    fn run(&self, err: &mut dyn Write) -> Result<HeatSolution<f64>, i32> {
        let (problem, config) = self.problem().map_err(|msg| {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        })?;
        solve_heat_with(&problem, &config, self.storage()).map_err(|e| {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        })
    }
}

/// Formats a value with 17 significant digits.
pub fn format_sig17(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn render_csv(solution: &HeatSolution<f64>) -> String {
    let mut csv = String::from("x,temperature\n");
    for (x, t) in solution
        .cell_centers
        .iter()
        .zip(solution.temperature.iter())
    {
        csv.push_str(&format_sig17(*x));
        csv.push(',');
        csv.push_str(&format_sig17(*t));
        csv.push('\n');
    }
    csv
}

fn summary(err: &mut dyn Write, solution: &HeatSolution<f64>) {
    let cg = &solution.cg;
    let _ = writeln!(
        err,
        "iterations: {}, residual: {:e}, converged: {}",
        cg.iterations, cg.residual_norm, cg.converged
    );
    if cg.breakdown {
        let _ = writeln!(
            err,
            "warning: conjugate gradient broke down (operator not SPD?)"
        );
    }
}

fn cmd_solve(opts: &SolveOptions, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let solution = match opts.run(err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let csv = render_csv(&solution);
    let written = match &opts.out {
        Some(path) => fs::write(path, csv.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(csv.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_FAILURE;
    }
    summary(err, &solution);
    if solution.cg.converged {
        EXIT_OK
    } else {
        let _ = writeln!(err, "warning: not converged, CSV holds the last iterate");
        EXIT_FAILURE
    }
}

fn cmd_verify(
    opts: &SolveOptions,
    threshold: f64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if !(threshold.is_finite() && threshold > 0.0) {
        let _ = writeln!(err, "error: threshold must be positive, got {threshold}");
        return EXIT_USAGE;
    }
    let solution = match opts.run(err) {
        Ok(s) => s,
        Err(code) => return code,
    };
    summary(err, &solution);
    let error = solution.l2_error_vs_analytic;
    let passed = solution.cg.converged && error < threshold;
    let _ = writeln!(
        out,
        "l2_error: {error:e} (threshold {threshold:e}) {}",
        if passed { "PASS" } else { "FAIL" }
    );
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn cmd_pyramid(
    manifest: &PathBuf,
    unit_budget_ms: f64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let text = match fs::read_to_string(manifest) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", manifest.display());
            return EXIT_USAGE;
        }
    };
    let report = match parse_manifest(&text).and_then(|r| pyramid_report(&r, unit_budget_ms)) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", manifest.display());
            return EXIT_USAGE;
        }
    };
    let _ = out.write_all(render_report(&report).as_bytes());
    if !report.pyramid_ok {
        EXIT_PYRAMID
    } else if !report.all_passed() || !report.slow_unit_tests.is_empty() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match &cli.command {
        Command::Solve(opts) => cmd_solve(opts, out, err),
        Command::Verify { opts, threshold } => cmd_verify(opts, *threshold, out, err),
        Command::Pyramid {
            manifest,
            unit_budget_ms,
        } => cmd_pyramid(manifest, *unit_budget_ms, out, err),
    }
}
