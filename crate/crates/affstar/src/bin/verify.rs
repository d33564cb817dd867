//! Command-line front end for the verification suites.
//!
//! Exit codes: 0 all checks pass, 1 any check fails, 2 configuration error.

use affstar::verify::config::parse_config_file;
use affstar::verify::report::{emit_report, ReportFormat};
use affstar::verify::{run_suite, Suite, SuiteConfig};
use clap::Parser;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "verify", version)]
#[command(about = "Run the numerical verification suites and write a report")]
struct Cli {
    /// Suite to run: lie | orbit | moyal | fourier | representation | all
    #[arg(value_parser = Suite::from_str)]
    suite: Suite,

    /// Optional key = value configuration file (flags override it)
    #[arg(long)]
    config: Option<PathBuf>,

    /// Random seed for the sampled checks
    #[arg(long)]
    seed: Option<u64>,

    /// Points per z-axis of the 4-D pipeline grids (power of two)
    #[arg(long = "grid-z")]
    grid_z: Option<usize>,

    /// Points per w-axis of the 4-D pipeline grids (power of two)
    #[arg(long = "grid-w")]
    grid_w: Option<usize>,

    /// Star-product series cutoff
    #[arg(long)]
    trunc: Option<usize>,

    /// Monodromy parameter for the strip checks
    #[arg(long)]
    theta: Option<f64>,

    /// Output directory for the report file
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format written to disk
    #[arg(long, value_parser = ReportFormat::from_str)]
    format: Option<ReportFormat>,

    /// Omit wall-clock timings so identical runs produce identical bytes
    #[arg(long)]
    no_timing: bool,
}

fn build_config(cli: &Cli) -> Result<SuiteConfig, String> {
    let mut cfg = SuiteConfig::default();
    if let Some(path) = &cli.config {
        let partial = parse_config_file(path).map_err(|e| e.to_string())?;
        cfg.apply(&partial);
    }
    if let Some(v) = cli.seed {
        cfg.seed = v;
    }
    if let Some(v) = cli.grid_z {
        cfg.grid_z = v;
    }
    if let Some(v) = cli.grid_w {
        cfg.grid_w = v;
    }
    if let Some(v) = cli.trunc {
        cfg.trunc = v;
    }
    if let Some(v) = cli.theta {
        cfg.theta = v;
    }
    if let Some(v) = &cli.out {
        cfg.out_dir = v.clone();
    }
    if let Some(v) = cli.format {
        cfg.format = v;
    }
    if cli.no_timing {
        cfg.include_timing = false;
    }
    for n in [cfg.grid_z, cfg.grid_w] {
        if !n.is_power_of_two() || n < 8 {
            return Err(format!("grid sizes must be powers of two >= 8, got {n}"));
        }
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli) {
        Ok(cfg) => cfg,
        Err(message) => {
            eprintln!("configuration error: {message}");
            return ExitCode::from(2);
        }
    };

    let report = run_suite(cli.suite, &cfg);
    print!("{}", report.to_text());

    match emit_report(&report, cfg.format, &cfg.out_dir) {
        Ok(path) => println!("report written to {}", path.display()),
        Err(e) => {
            eprintln!("configuration error: cannot write report: {e}");
            return ExitCode::from(2);
        }
    }

    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
