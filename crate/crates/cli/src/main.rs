//! `nilva` - exact verification of the nilmanifold double's algebra.

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use nilva::config::{validate, FileConfig, Suite, SuiteConfig, VariantSel};
use nilva::{explain, report, suites};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nilva",
    about = "Exact-arithmetic verifier for the current algebra and logarithmic \
             fields of six dimensional nilmanifold doubles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Check(Box<CheckArgs>),
    /// Describe a check: the statement verified and its exactness contract.
    Explain { check: String },
}

#[derive(Args)]
struct CheckArgs {
    /// Suite: lie | group | forms | kernels | modes | fields | currents |
    /// special-cases | taylor | all
    suite: String,
    /// Circle-bundle degree parameter (with --j, overrides per-suite grids).
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    /// Flux class parameter.
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    /// Exponent window N for kernels and field cells.
    #[arg(long)]
    window: Option<i64>,
    /// Log-degree cap (at most 3).
    #[arg(long = "log-degree")]
    log_degree: Option<u8>,
    /// Mode grid radius for skew/Jacobi sweeps.
    #[arg(long = "mode-grid")]
    mode_grid: Option<i64>,
    /// Monomial mode window for exact per-monomial comparisons.
    #[arg(long = "monomial-window")]
    monomial_window: Option<i64>,
    /// Table variant: as-written | corrected | both.
    #[arg(long)]
    variant: Option<String>,
    /// Worker count (0 = all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count for the sampled checks.
    #[arg(long)]
    samples: Option<usize>,
    /// Report output path (JSON).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Config file (key = value); flags override file entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn build_config(args: &CheckArgs) -> Result<SuiteConfig> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let mut cfg = SuiteConfig::default();
    let suite_name = if args.suite.is_empty() {
        file.suite.clone().unwrap_or_else(|| String::from("all"))
    } else {
        args.suite.clone()
    };
    cfg.suites = Suite::parse(&suite_name)?;
    let k = args.k.or(file.k);
    let j = args.j.or(file.j);
    cfg.params = match (k, j) {
        (Some(k), Some(j)) => Some((k, j)),
        (None, None) => None,
        _ => anyhow::bail!("--k and --j must be given together"),
    };
    if let Some(w) = args.window.or(file.window) {
        cfg.window = w;
    }
    if let Some(l) = args.log_degree.or(file.log_degree) {
        cfg.log_degree = l;
    }
    if let Some(g) = args.mode_grid.or(file.mode_grid) {
        cfg.mode_grid = g;
    }
    if let Some(m) = args.monomial_window.or(file.monomial_window) {
        cfg.monomial_window = m;
    }
    if let Some(v) = args.variant.clone().or(file.variant) {
        cfg.variant = VariantSel::parse(&v)?;
    }
    if let Some(jobs) = args.jobs.or(file.jobs) {
        cfg.jobs = jobs;
    }
    if let Some(seed) = args.seed.or(file.seed) {
        cfg.seed = seed;
    }
    if let Some(samples) = args.samples.or(file.samples) {
        cfg.samples = samples;
    }
    cfg.report_path = args.report.clone().or(file.report.map(PathBuf::from));
    validate(&cfg)?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check(args) => {
            let cfg = match build_config(args.as_ref()) {
                Ok(cfg) => cfg,
                Err(e) => {
                    eprintln!("config error: {e:#}");
                    return ExitCode::from(2);
                }
            };
            let (results, diff) = match suites::run_all(&cfg) {
                Ok(out) => out,
                Err(e) => {
                    eprintln!("{e:#}");
                    return ExitCode::from(3);
                }
            };
            let json: Vec<report::JsonResult> = results
                .iter()
                .map(|r| report::to_json_result(r, None))
                .collect();
            let full = report::assemble(&cfg, json, diff);
            print!("{}", report::render_text(&full));
            if let Some(path) = &cfg.report_path {
                if let Err(e) = report::write_atomic(&full, path) {
                    eprintln!("report error: {e:#}");
                    return ExitCode::from(2);
                }
            }
            if report::all_asserted_pass(&full.results) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Explain { check } => match explain::explain(&check) {
            Some(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            None => {
                eprintln!(
                    "unknown check '{check}'; known checks:\n  {}",
                    explain::known_checks().join("\n  ")
                );
                ExitCode::from(2)
            }
        },
    }
}
