//! `mzv-hopf`: verify identities, expand symbolic objects and evaluate MZVs.

mod eval;
mod expand;
mod format;
mod store;
mod verify;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mzv_hopf::numeric::{default_samples, MzvCache};

use eval::{run_eval, EvalArgs};
use expand::{run_expand, ExpandArgs, Target};
use verify::{run_verify, ReportFormat, Suite, VerifyConfig};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input files; exit code 2.
    Config(String),
    /// The computation itself failed; exit code 1.
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "mzv-hopf", version, about = "Stuffle Hopf algebra identities and multiple zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and report one record per check.
    Verify(VerifyCli),
    /// Print an exact expansion.
    Expand(ExpandCli),
    /// Evaluate a (regularized) MZV or anti-hook numerically.
    Eval(EvalCli),
}

#[derive(Args)]
struct VerifyCli {
    /// Suites to run; repeat or separate with commas.
    #[arg(long = "suite", value_enum, value_delimiter = ',', default_value = "all")]
    suites: Vec<Suite>,
    /// Largest weight enumerated by the Hopf, Schur and sum-formula suites.
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
    /// Tolerance for numeric comparisons.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Series truncation order; each identity has its own default.
    #[arg(long)]
    order: Option<usize>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// File of sample points `x y A B`, one per line.
    #[arg(long)]
    samples: Option<PathBuf>,
    /// MZV cache file, read before and written after the run.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Omit elapsed times so reports are reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct ExpandCli {
    #[arg(value_enum)]
    target: Target,
    #[arg(long)]
    order: Option<usize>,
    /// Column index of an anti-hook, e.g. `2,1`.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Row index of an anti-hook.
    #[arg(long)]
    l: Option<String>,
    /// Corner of an anti-hook.
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    index: Option<String>,
    /// Indices to multiply, separated by `;`.
    #[arg(long)]
    indices: Option<String>,
    /// Use the star version of the lift.
    #[arg(long)]
    star: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct EvalCli {
    #[arg(long)]
    index: Option<String>,
    /// Evaluate the star sum of `--index`.
    #[arg(long)]
    star: bool,
    /// Evaluate the lift specialized at `x,y`.
    #[arg(long, allow_hyphen_values = true)]
    xy: Option<String>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

fn verify(cli: VerifyCli) -> Result<bool, CliError> {
    if cli.max_weight < 2 {
        return Err(CliError::Config(format!("--max-weight must be at least 2, got {}", cli.max_weight)));
    }
    if !(cli.tol > 0.0) {
        return Err(CliError::Config("--tol must be positive".into()));
    }
    if cli.jobs == 0 {
        return Err(CliError::Config("--jobs must be positive".into()));
    }
    let samples = match &cli.samples {
        Some(p) => store::load_samples(p)?,
        None => default_samples(),
    };
    let cache = match &cli.cache {
        Some(p) => store::load_cache(p)?,
        None => MzvCache::new(),
    };
    let cfg = VerifyConfig {
        suites: verify::normalize_suites(&cli.suites),
        max_weight: cli.max_weight,
        tol: cli.tol,
        order: cli.order,
        jobs: cli.jobs,
        samples,
        timing: !cli.no_timing,
        format: cli.format,
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::Config(format!("cannot create {}: {e}", p.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    let outcome = run_verify(&cfg, cache, &mut out)?;
    out.flush().map_err(|e| CliError::Runtime(e.to_string()))?;
    if let Some(p) = &cli.cache {
        store::save_cache(p, &outcome.cache)?;
    }
    Ok(outcome.failed == 0)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify(v) => verify(v),
        Command::Expand(e) => {
            let args = ExpandArgs { order: e.order, k: e.k, l: e.l, a: e.a, index: e.index, indices: e.indices, star: e.star };
            println!("{}", run_expand(e.target, &args, e.format)?);
            Ok(true)
        }
        Command::Eval(e) => {
            let args = EvalArgs { index: e.index, star: e.star, xy: e.xy, tol: e.tol, k: e.k, l: e.l, a: e.a };
            println!("{}", run_eval(&args, e.format)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
