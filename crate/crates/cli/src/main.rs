use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hamwit_cli::{defaults, run, ExperimentConfig, Format};
use hamwit_core::testkit::DEFAULT_ENUMERATION_CAP;

/// Run hamwit experiments and emit CSV or JSON tables.
///
/// Exit status: 0 when every asserted property holds, 1 when one fails,
/// 2 on a usage or runtime error.
#[derive(Parser)]
#[command(name = "hamwit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Command {
    /// Tail count against 2^n / P(n, alpha) over an n range.
    Lemma1,
    /// Planted and empty decider trials.
    Decider,
    /// Hamming approximators against exact nearest witnesses.
    Approx,
    /// Gadget decoders under corruption.
    Gadgets,
    /// Randomized and deterministic baselines and the query adversary.
    Baselines,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true)]
    n_min: Option<usize>,
    #[arg(long, global = true)]
    n_max: Option<usize>,
    #[arg(long, global = true)]
    n_step: Option<usize>,
    #[arg(long, global = true, default_value_t = 0.25, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, global = true, default_value_t = 0.5, allow_negative_numbers = true)]
    epsilon: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// approx: nt-vc|nt-is|nt-clique|halfsplit|nae; gadgets: sat|vc|hc;
    /// baselines: all|random|deterministic|adversary.
    #[arg(long, global = true)]
    kind: Option<String>,
    /// decider oracle: exact-max|uniform|zero.
    #[arg(long, global = true)]
    policy: Option<String>,
    /// baselines: run only this c instead of 1..=3.
    #[arg(long, global = true)]
    c: Option<usize>,
    /// gadgets: flips beyond the compliant budget. Disables the assertion.
    #[arg(long, global = true, default_value_t = 0)]
    overshoot: usize,
    #[arg(long, global = true, env = "HAMWIT_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP)]
    enum_cap: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<bool> {
    let command = match cli.command {
        Command::Lemma1 => "lemma1",
        Command::Decider => "decider",
        Command::Approx => "approx",
        Command::Gadgets => "gadgets",
        Command::Baselines => "baselines",
    };
    let c = cli.common;
    let (n_min, n_max, n_step, trials) = defaults(command, c.kind.as_deref());
    let cfg = ExperimentConfig {
        command: command.into(),
        kind: c.kind,
        n_min: c.n_min.unwrap_or(n_min),
        n_max: c.n_max.unwrap_or(n_max),
        n_step: c.n_step.unwrap_or(n_step),
        alpha: c.alpha,
        epsilon: c.epsilon,
        seed: c.seed,
        trials: c.trials.unwrap_or(trials),
        policy: c.policy,
        c: c.c,
        overshoot: c.overshoot,
        enum_cap: c.enum_cap,
        format: c.format,
        version: env!("CARGO_PKG_VERSION").into(),
    };
    let outcome = run(&cfg, c.n_min.is_some() || c.n_max.is_some())?;
    match &c.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            outcome.write(&mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            outcome.write(&mut w)?;
            w.flush()?;
        }
    }
    for check in outcome.checks() {
        eprintln!("{} {}: {}", if check.passed { "PASS" } else { "FAIL" }, check.name, check.detail);
    }
    Ok(outcome.passed())
}
