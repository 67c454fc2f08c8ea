//! Experiment runners behind the `hamwit` binary.
//!
//! Each runner takes an [`ExperimentConfig`] and returns a [`Report`]: typed
//! rows plus the list of properties the run asserts. Rows are computed in
//! parallel and kept in trial order, so output depends only on the config.

use std::io::Write;

use anyhow::{bail, Result};
use serde::Serialize;

pub mod experiments;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Everything that determines a run. Written verbatim into every output.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    pub command: String,
    pub kind: Option<String>,
    pub n_min: usize,
    pub n_max: usize,
    pub n_step: usize,
    pub alpha: f64,
    pub epsilon: f64,
    pub seed: u64,
    pub trials: usize,
    pub policy: Option<String>,
    pub c: Option<usize>,
    pub overshoot: usize,
    pub enum_cap: u64,
    pub format: Format,
    pub version: String,
}

impl ExperimentConfig {
    pub fn n_values(&self) -> Result<Vec<usize>> {
        if self.n_min > self.n_max {
            bail!("empty n range: --n-min {} > --n-max {}", self.n_min, self.n_max);
        }
        if self.n_step == 0 {
            bail!("--n-step must be positive");
        }
        Ok((self.n_min..=self.n_max).step_by(self.n_step).collect())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

/// A reported figure that is not asserted.
#[derive(Debug, Clone, Serialize)]
pub struct Stat {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<R> {
    pub config: ExperimentConfig,
    pub rows: Vec<R>,
    pub checks: Vec<Check>,
    pub stats: Vec<Stat>,
}

impl<R: Serialize> Report<R> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// CSV: `# config <json>` line, header and rows, then `# stat` and
    /// `# check` lines. JSON: one object with `config`, `rows`, `checks`,
    /// `stats`.
    pub fn write(&self, out: &mut dyn Write) -> Result<()> {
        match self.config.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                writeln!(out, "# config {}", serde_json::to_string(&self.config)?)?;
                {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    for row in &self.rows {
                        w.serialize(row)?;
                    }
                    w.flush()?;
                }
                for s in &self.stats {
                    writeln!(out, "# stat {} {}", s.name, s.value)?;
                }
                for c in &self.checks {
                    writeln!(out, "# check {} {}: {}", c.name, if c.passed { "PASS" } else { "FAIL" }, c.detail)?;
                }
            }
        }
        Ok(())
    }
}

/// A finished run with its row type erased.
pub trait Outcome {
    fn passed(&self) -> bool;
    fn write(&self, out: &mut dyn Write) -> Result<()>;
    fn checks(&self) -> &[Check];
}

impl<R: Serialize> Outcome for Report<R> {
    fn passed(&self) -> bool {
        Report::passed(self)
    }

    fn write(&self, out: &mut dyn Write) -> Result<()> {
        Report::write(self, out)
    }

    fn checks(&self) -> &[Check] {
        &self.checks
    }
}

/// Run the subcommand named in `cfg.command`. `explicit_range` says whether
/// the user passed `--n-min` or `--n-max`.
pub fn run(cfg: &ExperimentConfig, explicit_range: bool) -> Result<Box<dyn Outcome>> {
    Ok(match cfg.command.as_str() {
        "lemma1" => Box::new(experiments::lemma1(cfg)?),
        "decider" => Box::new(experiments::decider(cfg)?),
        "approx" => Box::new(experiments::approx(cfg)?),
        "gadgets" => Box::new(experiments::gadgets(cfg)?),
        "baselines" => Box::new(experiments::baselines(cfg, explicit_range)?),
        other => bail!("unknown subcommand {other:?}"),
    })
}

/// `(n_min, n_max, n_step, trials)` used when the flags are absent.
pub fn defaults(command: &str, kind: Option<&str>) -> (usize, usize, usize, usize) {
    match (command, kind) {
        ("lemma1", _) => (8, 64, 8, 0),
        ("decider", _) => (8, 14, 1, 200),
        ("approx", _) => (2, 8, 1, 500),
        ("gadgets", Some("vc")) => (2, 6, 1, 500),
        ("gadgets", Some("hc")) => (0, 0, 1, 100),
        ("gadgets", _) => (3, 12, 1, 500),
        ("baselines", _) => (experiments::RANDOM_RANGE.0, experiments::RANDOM_RANGE.1, 1, 100_000),
        _ => (1, 1, 1, 0),
    }
}
