//! Command-line driver.
//!
//! ```text
//! qrelcode <entropies|identity|rate|fidelity|estimate>
//!          [--config FILE] [--seed U64] [--n INT] [--trials INT]
//!          [--out FILE] [--format json|csv]
//! ```
//!
//! Exit status: 0 success, 1 an acceptance gap was exceeded (the record is
//! still written), 2 input or validation error (nothing is written; a JSON
//! diagnostic `{"error": code, "message": ...}` goes to stderr).

pub mod commands;
pub mod config;
pub mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

pub use commands::{cmd_entropies, cmd_estimate, cmd_fidelity, cmd_identity, cmd_rate, Outcome};
pub use config::{ExperimentConfig, Mode, NamedState, StateSpec};
pub use output::{Field, ResultRecord};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Config(String),
    #[error("config mode `{config}` does not match command `{command}`")]
    ModeMismatch {
        config: &'static str,
        command: &'static str,
    },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Lib(#[from] crate::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Config(_) => "config",
            CliError::ModeMismatch { .. } => "mode_mismatch",
            CliError::Io(_) => "io",
            CliError::Lib(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "qrelcode",
    version,
    about = "Quantum relative entropy as excess compression rate"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Mode,
    /// JSON experiment config, or a previous JSON output.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Block length.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Config file merged with flag overrides, mode checked against `command`.
pub fn resolve_config(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            ExperimentConfig::from_json(&text)?
        }
        None => ExperimentConfig::default(),
    };
    if let Some(mode) = cfg.mode {
        if mode != cli.command {
            return Err(CliError::ModeMismatch {
                config: mode.name(),
                command: cli.command.name(),
            });
        }
    }
    cfg.mode = Some(cli.command);
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(n) = cli.n {
        cfg.n = n;
    }
    if let Some(trials) = cli.trials {
        cfg.trials = trials;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run_mode(mode: Mode, cfg: &ExperimentConfig) -> Result<Outcome, CliError> {
    match mode {
        Mode::Entropies => cmd_entropies(cfg),
        Mode::Identity => cmd_identity(cfg),
        Mode::Rate => cmd_rate(cfg),
        Mode::Fidelity => cmd_fidelity(cfg),
        Mode::Estimate => cmd_estimate(cfg),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let Some(path) = path else {
        print!("{text}");
        return Ok(());
    };
    // write beside the target, then rename, so a failure leaves no partial file
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = PathBuf::from(tmp);
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    std::fs::write(&tmp, text).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        io(e)
    })
}

/// Runs a parsed invocation and returns the exit status.
pub fn execute(cli: &Cli) -> ExitCode {
    let start = Instant::now();
    let result = resolve_config(cli).and_then(|cfg| {
        let outcome = run_mode(cli.command, &cfg)?;
        let text = match cli.format {
            Format::Json => outcome.record.to_json(),
            Format::Csv => outcome.record.to_csv(),
        };
        write_output(cli.out.as_deref(), &text)?;
        Ok(outcome.passed)
    });
    match result {
        Ok(passed) => {
            // kept off the record so identical inputs give identical files
            eprintln!("wall_time_s={:.3}", start.elapsed().as_secs_f64());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let diag = serde_json::json!({"error": e.code(), "message": e.to_string()});
            eprintln!("{diag}");
            ExitCode::from(2)
        }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    execute(&cli)
}
