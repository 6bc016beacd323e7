//! Experiment configuration and state specifications.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::mathcore::{c, CMatrix};
use crate::quantum::{bloch_to_density, random_density, validate_density, DensityMatrix};
use crate::rng::ExperimentRng;

use super::CliError;

pub const DEFAULT_N: usize = 16;
pub const DEFAULT_TRIALS: usize = 32;
pub const DEFAULT_ARITH_LEN: usize = 4096;

/// How a density matrix is given in a config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StateSpec {
    Named(NamedState),
    Bloch { bloch: [f64; 3] },
    Diagonal { diag: Vec<f64> },
    Matrix { matrix: Vec<Vec<[f64; 2]>> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedState {
    /// Fresh Wishart-random qubit state per trial.
    Random,
    MaximallyMixed,
}

impl StateSpec {
    pub fn is_random(&self) -> bool {
        matches!(self, StateSpec::Named(NamedState::Random))
    }

    /// Builds the state; `rng` is only drawn from for `random`.
    pub fn build(&self, rng: &mut ExperimentRng) -> crate::Result<DensityMatrix> {
        match self {
            StateSpec::Named(NamedState::Random) => Ok(random_density(2, rng)),
            StateSpec::Named(NamedState::MaximallyMixed) => Ok(DensityMatrix::maximally_mixed(2)),
            StateSpec::Bloch { bloch } => bloch_to_density(*bloch),
            StateSpec::Diagonal { diag } => DensityMatrix::diagonal(diag),
            StateSpec::Matrix { matrix } => {
                let rows: Vec<Vec<_>> = matrix
                    .iter()
                    .map(|r| r.iter().map(|&[re, im]| c(re, im)).collect())
                    .collect();
                validate_density(&CMatrix::from_rows(&rows)?)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Entropies,
    Identity,
    Rate,
    Fidelity,
    Estimate,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Entropies => "entropies",
            Mode::Identity => "identity",
            Mode::Rate => "rate",
            Mode::Fidelity => "fidelity",
            Mode::Estimate => "estimate",
        }
    }
}

fn default_rho() -> StateSpec {
    // eigenvalues (0.9, 0.1) along |+>, |->
    StateSpec::Bloch {
        bloch: [0.8, 0.0, 0.0],
    }
}

fn default_sigma() -> StateSpec {
    StateSpec::Named(NamedState::MaximallyMixed)
}

fn default_n() -> usize {
    DEFAULT_N
}

fn default_trials() -> usize {
    DEFAULT_TRIALS
}

fn default_arith_len() -> usize {
    DEFAULT_ARITH_LEN
}

/// One experiment. Missing fields take the defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "default_rho")]
    pub rho: StateSpec,
    #[serde(default = "default_sigma")]
    pub sigma: StateSpec,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    /// Kept qubits for `fidelity`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Symbols per arithmetic-coded sequence in `rate`.
    #[serde(default = "default_arith_len")]
    pub arith_len: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            rho: default_rho(),
            sigma: default_sigma(),
            n: DEFAULT_N,
            trials: DEFAULT_TRIALS,
            seed: 0,
            mode: None,
            m: None,
            arith_len: DEFAULT_ARITH_LEN,
        }
    }
}

impl ExperimentConfig {
    /// Parses a config file, or the `config` member of a previous output.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let value = match value {
            Value::Object(mut obj) if obj.contains_key("result") && obj.contains_key("config") => {
                obj.remove("config").unwrap_or(Value::Null)
            }
            other => other,
        };
        serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.trials == 0 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        if self.arith_len == 0 {
            return Err(CliError::Config("arith_len must be at least 1".into()));
        }
        Ok(())
    }
}
