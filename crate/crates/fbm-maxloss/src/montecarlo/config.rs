//! Experiment configuration, loadable from TOML with unknown keys rejected.

use serde::{Deserialize, Serialize};

use crate::model::{HurstParameter, ProcessParams, TimeGrid};
use crate::samplers::SamplerMethod;
use crate::Error;

impl Serialize for HurstParameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}

impl<'de> Deserialize<'de> for HurstParameter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = f64::deserialize(deserializer)?;
        HurstParameter::new(value).map_err(serde::de::Error::custom)
    }
}

fn default_mu() -> f64 {
    0.0
}

fn default_sigma() -> f64 {
    1.0
}

fn default_confidence() -> f64 {
    0.99
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(remote = "ProcessParams")]
struct ProcessParamsSpec {
    #[serde(rename = "hurst")]
    h: HurstParameter,
    #[serde(default = "default_mu")]
    mu: f64,
    #[serde(default = "default_sigma")]
    sigma: f64,
    horizon: f64,
}

/// Full description of one Monte Carlo run.
///
/// The TOML mirror of this struct is the config-file format; flags given on
/// the command line override file values, and unknown keys are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(with = "ProcessParamsSpec")]
    pub params: ProcessParams,
    /// Grid steps per path (power of two for the circulant sampler).
    pub n: usize,
    /// Replication count.
    pub reps: u64,
    pub method: SamplerMethod,
    /// Master seed; replication `k` uses stream `k`.
    pub seed: u64,
    /// Loss levels for tail estimation, strictly increasing, nonnegative.
    #[serde(default)]
    pub x_grid: Vec<f64>,
    #[serde(default = "default_confidence")]
    pub confidence: f64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.params.sigma > 0.0) {
            return Err(Error::config(format!(
                "sigma must be positive, got {}",
                self.params.sigma
            )));
        }
        if !(self.params.horizon > 0.0) {
            return Err(Error::config(format!(
                "horizon must be positive, got {}",
                self.params.horizon
            )));
        }
        if self.n == 0 {
            return Err(Error::config("n must be at least 1"));
        }
        if self.method == SamplerMethod::Circulant && !self.n.is_power_of_two() {
            return Err(Error::config(format!(
                "n must be a power of two for the circulant sampler, got {}",
                self.n
            )));
        }
        if self.reps < 100 {
            return Err(Error::config(format!(
                "reps must be at least 100, got {}",
                self.reps
            )));
        }
        for w in self.x_grid.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::config(format!(
                    "x_grid must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&first) = self.x_grid.first() {
            if !(first >= 0.0) {
                return Err(Error::config(format!(
                    "x_grid values must be nonnegative, got {first}"
                )));
            }
        }
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(Error::config(format!(
                "confidence must lie in (0, 1), got {}",
                self.confidence
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> Result<TimeGrid, Error> {
        TimeGrid::new(self.params.horizon, self.n)
    }

    pub fn from_toml_str(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::config(e.to_string()))
    }

    /// One-line rendering of every resolved field, echoed into outputs so a
    /// run can be reproduced from its artifacts alone.
    pub fn resolved_line(&self) -> String {
        let xs = self
            .x_grid
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "hurst={} mu={} sigma={} horizon={} n={} reps={} method={} seed={} x_grid=[{}] confidence={}",
            self.params.h.value(),
            self.params.mu,
            self.params.sigma,
            self.params.horizon,
            self.n,
            self.reps,
            self.method,
            self.seed,
            xs,
            self.confidence
        )
    }
}
