//! Exact (and one approximate) generators of standard fBm sample paths.
//!
//! Three exact methods draw from the covariance in different ways:
//!
//! * [`CholeskySampler`] — dense factorization of the path covariance,
//!   O(n^3) setup / O(n^2) per draw; the bluntest possible reference.
//! * [`HoskingSampler`] — Durbin–Levinson recursion on the increment
//!   autocovariance, O(n^2) setup and per draw.
//! * [`CirculantSampler`] — FFT diagonalization of the circulant embedding,
//!   O(n log n) per draw; the default for Monte Carlo work.
//!
//! [`TruncatedMaSampler`] discretizes the moving-average integral
//! representation instead; it is deliberately approximate and exists to
//! cross-validate the exact methods from an independent construction.
//!
//! All samplers return zero-anchored paths of length `n + 1` and are pure
//! given their [`GaussianSource`]; replications parallelize by giving each
//! its own stream index.

mod cholesky;
mod circulant;
mod hosking;
mod source;
mod truncated_ma;

pub use cholesky::CholeskySampler;
pub use circulant::CirculantSampler;
pub use hosking::HoskingSampler;
pub use source::{GaussianSource, SeedSpec};
pub use truncated_ma::TruncatedMaSampler;

use serde::{Deserialize, Serialize};

use crate::model::{HurstParameter, SamplePath, TimeGrid};
use crate::Error;

/// Default cap on the Cholesky sampler's grid size (O(n^3) setup).
pub const DEFAULT_CHOLESKY_CAP: usize = 4096;

/// Default burn-in for the truncated moving-average sampler, as a multiple
/// of the horizon.
pub const DEFAULT_BURN_IN_FACTOR: f64 = 50.0;

/// Closed enumeration of the path generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerMethod {
    Cholesky,
    Hosking,
    Circulant,
    TruncatedMa,
}

impl SamplerMethod {
    pub const ALL: [SamplerMethod; 4] = [
        SamplerMethod::Cholesky,
        SamplerMethod::Hosking,
        SamplerMethod::Circulant,
        SamplerMethod::TruncatedMa,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SamplerMethod::Cholesky => "cholesky",
            SamplerMethod::Hosking => "hosking",
            SamplerMethod::Circulant => "circulant",
            SamplerMethod::TruncatedMa => "truncated_ma",
        }
    }
}

impl std::fmt::Display for SamplerMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SamplerMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "cholesky" => Ok(SamplerMethod::Cholesky),
            "hosking" => Ok(SamplerMethod::Hosking),
            "circulant" => Ok(SamplerMethod::Circulant),
            "truncated_ma" => Ok(SamplerMethod::TruncatedMa),
            other => Err(Error::config(format!(
                "unknown sampler method {other:?}; expected one of cholesky, hosking, circulant, truncated_ma"
            ))),
        }
    }
}

/// A prepared path generator: setup done once, draws are cheap and pure.
pub trait PathSampler: Send + Sync {
    fn method(&self) -> SamplerMethod;
    fn grid(&self) -> &TimeGrid;
    /// Draw one zero-anchored path, consuming variates from `source`.
    fn draw(&self, source: &mut GaussianSource) -> Result<SamplePath, Error>;
}

/// Prepare a sampler for repeated drawing.
pub fn build_sampler(
    method: SamplerMethod,
    h: HurstParameter,
    grid: &TimeGrid,
) -> Result<Box<dyn PathSampler>, Error> {
    Ok(match method {
        SamplerMethod::Cholesky => Box::new(CholeskySampler::new(h, grid.clone())?),
        SamplerMethod::Hosking => Box::new(HoskingSampler::new(h, grid.clone())?),
        SamplerMethod::Circulant => Box::new(CirculantSampler::new(h, grid.clone())?),
        SamplerMethod::TruncatedMa => Box::new(TruncatedMaSampler::new(
            h,
            grid.clone(),
            DEFAULT_BURN_IN_FACTOR * grid.horizon(),
        )?),
    })
}

/// One-shot exact draw via dense Cholesky factorization.
pub fn sample_cholesky(
    h: HurstParameter,
    grid: &TimeGrid,
    source: &mut GaussianSource,
) -> Result<SamplePath, Error> {
    CholeskySampler::new(h, grid.clone())?.draw(source)
}

/// One-shot exact draw via the Durbin–Levinson recursion.
pub fn sample_hosking(
    h: HurstParameter,
    grid: &TimeGrid,
    source: &mut GaussianSource,
) -> Result<SamplePath, Error> {
    HoskingSampler::new(h, grid.clone())?.draw(source)
}

/// One-shot exact draw via circulant embedding.
pub fn sample_circulant(
    h: HurstParameter,
    grid: &TimeGrid,
    source: &mut GaussianSource,
) -> Result<SamplePath, Error> {
    CirculantSampler::new(h, grid.clone())?.draw(source)
}

/// One-shot approximate draw from the truncated moving-average integral.
pub fn sample_truncated_ma(
    h: HurstParameter,
    grid: &TimeGrid,
    source: &mut GaussianSource,
    burn_in: f64,
) -> Result<SamplePath, Error> {
    TruncatedMaSampler::new(h, grid.clone(), burn_in)?.draw(source)
}

/// Turn unit-spacing fGn into a path: scale by `dt^H` and cumulative-sum.
pub(crate) fn integrate_noise(grid: &TimeGrid, h: HurstParameter, noise: &[f64]) -> Vec<f64> {
    debug_assert_eq!(noise.len(), grid.n());
    let scale = grid.dt().powf(h.value());
    let mut values = Vec::with_capacity(grid.n() + 1);
    values.push(0.0);
    let mut acc = 0.0;
    for &z in noise {
        acc += scale * z;
        values.push(acc);
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn method_round_trips_through_strings() {
        for m in SamplerMethod::ALL {
            assert_eq!(SamplerMethod::from_str(m.as_str()).unwrap(), m);
        }
        assert!(SamplerMethod::from_str("davies").is_err());
    }

    #[test]
    fn all_samplers_anchor_at_zero_and_match_grid() {
        let h = HurstParameter::new(0.7).unwrap();
        let grid = TimeGrid::new(1.0, 32).unwrap();
        for method in SamplerMethod::ALL {
            let sampler = build_sampler(method, h, &grid).unwrap();
            let mut src = GaussianSource::new(SeedSpec::new(9, 0));
            let path = sampler.draw(&mut src).unwrap();
            assert_eq!(path.values()[0], 0.0, "{method}");
            assert_eq!(path.values().len(), 33, "{method}");
            assert_eq!(sampler.method(), method);
        }
    }

    #[test]
    fn fixed_seed_reproduces_bit_identical_paths() {
        let h = HurstParameter::new(0.75).unwrap();
        let grid = TimeGrid::new(1.0, 64).unwrap();
        for method in SamplerMethod::ALL {
            let sampler = build_sampler(method, h, &grid).unwrap();
            let mut a = GaussianSource::new(SeedSpec::new(13, 3));
            let mut b = GaussianSource::new(SeedSpec::new(13, 3));
            let pa = sampler.draw(&mut a).unwrap();
            let pb = sampler.draw(&mut b).unwrap();
            let bits_a: Vec<u64> = pa.values().iter().map(|v| v.to_bits()).collect();
            let bits_b: Vec<u64> = pb.values().iter().map(|v| v.to_bits()).collect();
            assert_eq!(bits_a, bits_b, "{method}");
        }
    }
}
