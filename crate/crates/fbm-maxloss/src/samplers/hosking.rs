//! Exact sampling of fractional Gaussian noise through the
//! Durbin–Levinson (Hosking) recursion on the increment autocovariance,
//! cumulatively summed into a path.
//!
//! The recursion runs on the unit-spacing autocovariance; the output noise
//! is rescaled by `dt^H` once, which is exact by self-similarity.

use super::{integrate_noise, GaussianSource, PathSampler, SamplerMethod};
use crate::model::{unit_increment_autocov, HurstParameter, SamplePath, TimeGrid};
use crate::Error;

#[derive(Debug)]
pub struct HoskingSampler {
    h: HurstParameter,
    grid: TimeGrid,
    /// Prediction coefficients per step: `phi[k]` has length `k + 1` and
    /// expresses `E[X_{k+1} | X_0..X_k]`.
    phi: Vec<Vec<f64>>,
    /// Conditional standard deviations, one per generated variate.
    sigma: Vec<f64>,
}

impl HoskingSampler {
    pub fn new(h: HurstParameter, grid: TimeGrid) -> Result<Self, Error> {
        let n = grid.n();
        let gamma: Vec<f64> = (0..n as u64).map(|k| unit_increment_autocov(k, h)).collect();

        let mut phi: Vec<Vec<f64>> = Vec::with_capacity(n.saturating_sub(1));
        let mut sigma = Vec::with_capacity(n);
        sigma.push(gamma[0].sqrt()); // X_0 ~ N(0, gamma(0)) with gamma(0) = 1
        let mut variance = gamma[0];
        let mut prev: Vec<f64> = Vec::new();

        for k in 1..n {
            let mut reflection = gamma[k];
            for (j, &p) in prev.iter().enumerate() {
                reflection -= p * gamma[k - 1 - j];
            }
            reflection /= variance;
            if !(reflection.abs() < 1.0) {
                return Err(Error::PartialCorrelation {
                    lag: k,
                    value: reflection,
                });
            }
            let mut row = Vec::with_capacity(k);
            for j in 0..k - 1 {
                row.push(prev[j] - reflection * prev[k - 2 - j]);
            }
            row.push(reflection);
            variance *= 1.0 - reflection * reflection;
            if !(variance > 0.0) {
                return Err(Error::PartialCorrelation {
                    lag: k,
                    value: reflection,
                });
            }
            sigma.push(variance.sqrt());
            prev = row.clone();
            phi.push(row);
        }

        Ok(HoskingSampler {
            h,
            grid,
            phi,
            sigma,
        })
    }

    pub fn hurst(&self) -> HurstParameter {
        self.h
    }

    /// Prediction coefficients for step `k` (predicting `X_k` from the past).
    #[cfg(test)]
    fn coefficients(&self, k: usize) -> &[f64] {
        &self.phi[k - 1]
    }
}

impl PathSampler for HoskingSampler {
    fn method(&self) -> SamplerMethod {
        SamplerMethod::Hosking
    }

    fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    /// Consumes exactly `n` variates, one per increment.
    fn draw(&self, source: &mut GaussianSource) -> Result<SamplePath, Error> {
        let n = self.grid.n();
        let mut noise = Vec::with_capacity(n);
        noise.push(self.sigma[0] * source.next_normal());
        for k in 1..n {
            let row = &self.phi[k - 1];
            // row[j] multiplies X_{k-1-j}
            let mut mean = 0.0;
            for (j, &coef) in row.iter().enumerate() {
                mean += coef * noise[k - 1 - j];
            }
            noise.push(mean + self.sigma[k] * source.next_normal());
        }
        let values = integrate_noise(&self.grid, self.h, &noise);
        SamplePath::new(self.grid.clone(), values)
    }
}
