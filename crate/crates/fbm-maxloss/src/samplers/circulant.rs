//! Exact O(n log n) sampling through circulant embedding (Davies–Harte).
//!
//! The unit-spacing fGn autocovariance `c(0..g)` is embedded in a circulant
//! of size `m = 2g`, the smallest power of two at least `2n`. One FFT of the
//! first row yields the eigenvalues; each draw builds a Hermitian vector of
//! weighted normals and one more FFT produces `m` stationary Gaussians with
//! the embedded covariance, of which the first `n` are kept.
//!
//! Theory guarantees a nonnegative-definite embedding for fGn; eigenvalues
//! in `[-1e-10 * max, 0)` are clamped to zero as rounding artifacts and
//! anything below that tolerance is an error.

use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use super::{integrate_noise, GaussianSource, PathSampler, SamplerMethod};
use crate::model::{unit_increment_autocov, HurstParameter, SamplePath, TimeGrid};
use crate::Error;

/// Relative clamp tolerance for slightly negative eigenvalues.
const EIGENVALUE_TOL: f64 = 1e-10;

pub struct CirculantSampler {
    h: HurstParameter,
    grid: TimeGrid,
    /// `sqrt(lambda_k / m)` for the real slots, premultiplied.
    weights: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
    m: usize,
}

impl CirculantSampler {
    pub fn new(h: HurstParameter, grid: TimeGrid) -> Result<Self, Error> {
        let n = grid.n();
        let m = (2 * n).next_power_of_two();
        let g = m / 2;

        // First row of the circulant: c(0), .., c(g), c(g-1), .., c(1).
        let mut row: Vec<Complex<f64>> = Vec::with_capacity(m);
        for k in 0..=g as u64 {
            row.push(Complex::new(unit_increment_autocov(k, h), 0.0));
        }
        for k in (1..g as u64).rev() {
            row.push(Complex::new(unit_increment_autocov(k, h), 0.0));
        }
        debug_assert_eq!(row.len(), m);

        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(m);
        fft.process(&mut row);

        let max_eig = row.iter().map(|c| c.re).fold(f64::NEG_INFINITY, f64::max);
        let tol = EIGENVALUE_TOL * max_eig;
        let mut weights = Vec::with_capacity(m);
        for (index, c) in row.iter().enumerate() {
            let lambda = c.re;
            if lambda < -tol {
                return Err(Error::EmbeddingEigenvalue {
                    index,
                    value: lambda,
                });
            }
            weights.push((lambda.max(0.0) / m as f64).sqrt());
        }

        Ok(CirculantSampler {
            h,
            grid,
            weights,
            fft,
            m,
        })
    }

    pub fn hurst(&self) -> HurstParameter {
        self.h
    }

    /// Embedding size (a power of two, at least `2n`).
    pub fn embedding_size(&self) -> usize {
        self.m
    }
}

impl PathSampler for CirculantSampler {
    fn method(&self) -> SamplerMethod {
        SamplerMethod::Circulant
    }

    fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    /// Consumes exactly `m` variates per draw.
    fn draw(&self, source: &mut GaussianSource) -> Result<SamplePath, Error> {
        let m = self.m;
        let g = m / 2;
        let mut buf = vec![Complex::new(0.0, 0.0); m];

        // Hermitian spectral weights: real at 0 and g, conjugate pairs
        // elsewhere. E|w_j|^2 = lambda_j / m throughout.
        buf[0] = Complex::new(self.weights[0] * source.next_normal(), 0.0);
        buf[g] = Complex::new(self.weights[g] * source.next_normal(), 0.0);
        for j in 1..g {
            let half = self.weights[j] * std::f64::consts::FRAC_1_SQRT_2;
            let re = half * source.next_normal();
            let im = half * source.next_normal();
            buf[j] = Complex::new(re, im);
            buf[m - j] = Complex::new(re, -im);
        }

        self.fft.process(&mut buf);

        let n = self.grid.n();
        let mut noise = Vec::with_capacity(n);
        noise.extend(buf[..n].iter().map(|c| c.re));
        let values = integrate_noise(&self.grid, self.h, &noise);
        SamplePath::new(self.grid.clone(), values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samplers::SeedSpec;

    fn h(v: f64) -> HurstParameter {
        HurstParameter::new(v).unwrap()
    }

    #[test]
    fn embedding_size_is_next_power_of_two() {
        for (n, m) in [(1usize, 2usize), (2, 4), (3, 8), (256, 512), (1000, 2048)] {
            let grid = TimeGrid::new(1.0, n).unwrap();
            let s = CirculantSampler::new(h(0.8), grid).unwrap();
            assert_eq!(s.embedding_size(), m, "n = {n}");
        }
    }

    #[test]
    fn eigenvalues_are_nonnegative_across_hurst_range() {
        for &hv in &[0.05, 0.2, 0.5, 0.7, 0.9, 0.97] {
            for &n in &[4usize, 64, 1024] {
                let grid = TimeGrid::new(1.0, n).unwrap();
                assert!(
                    CirculantSampler::new(h(hv), grid).is_ok(),
                    "H = {hv}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn degenerate_single_step_reduces_to_one_increment() {
        // n = 1: one N(0, dt^2H) increment.
        let grid = TimeGrid::new(1.0, 1).unwrap();
        let sampler = CirculantSampler::new(h(0.7), grid).unwrap();
        let n_reps = 100_000usize;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for rep in 0..n_reps {
            let mut src = GaussianSource::new(SeedSpec::new(303, rep as u64));
            let p = sampler.draw(&mut src).unwrap();
            assert_eq!(p.values().len(), 2);
            let v = p.values()[1];
            sum += v;
            sumsq += v * v;
        }
        let nf = n_reps as f64;
        let mean = sum / nf;
        let var = sumsq / nf - mean * mean;
        assert!(mean.abs() < 3.0 / nf.sqrt());
        assert!((var - 1.0).abs() < 3.0 * (2.0 / nf).sqrt(), "var = {var}");
    }

    #[test]
    fn variates_consumed_equals_embedding_size() {
        let grid = TimeGrid::new(1.0, 48).unwrap();
        let sampler = CirculantSampler::new(h(0.6), grid).unwrap();
        let mut src = GaussianSource::new(SeedSpec::new(1, 0));
        sampler.draw(&mut src).unwrap();
        assert_eq!(src.position(), sampler.embedding_size() as u64);
    }

    #[test]
    fn increment_autocovariance_matches_formula() {
        // Pooled empirical autocovariance of the generated unit-lag noise
        // against rho at a few lags.
        let hp = h(0.8);
        let n = 128usize;
        let grid = TimeGrid::new(n as f64, n).unwrap(); // dt = 1
        let sampler = CirculantSampler::new(hp, grid).unwrap();
        let n_reps = 20_000usize;
        let mut acc = [0.0f64; 5];
        let mut count = [0usize; 5];
        for rep in 0..n_reps {
            let mut src = GaussianSource::new(SeedSpec::new(99, rep as u64));
            let p = sampler.draw(&mut src).unwrap();
            let v = p.values();
            let inc: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
            for lag in 0..5 {
                for i in 0..(inc.len() - lag) {
                    acc[lag] += inc[i] * inc[i + lag];
                    count[lag] += 1;
                }
            }
        }
        for lag in 0..5 {
            let emp = acc[lag] / count[lag] as f64;
            let theory = unit_increment_autocov(lag as u64, hp);
            assert!(
                (emp - theory).abs() < 0.01,
                "lag {lag}: {emp} vs {theory}"
            );
        }
    }
}
