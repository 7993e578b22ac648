//! Exact sampling through a dense Cholesky factorization of the path
//! covariance at the grid times `t_1 .. t_n`.

use super::{GaussianSource, PathSampler, SamplerMethod, DEFAULT_CHOLESKY_CAP};
use crate::model::{fbm_covariance_unchecked, HurstParameter, SamplePath, TimeGrid};
use crate::Error;

#[derive(Debug)]
pub struct CholeskySampler {
    h: HurstParameter,
    grid: TimeGrid,
    /// Lower-triangular factor, packed row-major: `l[i(i+1)/2 + j]`.
    l: Vec<f64>,
}

impl CholeskySampler {
    pub fn new(h: HurstParameter, grid: TimeGrid) -> Result<Self, Error> {
        Self::with_cap(h, grid, DEFAULT_CHOLESKY_CAP)
    }

    pub fn with_cap(h: HurstParameter, grid: TimeGrid, cap: usize) -> Result<Self, Error> {
        let n = grid.n();
        if n > cap {
            return Err(Error::GridTooLarge { n, cap });
        }
        let times = &grid.points()[1..];
        let mut l = vec![0.0f64; n * (n + 1) / 2];
        let idx = |i: usize, j: usize| i * (i + 1) / 2 + j;
        for i in 0..n {
            for j in 0..=i {
                l[idx(i, j)] = fbm_covariance_unchecked(times[i], times[j], h);
            }
        }
        // In-place lower Cholesky on the packed triangle.
        for j in 0..n {
            let mut d = l[idx(j, j)];
            for k in 0..j {
                d -= l[idx(j, k)] * l[idx(j, k)];
            }
            if !(d > 0.0) {
                return Err(Error::CholeskyPivot { pivot: j });
            }
            let root = d.sqrt();
            l[idx(j, j)] = root;
            for i in (j + 1)..n {
                let mut s = l[idx(i, j)];
                for k in 0..j {
                    s -= l[idx(i, k)] * l[idx(j, k)];
                }
                l[idx(i, j)] = s / root;
            }
        }
        Ok(CholeskySampler { h, grid, l })
    }

    pub fn hurst(&self) -> HurstParameter {
        self.h
    }
}

impl PathSampler for CholeskySampler {
    fn method(&self) -> SamplerMethod {
        SamplerMethod::Cholesky
    }

    fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    /// Consumes exactly `n` variates: `B(t_i) = sum_j L[i][j] z_j`.
    fn draw(&self, source: &mut GaussianSource) -> Result<SamplePath, Error> {
        let n = self.grid.n();
        let mut z = vec![0.0f64; n];
        source.fill_normal(&mut z);
        let mut values = Vec::with_capacity(n + 1);
        values.push(0.0);
        for i in 0..n {
            let row = &self.l[i * (i + 1) / 2..i * (i + 1) / 2 + i + 1];
            let mut acc = 0.0;
            for (lij, zj) in row.iter().zip(&z) {
                acc += lij * zj;
            }
            values.push(acc);
        }
        SamplePath::new(self.grid.clone(), values)
    }
}
