//! Approximate sampling from the moving-average integral representation
//!
//! ```text
//! B_t = (1/Gamma(H + 1/2)) * Int ((t - s)_+^(H-1/2) - (-s)_+^(H-1/2)) dW_s
//! ```
//!
//! discretized with a midpoint rule at the grid resolution and the history
//! integral truncated at `-burn_in`. The truncation and quadrature make this
//! sampler deliberately approximate; it exists to cross-validate the exact
//! methods from an independent construction and is only supported for
//! `H >= 1/2`, where the kernel has no singularity at the origin.

use super::{GaussianSource, PathSampler, SamplerMethod};
use crate::math::gamma;
use crate::model::{HurstParameter, SamplePath, TimeGrid};
use crate::Error;

#[derive(Debug)]
pub struct TruncatedMaSampler {
    grid: TimeGrid,
    burn_in: f64,
    /// Kernel weights, row `i` holds the quadrature coefficients of `B(t_i)`
    /// against the noise cells; rows are packed contiguously.
    kernel: Vec<f64>,
    cells: usize,
}

fn pos_pow(x: f64, p: f64) -> f64 {
    if x > 0.0 {
        x.powf(p)
    } else {
        0.0
    }
}

impl TruncatedMaSampler {
    pub fn new(h: HurstParameter, grid: TimeGrid, burn_in: f64) -> Result<Self, Error> {
        if !h.is_persistent() {
            return Err(Error::HurstBelowHalf { value: h.value() });
        }
        if !(burn_in >= 10.0 * grid.horizon()) {
            return Err(Error::BurnInTooShort {
                burn_in,
                horizon: grid.horizon(),
            });
        }
        let n = grid.n();
        let dt = grid.dt();
        let history_cells = (burn_in / dt).round() as usize;
        let cells = history_cells + n;
        let exponent = h.value() - 0.5;
        let norm = dt.sqrt() / gamma(h.value() + 0.5);

        // Midpoints s_k = -burn + (k + 1/2) dt; each dW over a cell is
        // sqrt(dt) * xi_k, folded into the weights.
        let start = -(history_cells as f64) * dt;
        let mut kernel = vec![0.0f64; (n + 1) * cells];
        for (i, &t_i) in grid.points().iter().enumerate() {
            let row = &mut kernel[i * cells..(i + 1) * cells];
            for (k, w) in row.iter_mut().enumerate() {
                let s = start + (k as f64 + 0.5) * dt;
                *w = norm * (pos_pow(t_i - s, exponent) - pos_pow(-s, exponent));
            }
        }

        Ok(TruncatedMaSampler {
            grid,
            burn_in,
            kernel,
            cells,
        })
    }

    pub fn burn_in(&self) -> f64 {
        self.burn_in
    }
}

impl PathSampler for TruncatedMaSampler {
    fn method(&self) -> SamplerMethod {
        SamplerMethod::TruncatedMa
    }

    fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    fn draw(&self, source: &mut GaussianSource) -> Result<SamplePath, Error> {
        let mut noise = vec![0.0f64; self.cells];
        source.fill_normal(&mut noise);
        let n = self.grid.n();
        let mut values = Vec::with_capacity(n + 1);
        values.push(0.0);
        for i in 1..=n {
            let row = &self.kernel[i * self.cells..(i + 1) * self.cells];
            let mut acc = 0.0;
            for (w, z) in row.iter().zip(&noise) {
                acc += w * z;
            }
            values.push(acc);
        }
        SamplePath::new(self.grid.clone(), values)
    }
}
