//! Process parameterization, time grids, the fBm covariance kernel, and
//! path-level transforms.
//!
//! A standard fractional Brownian motion with Hurst index `H` is the centered
//! Gaussian process with covariance
//!
//! ```text
//! cov(s, t) = (t^2H + s^2H - |t - s|^2H) / 2
//! ```
//!
//! started at zero. Everything in this module is a pure function of its
//! inputs; values are immutable after construction and freely shareable
//! across threads.

use crate::Error;

/// Hurst index in the open interval (0, 1).
///
/// Simulation is valid on the whole interval. The closed-form bounds on the
/// maximum loss are stated for `H >= 1/2` only and refuse smaller values;
/// [`HurstParameter::is_persistent`] exposes that threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurstParameter(f64);

impl HurstParameter {
    pub fn new(value: f64) -> Result<Self, Error> {
        if !(value > 0.0 && value < 1.0) {
            return Err(Error::HurstOutOfRange { value });
        }
        Ok(HurstParameter(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// True iff `H >= 1/2`: increments are nonnegatively correlated and the
    /// closed-form bounds apply.
    pub fn is_persistent(&self) -> bool {
        self.0 >= 0.5
    }

    /// `2H`, the exponent that shows up in every variance formula.
    pub(crate) fn two_h(&self) -> f64 {
        2.0 * self.0
    }
}

impl std::fmt::Display for HurstParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Uniform grid of `n + 1` points from 0 to `horizon` inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    horizon: f64,
    n: usize,
    points: Vec<f64>,
}

impl TimeGrid {
    pub fn new(horizon: f64, n: usize) -> Result<Self, Error> {
        if !(horizon > 0.0) {
            return Err(Error::NonPositive {
                what: "horizon",
                value: horizon,
            });
        }
        if n == 0 {
            return Err(Error::EmptyGrid);
        }
        let points = (0..=n)
            .map(|i| horizon * (i as f64 / n as f64))
            .collect();
        Ok(TimeGrid { horizon, n, points })
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// Number of steps; the grid has `n + 1` points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Step width `horizon / n`.
    pub fn dt(&self) -> f64 {
        self.horizon / self.n as f64
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// Drift/diffusion parameterization `Y_t = mu t + sigma B_t` on `[0, horizon]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProcessParams {
    pub h: HurstParameter,
    pub mu: f64,
    pub sigma: f64,
    pub horizon: f64,
}

impl ProcessParams {
    pub fn new(h: HurstParameter, mu: f64, sigma: f64, horizon: f64) -> Result<Self, Error> {
        if !(sigma > 0.0) {
            return Err(Error::NonPositive {
                what: "sigma",
                value: sigma,
            });
        }
        if !(horizon > 0.0) {
            return Err(Error::NonPositive {
                what: "horizon",
                value: horizon,
            });
        }
        Ok(ProcessParams {
            h,
            mu,
            sigma,
            horizon,
        })
    }

    /// Standard process: zero drift, unit diffusion.
    pub fn is_standard(&self) -> bool {
        self.mu == 0.0 && self.sigma == 1.0
    }
}

/// A realized path on a [`TimeGrid`].
///
/// Sampler output is anchored at zero ([`SamplePath::new`] enforces it).
/// The geometric price transform is the one construction that starts
/// elsewhere; it goes through [`SamplePath::from_parts`].
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePath {
    grid: TimeGrid,
    values: Vec<f64>,
}

impl SamplePath {
    /// A zero-anchored path; rejects empty values, a nonzero start, or a
    /// length mismatch with the grid.
    pub fn new(grid: TimeGrid, values: Vec<f64>) -> Result<Self, Error> {
        match values.first() {
            None => return Err(Error::EmptyPath),
            Some(&v0) if v0 != 0.0 => return Err(Error::UnanchoredPath { value: v0 }),
            _ => {}
        }
        Self::from_parts(grid, values)
    }

    /// A path that may start away from zero (price paths start at `y0`).
    pub fn from_parts(grid: TimeGrid, values: Vec<f64>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyPath);
        }
        if values.len() != grid.points().len() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                points: grid.points().len(),
            });
        }
        Ok(SamplePath { grid, values })
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// fBm covariance `cov(B_s, B_t) = (t^2H + s^2H - |t-s|^2H) / 2`.
///
/// Symmetric in `(s, t)`; reduces to `min(s, t)` at `H = 1/2`. The diagonal
/// is computed directly as `t^2H` so it is exact.
pub fn fbm_covariance(s: f64, t: f64, h: HurstParameter) -> Result<f64, Error> {
    if s < 0.0 {
        return Err(Error::NegativeTime { value: s });
    }
    if t < 0.0 {
        return Err(Error::NegativeTime { value: t });
    }
    Ok(fbm_covariance_unchecked(s, t, h))
}

/// As [`fbm_covariance`] but assuming `s, t >= 0` (grid times are).
pub(crate) fn fbm_covariance_unchecked(s: f64, t: f64, h: HurstParameter) -> f64 {
    let two_h = h.two_h();
    if s == t {
        return t.powf(two_h);
    }
    0.5 * (t.powf(two_h) + s.powf(two_h) - (t - s).abs().powf(two_h))
}

/// Autocovariance of fBm increments at step width `lag_h` and integer lag `n`:
/// `rho(n) = lag_h^2H * [(n+1)^2H + (n-1)^2H - 2 n^2H] / 2` for `n >= 1`, and
/// the single-increment variance `lag_h^2H` at `n = 0`.
///
/// Positive for `H > 1/2`, zero for `H = 1/2`, negative for `H < 1/2`
/// (all lags `n >= 1`).
pub fn increment_autocov(n: u64, lag_h: f64, h: HurstParameter) -> Result<f64, Error> {
    if !(lag_h > 0.0) {
        return Err(Error::NonPositive {
            what: "lag_h",
            value: lag_h,
        });
    }
    Ok(lag_h.powf(h.two_h()) * unit_increment_autocov(n, h))
}

/// Autocovariance of unit-spacing increments; the `lag_h^2H` prefactor is
/// what [`increment_autocov`] adds. Samplers work at unit spacing and scale
/// once at the end.
pub(crate) fn unit_increment_autocov(n: u64, h: HurstParameter) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let two_h = h.two_h();
    let nf = n as f64;
    0.5 * ((nf + 1.0).powf(two_h) + (nf - 1.0).powf(two_h) - 2.0 * nf.powf(two_h))
}

/// Self-similarity rescale: times multiplied by `c`, values by `c^H`.
///
/// The output is distributionally identical to a fresh sample on the scaled
/// grid, and its path statistics scale exactly by `c^H`.
pub fn rescale_path(path: &SamplePath, c: f64, h: HurstParameter) -> Result<SamplePath, Error> {
    if !(c > 0.0) {
        return Err(Error::NonPositive { what: "c", value: c });
    }
    let grid = TimeGrid::new(path.grid().horizon() * c, path.grid().n())?;
    let factor = c.powf(h.value());
    let values = path.values().iter().map(|&v| factor * v).collect();
    SamplePath::new(grid, values)
}

/// Drift/diffusion transform `Y_t = mu t + sigma B_t` applied pointwise.
pub fn to_drift_diffusion(path: &SamplePath, params: &ProcessParams) -> SamplePath {
    let values = path
        .grid()
        .points()
        .iter()
        .zip(path.values())
        .map(|(&t, &b)| params.mu * t + params.sigma * b)
        .collect();
    SamplePath {
        grid: path.grid().clone(),
        values,
    }
}

/// Geometric price transform `y0 * exp((r + mu) t + sigma B_t)`.
///
/// Output values are strictly positive and start at `y0`, not zero.
pub fn to_price_path(
    path: &SamplePath,
    y0: f64,
    r: f64,
    mu: f64,
    sigma: f64,
) -> Result<SamplePath, Error> {
    if !(y0 > 0.0) {
        return Err(Error::NonPositive {
            what: "y0",
            value: y0,
        });
    }
    if !(sigma > 0.0) {
        return Err(Error::NonPositive {
            what: "sigma",
            value: sigma,
        });
    }
    let values = path
        .grid()
        .points()
        .iter()
        .zip(path.values())
        .map(|(&t, &b)| y0 * ((r + mu) * t + sigma * b).exp())
        .collect();
    SamplePath::from_parts(path.grid().clone(), values)
}
