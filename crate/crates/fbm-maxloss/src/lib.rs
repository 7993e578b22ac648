//! Exact simulation of fractional Brownian motion together with maximum-loss
//! (drawdown) analytics: single-pass path statistics, closed-form tail bounds,
//! and a seeded Monte Carlo harness that verifies every bound empirically.
//!
//! The crate is organized around five layers:
//!
//! * [`model`] — process parameterization ([`HurstParameter`], [`ProcessParams`]),
//!   uniform time grids, the fBm covariance kernel, and path-level transforms
//!   (self-similarity rescale, drift/diffusion, geometric price).
//! * [`samplers`] — exact path generators (Cholesky, Hosking/Durbin–Levinson,
//!   circulant embedding) plus an approximate moving-average cross-check, all
//!   driven by a reproducible seeded Gaussian stream.
//! * [`stats`] — supremum, infimum, range, maximum loss, and the running loss
//!   series, computed in one pass.
//! * [`bounds`] — every closed-form bound and asymptotic on the maximum-loss
//!   distribution, plus the near-maximizer covariance scan.
//! * [`montecarlo`] — replication-parallel estimation with Wilson intervals,
//!   tail-slope fits, ratio curves, and bound-verification reports.
//!
//! ```
//! use fbm_maxloss::prelude::*;
//!
//! let h = HurstParameter::new(0.7)?;
//! let grid = TimeGrid::new(1.0, 256)?;
//! let mut source = GaussianSource::new(SeedSpec::new(42, 0));
//! let path = sample_circulant(h, &grid, &mut source)?;
//! let stats = compute_stats(&path);
//! assert!(stats.max_loss >= -stats.inf && stats.max_loss <= stats.range);
//! # Ok::<(), fbm_maxloss::Error>(())
//! ```

pub mod bounds;
mod error;
pub mod math;
pub mod model;
pub mod montecarlo;
pub mod samplers;
pub mod stats;

pub use error::Error;
pub use model::{HurstParameter, ProcessParams, SamplePath, TimeGrid};
pub use samplers::{GaussianSource, SamplerMethod, SeedSpec};
pub use stats::{compute_stats, loss_series, LossSeries, PathStatistics};

/// Everything most callers need.
pub mod prelude {
    pub use crate::bounds::{
        asymptotic_slope, drift_minimizer, expected_maxloss_bounds, expected_sup_bounds,
        tail_borel_upper, tail_gaussian_lower, tail_markov_upper, talagrand_reference,
    };
    pub use crate::model::{
        fbm_covariance, increment_autocov, rescale_path, to_drift_diffusion, to_price_path,
        HurstParameter, ProcessParams, SamplePath, TimeGrid,
    };
    pub use crate::montecarlo::ExperimentConfig;
    pub use crate::samplers::{
        sample_cholesky, sample_circulant, sample_hosking, sample_truncated_ma, GaussianSource,
        SamplerMethod, SeedSpec,
    };
    pub use crate::stats::{compute_stats, loss_series, PathStatistics};
    pub use crate::Error;
}
