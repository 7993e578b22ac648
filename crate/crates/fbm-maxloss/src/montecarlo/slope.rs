//! Tail-slope fits: the empirical counterpart of the limit
//! `(1/x^2) log P(M > x) -> -1/(2 sigma^2 t^2H)`.

use super::{simulate_losses, tail_records, ExperimentConfig, MIN_EXCEED};
use crate::bounds::asymptotic_slope;
use crate::Error;

/// One qualifying tail point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopePoint {
    pub x: f64,
    pub p_hat: f64,
    pub exceed_count: u64,
    /// `(1/x^2) log p_hat`.
    pub pointwise: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedSlope {
    /// Least-squares slope of `log p_hat` against `x^2`.
    pub slope: f64,
    pub r_squared: f64,
}

/// Pointwise log-tail values and, when at least three points qualify, the
/// fitted slope. `fit` stays `None` on insufficient data; a fit is never
/// fabricated from noise.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    /// Smallest and largest qualifying x.
    pub x_window: Option<(f64, f64)>,
    pub pointwise: Vec<SlopePoint>,
    pub fit: Option<FittedSlope>,
    /// `-1/(2 sigma^2 t^2H)` for comparison.
    pub theory_slope: f64,
    pub min_exceed: u64,
}

pub(crate) fn slope_fit_from_losses(
    losses: &[f64],
    config: &ExperimentConfig,
) -> Result<SlopeFit, Error> {
    let records = tail_records(losses, &config.x_grid, config.confidence);
    let pointwise: Vec<SlopePoint> = records
        .iter()
        .filter(|r| r.x.is_some_and(|x| x > 0.0))
        .filter(|r| r.exceed_count.is_some_and(|c| c >= MIN_EXCEED))
        .map(|r| {
            let x = r.x.unwrap();
            SlopePoint {
                x,
                p_hat: r.estimate,
                exceed_count: r.exceed_count.unwrap(),
                pointwise: r.estimate.ln() / (x * x),
            }
        })
        .collect();

    let theory_slope = asymptotic_slope(
        config.params.horizon,
        config.params.h,
        config.params.sigma,
    )?;

    let x_window = match (pointwise.first(), pointwise.last()) {
        (Some(a), Some(b)) => Some((a.x, b.x)),
        _ => None,
    };

    let fit = if pointwise.len() >= 3 {
        Some(least_squares(&pointwise))
    } else {
        None
    };

    Ok(SlopeFit {
        x_window,
        pointwise,
        fit,
        theory_slope,
        min_exceed: MIN_EXCEED,
    })
}

fn least_squares(points: &[SlopePoint]) -> FittedSlope {
    let n = points.len() as f64;
    let zs: Vec<f64> = points.iter().map(|p| p.x * p.x).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.p_hat.ln()).collect();
    let z_mean = zs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let mut szz = 0.0;
    let mut szy = 0.0;
    let mut syy = 0.0;
    for (z, y) in zs.iter().zip(&ys) {
        szz += (z - z_mean) * (z - z_mean);
        szy += (z - z_mean) * (y - y_mean);
        syy += (y - y_mean) * (y - y_mean);
    }
    FittedSlope {
        slope: szy / szz,
        r_squared: if syy > 0.0 { szy * szy / (szz * syy) } else { 1.0 },
    }
}

/// Estimate tail probabilities on the config's x grid and fit the log-tail
/// slope over the levels with at least [`MIN_EXCEED`] exceedances.
pub fn fit_tail_slope(config: &ExperimentConfig) -> Result<SlopeFit, Error> {
    config.validate()?;
    if config.x_grid.is_empty() {
        return Err(Error::config("slope fitting needs a nonempty x_grid"));
    }
    let losses = simulate_losses(config)?;
    slope_fit_from_losses(&losses, config)
}
