//! Ratio of the empirical tail to the reference normal tail
//! `Phibar(x / t^H)`, reported where the tail has enough data.

use super::{simulate_losses, tail_records, ExperimentConfig, MIN_EXCEED};
use crate::bounds::talagrand_reference;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    pub x: f64,
    /// `p_hat(x) / Phibar(x / t^H)`.
    pub ratio: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub exceed_count: u64,
}

pub(crate) fn ratio_curve_from_losses(
    losses: &[f64],
    config: &ExperimentConfig,
) -> Result<Vec<RatioPoint>, Error> {
    let t = config.params.horizon;
    let h = config.params.h;
    tail_records(losses, &config.x_grid, config.confidence)
        .iter()
        .filter(|r| r.x.is_some_and(|x| x > 0.0))
        .filter(|r| r.exceed_count.is_some_and(|c| c >= MIN_EXCEED))
        .map(|r| {
            let x = r.x.unwrap();
            let denom = talagrand_reference(x, t, h)?;
            Ok(RatioPoint {
                x,
                ratio: r.estimate / denom,
                ci_low: r.ci_low / denom,
                ci_high: r.ci_high / denom,
                exceed_count: r.exceed_count.unwrap(),
            })
        })
        .collect()
}

/// Estimate `P(M > x) / Phibar(x / t^H)` along the x grid for the standard
/// process. Sparse tails simply yield shorter curves.
pub fn talagrand_ratio_curve(config: &ExperimentConfig) -> Result<Vec<RatioPoint>, Error> {
    config.validate()?;
    if !config.params.is_standard() {
        return Err(Error::config(
            "ratio curves are defined for the standard process (mu = 0, sigma = 1)",
        ));
    }
    if config.x_grid.is_empty() {
        return Err(Error::config("ratio curves need a nonempty x_grid"));
    }
    let losses = simulate_losses(config)?;
    ratio_curve_from_losses(&losses, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{HurstParameter, ProcessParams};
    use crate::samplers::SamplerMethod;

    fn config() -> ExperimentConfig {
        ExperimentConfig {
            params: ProcessParams::new(HurstParameter::new(0.5).unwrap(), 0.0, 1.0, 1.0)
                .unwrap(),
            n: 128,
            reps: 20_000,
            method: SamplerMethod::Circulant,
            seed: 606,
            x_grid: vec![0.05, 0.5, 1.0, 1.5, 2.0, 5.0],
            confidence: 0.99,
        }
    }

    #[test]
    fn ratio_respects_the_lower_bound_and_filters_sparse_levels() {
        let curve = talagrand_ratio_curve(&config()).unwrap();
        // x = 5 has essentially no exceedances at 2e4 reps and must be gone.
        assert!(curve.iter().all(|p| p.x < 5.0));
        for p in &curve {
            assert!(p.exceed_count >= MIN_EXCEED);
            assert!(p.ci_low <= p.ratio && p.ratio <= p.ci_high);
            // The Gaussian lower bound forces the ratio to at least 1.
            assert!(
                p.ci_high >= 1.0,
                "ratio CI entirely below 1 at x = {}: [{}, {}]",
                p.x,
                p.ci_low,
                p.ci_high
            );
        }
    }

    #[test]
    fn near_zero_the_ratio_doubles_the_probability() {
        // Phibar(0+) = 1/2, so ratio ~ 2 p_hat there.
        let c = config();
        let losses = simulate_losses(&c).unwrap();
        let p_hat = losses.iter().filter(|&&m| m > 0.05).count() as f64 / losses.len() as f64;
        let curve = talagrand_ratio_curve(&c).unwrap();
        let first = &curve[0];
        assert_eq!(first.x, 0.05);
        assert!(p_hat > 0.99, "p_hat = {p_hat}");
        assert!(
            (first.ratio - 2.0 * p_hat).abs() < 0.05 * first.ratio,
            "ratio {} vs 2 p_hat {}",
            first.ratio,
            2.0 * p_hat
        );
    }

    #[test]
    fn drift_configs_are_rejected() {
        let mut c = config();
        c.params.mu = 0.2;
        assert!(talagrand_ratio_curve(&c).is_err());
    }
}
