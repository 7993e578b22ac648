//! Closed-form bounds and asymptotics for the maximum-loss distribution.
//!
//! For a standard fBm with `H >= 1/2` on `[0, a]`, the expected maximum loss
//! sits in the sandwich `sqrt(2) a^H / (2 sqrt(pi)) <= E[M] <= 2 sqrt(2) a^H /
//! sqrt(pi)`, and the tail obeys three envelopes: a Markov upper bound
//! `2 sqrt(2) a^H / (y sqrt(pi))`, a Gaussian lower bound `Phibar(x / t^H)`,
//! and a concentration upper bound `2 exp(-(x - eta)^2 / (2 t^2H))` valid for
//! `x > eta >= E[M]`. Both exponential envelopes share the limit slope
//! `(1/x^2) log P(M > x) -> -1 / (2 sigma^2 t^2H)`.
//!
//! Probabilities are reported clipped to [0, 1]; `_raw` and `ln_` variants
//! expose unclipped values for slope work.

use crate::math::{ln_normal_upper_tail, normal_upper_tail};
use crate::model::HurstParameter;
use crate::Error;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// `sqrt(2) / (2 sqrt(pi))`: the lower sandwich coefficient.
fn lower_coeff() -> f64 {
    SQRT_2 / (2.0 * std::f64::consts::PI.sqrt())
}

/// Sandwich on the expected maximum loss; `upper = 4 * lower` identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedLossBounds {
    pub lower: f64,
    pub upper: f64,
    pub horizon: f64,
    pub h: HurstParameter,
}

fn require_persistent(h: HurstParameter) -> Result<(), Error> {
    if h.is_persistent() {
        Ok(())
    } else {
        Err(Error::HurstBelowHalf { value: h.value() })
    }
}

fn require_positive(what: &'static str, value: f64) -> Result<(), Error> {
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositive { what, value })
    }
}

/// Sandwich on `E[M]` over `[0, a]`: `[sqrt(2)/(2 sqrt(pi)), 2 sqrt(2)/sqrt(pi)] * a^H`.
pub fn expected_maxloss_bounds(a: f64, h: HurstParameter) -> Result<ExpectedLossBounds, Error> {
    require_positive("horizon", a)?;
    require_persistent(h)?;
    let scale = a.powf(h.value());
    let lower = lower_coeff() * scale;
    Ok(ExpectedLossBounds {
        lower,
        upper: 4.0 * lower,
        horizon: a,
        h,
    })
}

/// Sandwich on the expected supremum: `[sqrt(2)/(2 sqrt(pi)), sqrt(2)/sqrt(pi)] * a^H`.
pub fn expected_sup_bounds(a: f64, h: HurstParameter) -> Result<(f64, f64), Error> {
    require_positive("horizon", a)?;
    require_persistent(h)?;
    let lower = lower_coeff() * a.powf(h.value());
    Ok((lower, 2.0 * lower))
}

/// Markov tail bound `P(M > y) <= 2 sqrt(2) a^H / (y sqrt(pi))`, unclipped.
pub fn tail_markov_upper_raw(a: f64, h: HurstParameter, y: f64) -> Result<f64, Error> {
    require_positive("horizon", a)?;
    require_persistent(h)?;
    require_positive("y", y)?;
    Ok(4.0 * lower_coeff() * a.powf(h.value()) / y)
}

/// Markov tail bound clipped to [0, 1].
pub fn tail_markov_upper(a: f64, h: HurstParameter, y: f64) -> Result<f64, Error> {
    Ok(tail_markov_upper_raw(a, h, y)?.min(1.0))
}

/// Gaussian lower bound `P(M > x) >= Phibar(x / t^H)`.
pub fn tail_gaussian_lower(t: f64, h: HurstParameter, x: f64) -> Result<f64, Error> {
    require_positive("t", t)?;
    require_positive("x", x)?;
    Ok(normal_upper_tail(x / t.powf(h.value())))
}

/// Log of the Gaussian lower bound, finite for arbitrarily large `x`.
pub fn ln_tail_gaussian_lower(t: f64, h: HurstParameter, x: f64) -> Result<f64, Error> {
    require_positive("t", t)?;
    require_positive("x", x)?;
    Ok(ln_normal_upper_tail(x / t.powf(h.value())))
}

/// The certified `eta` used by the concentration bound when none is given:
/// the sandwich upper bound on `E[M]`, so no statistical error enters.
pub fn default_eta(t: f64, h: HurstParameter) -> Result<f64, Error> {
    Ok(expected_maxloss_bounds(t, h)?.upper)
}

/// Concentration upper bound `P(M > x) <= 2 exp(-(x - eta)^2 / (2 t^2H))`,
/// unclipped; requires `x > eta` and any `eta >= E[M]`.
pub fn tail_borel_upper_raw(t: f64, h: HurstParameter, x: f64, eta: f64) -> Result<f64, Error> {
    require_positive("t", t)?;
    require_persistent(h)?;
    if eta < 0.0 {
        return Err(Error::NonPositive {
            what: "eta",
            value: eta,
        });
    }
    if x <= eta {
        return Err(Error::BelowEta { x, eta });
    }
    let d = x - eta;
    Ok(2.0 * (-d * d / (2.0 * t.powf(h.two_h()))).exp())
}

/// Concentration upper bound clipped to [0, 1].
pub fn tail_borel_upper(t: f64, h: HurstParameter, x: f64, eta: f64) -> Result<f64, Error> {
    Ok(tail_borel_upper_raw(t, h, x, eta)?.min(1.0))
}

/// Log of the unclipped concentration bound: `ln 2 - (x - eta)^2 / (2 t^2H)`.
pub fn ln_tail_borel_upper(t: f64, h: HurstParameter, x: f64, eta: f64) -> Result<f64, Error> {
    require_positive("t", t)?;
    require_persistent(h)?;
    if x <= eta {
        return Err(Error::BelowEta { x, eta });
    }
    let d = x - eta;
    Ok((2.0f64).ln() - d * d / (2.0 * t.powf(h.two_h())))
}

/// Limit of `(1/x^2) log P(M > x)`: `-1 / (2 sigma^2 t^2H)`.
pub fn asymptotic_slope(t: f64, h: HurstParameter, sigma: f64) -> Result<f64, Error> {
    require_positive("t", t)?;
    require_positive("sigma", sigma)?;
    Ok(-1.0 / (2.0 * sigma * sigma * t.powf(h.two_h())))
}

/// Where the lower-bound exponent `f(v) = (x + mu v) / (sigma v^H)` attains
/// its minimum on `(0, t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimizerRegime {
    /// `mu > 0` with `x < t mu (1-H)/H`: minimum at `v* = x H / (mu (1-H))`.
    Interior,
    /// All other cases: minimum at the endpoint `t`.
    EndpointT,
}

/// Case analysis for the drift/diffusion lower bound
/// `P(M > x) >= Phibar(f(minimizer))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftTailAnalysis {
    /// Critical point `x H / (mu (1-H))`, defined when `mu > 0`.
    pub v_star: Option<f64>,
    /// Argmin of `f` on `(0, t]`.
    pub minimizer: f64,
    /// `Phibar((x + mu * minimizer) / (sigma * minimizer^H))`.
    pub bound: f64,
    pub regime: MinimizerRegime,
}

/// Minimize `f(v) = (x + mu v) / (sigma v^H)` over `(0, t]` and evaluate the
/// induced tail lower bound. The boundary case `x = t mu (1-H)/H` resolves to
/// the endpoint (where `v* = t`, so the two branches agree).
pub fn drift_minimizer(
    t: f64,
    h: HurstParameter,
    mu: f64,
    x: f64,
    sigma: f64,
) -> Result<DriftTailAnalysis, Error> {
    require_positive("t", t)?;
    require_positive("x", x)?;
    require_positive("sigma", sigma)?;
    let hv = h.value();
    let v_star = if mu > 0.0 {
        Some(x * hv / (mu * (1.0 - hv)))
    } else {
        None
    };
    let (minimizer, regime) = match v_star {
        Some(v) if x < t * mu * (1.0 - hv) / hv => (v, MinimizerRegime::Interior),
        _ => (t, MinimizerRegime::EndpointT),
    };
    let bound = normal_upper_tail((x + mu * minimizer) / (sigma * minimizer.powf(hv)));
    Ok(DriftTailAnalysis {
        v_star,
        minimizer,
        bound,
        regime,
    })
}

/// `E[B_t (B_u - B_v)] = (v^2H - u^2H + (t-u)^2H - (t-v)^2H) / 2` for
/// `0 <= u <= v <= t`. Attains its maximum `t^2H` uniquely at `(0, t)`.
pub fn endpoint_covariance(u: f64, v: f64, t: f64, h: HurstParameter) -> Result<f64, Error> {
    if !(0.0 <= u && u <= v && v <= t) {
        return Err(Error::TimeOrdering { u, v, t });
    }
    let two_h = h.two_h();
    Ok(0.5 * (v.powf(two_h) - u.powf(two_h) + (t - u).powf(two_h) - (t - v).powf(two_h)))
}

/// Exhaustive lattice scan of the near-maximizer set
/// `{(u, v): E[B_t (B_u - B_v)] >= t^2H - h^2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThScanResult {
    pub t: f64,
    pub h_param: f64,
    pub grid_n: usize,
    /// Lattice pairs `(u, v)` inside the set, `u <= v`.
    pub members: Vec<(f64, f64)>,
    /// `max over members of (t - v)`.
    pub max_gap: f64,
    /// The explicit constant `K = 2 t^(1-2H) / H` in the containment check.
    pub k_bound: f64,
    /// True iff every member satisfies `v >= t - K h^2`.
    pub containment: bool,
    /// True iff `(0, t)` is the only lattice pair attaining the maximum.
    pub unique_maximizer: bool,
}

/// Enumerate all `(u, v)` pairs with `u <= v` on a uniform lattice and
/// classify membership in the near-maximizer set.
///
/// Convexity of `v^2H` for `H >= 1/2` gives `t - v <= h^2 t^(1-2H) / H` to
/// first order for members; the factor-2 slack makes the check exact on the
/// whole admissible range `h^2 < t^2H / 2`.
pub fn th_scan(
    t: f64,
    h: HurstParameter,
    h_param: f64,
    grid_n: usize,
) -> Result<ThScanResult, Error> {
    require_positive("t", t)?;
    require_positive("h_param", h_param)?;
    if grid_n < 16 {
        return Err(Error::config(format!(
            "th-scan grid_n must be at least 16, got {grid_n}"
        )));
    }
    let sigma_sq = t.powf(h.two_h());
    if !(h_param * h_param < sigma_sq / 2.0) {
        return Err(Error::config(format!(
            "h_param^2 = {} must be below t^2H / 2 = {}",
            h_param * h_param,
            sigma_sq / 2.0
        )));
    }

    let threshold = sigma_sq - h_param * h_param;
    let k_bound = 2.0 * t.powf(1.0 - h.two_h()) / h.value();
    let mut members = Vec::new();
    let mut max_gap = 0.0f64;
    let mut containment = true;
    let mut maximum_count = 0usize;

    for i in 0..=grid_n {
        let u = t * (i as f64 / grid_n as f64);
        for j in i..=grid_n {
            let v = t * (j as f64 / grid_n as f64);
            let cov = endpoint_covariance(u, v, t, h)?;
            if cov >= sigma_sq {
                maximum_count += 1;
            }
            if cov >= threshold {
                max_gap = max_gap.max(t - v);
                if v < t - k_bound * h_param * h_param {
                    containment = false;
                }
                members.push((u, v));
            }
        }
    }

    Ok(ThScanResult {
        t,
        h_param,
        grid_n,
        members,
        max_gap,
        k_bound,
        containment,
        unique_maximizer: maximum_count == 1,
    })
}

/// Reference normal tail `Phibar(x / t^H)` for ratio curves.
pub fn talagrand_reference(x: f64, t: f64, h: HurstParameter) -> Result<f64, Error> {
    require_positive("x", x)?;
    require_positive("t", t)?;
    Ok(normal_upper_tail(x / t.powf(h.value())))
}
