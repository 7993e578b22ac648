//! Normal distribution primitives shared by the bounds and the harness.
//!
//! The upper tail is evaluated through the complementary error function,
//! which keeps relative accuracy around 1e-15 on the whole range where the
//! result is representable; the log-tail switches to the Mills-ratio
//! asymptotic expansion once `erfc` would underflow, so slope computations
//! stay finite at arbitrarily large arguments.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Upper tail of the standard normal distribution.
pub fn normal_upper_tail(x: f64) -> f64 {
    0.5 * libm::erfc(x * FRAC_1_SQRT_2)
}

/// Standard normal density.
pub fn normal_density(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Natural log of the normal upper tail, valid for arbitrarily large `x`.
///
/// Below the switch point this is `ln(erfc(x/sqrt(2))/2)`; beyond it the
/// Mills-ratio expansion is used so the value never hits `ln(0)`.
pub fn ln_normal_upper_tail(x: f64) -> f64 {
    const SWITCH: f64 = 30.0;
    if x <= SWITCH {
        normal_upper_tail(x).ln()
    } else {
        let r2 = 1.0 / (x * x);
        // 1 - 1/x^2 + 3/x^4 - 15/x^6 + 105/x^8, error O(x^-10)
        let series = 1.0 + r2 * (-1.0 + r2 * (3.0 + r2 * (-15.0 + r2 * 105.0)));
        -0.5 * x * x - x.ln() - 0.5 * (2.0 * PI).ln() + series.ln()
    }
}

/// Inverse of the standard normal CDF (Beasley–Springer–Moro).
///
/// Absolute error stays below ~3e-9 for p in [1e-12, 1 - 1e-12], which is
/// the variate-generation workhorse. Use [`normal_quantile`] where full
/// double precision matters.
pub fn inverse_normal_cdf(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    const A: [f64; 4] = [
        2.50662823884,
        -18.61500062529,
        41.39119773534,
        -25.44106049637,
    ];
    const B: [f64; 4] = [
        -8.47351093090,
        23.08336743743,
        -21.06224101826,
        3.13082909833,
    ];
    const C: [f64; 9] = [
        0.3374754822726147,
        0.9761690190917186,
        0.1607979714918209,
        0.0276438810333863,
        0.0038405729373609,
        0.0003951896511919,
        0.0000321767881768,
        0.0000002888167364,
        0.0000003960315187,
    ];

    let u = p - 0.5;
    if u.abs() < 0.42 {
        let r = u * u;
        let num = u * (((A[3] * r + A[2]) * r + A[1]) * r + A[0]);
        let den = (((B[3] * r + B[2]) * r + B[1]) * r + B[0]) * r + 1.0;
        return num / den;
    }
    let r = if u < 0.0 { p } else { 1.0 - p };
    let k = (-r.ln()).ln();
    let mut x = C[8];
    for i in (0..8).rev() {
        x = x * k + C[i];
    }
    if u < 0.0 {
        -x
    } else {
        x
    }
}

/// Full-precision normal quantile: the Moro start refined by Newton steps
/// through `erfc`. Used for confidence-interval multipliers.
///
/// Newton runs on the tail side (`upper_tail(y) = p` with `p <= 1/2`), where
/// the residual is free of cancellation.
pub fn normal_quantile(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    if p > 0.5 {
        return -normal_quantile(1.0 - p);
    }
    let mut y = -inverse_normal_cdf(p); // y >= 0 solves upper_tail(y) = p
    for _ in 0..3 {
        let f = normal_upper_tail(y) - p;
        y += f / normal_density(y);
    }
    -y
}

/// Two-sided z multiplier for a CI at the given confidence level.
pub fn two_sided_z(confidence: f64) -> f64 {
    debug_assert!(confidence > 0.0 && confidence < 1.0);
    normal_quantile(0.5 + confidence / 2.0)
}

/// Gamma function (via libm).
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen from a 40-digit computation of erfc(x/sqrt(2))/2.
    const UPPER_TAIL_TABLE: &[(f64, f64)] = &[
        (0.0, 0.5),
        (0.1, 0.4601721627229710),
        (0.25, 0.4012936743170763),
        (0.5, 0.3085375387259869),
        (1.0, 0.15865525393145705),
        (1.5, 0.06680720126885807),
        (2.0, 0.022750131948179207),
        (2.5, 0.006209665325776135),
        (3.0, 0.0013498980316300946),
        (4.0, 3.167124183311992e-5),
        (5.0, 2.866515718791939e-7),
        (6.0, 9.865876450376981e-10),
        (8.0, 6.220960574271784e-16),
        (10.0, 7.619853024160526e-24),
        (15.0, 3.670966199312751e-51),
        (20.0, 2.7536241186062337e-89),
        (30.0, 4.906713927148187e-198),
        (37.0, 5.725571222524577e-300),
    ];

    // Frozen from a 40-digit computation of log(erfc(x/sqrt(2))/2).
    const LN_UPPER_TAIL_TABLE: &[(f64, f64)] = &[
        (5.0, -15.064998393988726),
        (10.0, -53.23128515051247),
        (20.0, -203.91715537109726),
        (30.0, -454.3212439563432),
        (31.0, -484.8539636271793),
        (35.0, -616.9751012619225),
        (40.0, -804.6084420137538),
        (50.0, -1254.8313611394199),
        (100.0, -5005.524208694205),
        (1000.0, -500007.82669481216),
        (10000.0, -50000010.129278915),
    ];

    // Frozen from a 40-digit computation of -sqrt(2) * erfinv(1 - 2p).
    const QUANTILE_TABLE: &[(f64, f64)] = &[
        (1e-10, -6.361340902404056),
        (1e-6, -4.753424308822899),
        (0.001, -3.0902323061678136),
        (0.005, -2.5758293035489008),
        (0.01, -2.3263478740408408),
        (0.025, -1.9599639845400545),
        (0.05, -1.6448536269514727),
        (0.1, -1.2815515655446004),
        (0.3, -0.5244005127080408),
        (0.5, 0.0),
        (0.9, 1.2815515655446004),
        (0.975, 1.9599639845400545),
        (0.995, 2.5758293035489008),
        (0.999, 3.0902323061678136),
    ];

    #[test]
    fn upper_tail_matches_reference_table() {
        for &(x, expected) in UPPER_TAIL_TABLE {
            let got = normal_upper_tail(x);
            let rel = ((got - expected) / expected.max(f64::MIN_POSITIVE)).abs();
            assert!(rel < 1e-12, "x={x}: got {got:e}, want {expected:e}");
        }
    }

    #[test]
    fn upper_tail_symmetry_and_range() {
        for &(x, expected) in UPPER_TAIL_TABLE {
            let lower = normal_upper_tail(-x);
            assert!((lower - (1.0 - expected)).abs() < 1e-15);
        }
    }

    /// Independent oracle: adaptive Simpson quadrature of the density over
    /// [x, x+40], nowhere touching the erfc code path.
    fn upper_tail_by_quadrature(x: f64) -> f64 {
        fn simpson(a: f64, b: f64) -> f64 {
            let m = 0.5 * (a + b);
            (b - a) / 6.0 * (normal_density(a) + 4.0 * normal_density(m) + normal_density(b))
        }
        fn adaptive(a: f64, b: f64, whole: f64, eps: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let left = simpson(a, m);
            let right = simpson(m, b);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * eps {
                left + right + (left + right - whole) / 15.0
            } else {
                adaptive(a, m, left, eps / 2.0, depth - 1)
                    + adaptive(m, b, right, eps / 2.0, depth - 1)
            }
        }
        let rough = simpson(x, x + 40.0);
        let eps = (rough.abs() * 1e-13).max(1e-300);
        adaptive(x, x + 40.0, rough, eps, 60)
    }

    #[test]
    fn upper_tail_agrees_with_quadrature_oracle() {
        let mut x = 0.0;
        while x <= 8.0 {
            let q = upper_tail_by_quadrature(x);
            let got = normal_upper_tail(x);
            let rel = ((got - q) / q).abs();
            assert!(rel < 1e-10, "x={x}: erfc path {got:e} vs quadrature {q:e}");
            x += 0.25;
        }
    }

    #[test]
    fn ln_upper_tail_matches_reference_and_stays_finite() {
        for &(x, expected) in LN_UPPER_TAIL_TABLE {
            let got = ln_normal_upper_tail(x);
            let rel = ((got - expected) / expected).abs();
            assert!(rel < 1e-11, "x={x}: got {got}, want {expected}");
        }
        assert!(ln_normal_upper_tail(1e6).is_finite());
    }

    #[test]
    fn moro_inverse_cdf_accuracy() {
        for &(p, expected) in QUANTILE_TABLE {
            let got = inverse_normal_cdf(p);
            assert!(
                (got - expected).abs() < 5e-9,
                "p={p}: got {got}, want {expected}"
            );
        }
    }

    #[test]
    fn refined_quantile_is_full_precision() {
        for &(p, expected) in QUANTILE_TABLE {
            let got = normal_quantile(p);
            assert!(
                (got - expected).abs() < 1e-12,
                "p={p}: got {got}, want {expected}"
            );
        }
        assert!((two_sided_z(0.99) - 2.5758293035489008).abs() < 1e-12);
        assert!((two_sided_z(0.95) - 1.9599639845400545).abs() < 1e-12);
    }

    #[test]
    fn inverse_cdf_round_trips_through_the_tail_function() {
        for &(p, _) in QUANTILE_TABLE {
            let x = normal_quantile(p);
            let back = 1.0 - normal_upper_tail(x);
            assert!((back - p).abs() < 1e-12, "p={p} round-tripped to {back}");
        }
    }

    #[test]
    fn gamma_spot_values() {
        assert!((gamma(1.0) - 1.0).abs() < 1e-15);
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(1.2) - 0.9181687423997606).abs() < 1e-14);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
    }
}
