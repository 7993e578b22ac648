//! Scratch probe for calibrating harness parameters. Not part of the API.

use fbm_maxloss::model::{HurstParameter, ProcessParams};
use fbm_maxloss::montecarlo::{
    estimate_bias_shift, expected_maxloss_record, simulate_losses, tail_records,
    ExperimentConfig,
};
use fbm_maxloss::samplers::SamplerMethod;
use std::time::Instant;

fn main() {
    let reps: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000);

    for hv in [0.5, 0.6, 0.7, 0.8, 0.9] {
        let config = ExperimentConfig {
            params: ProcessParams::new(HurstParameter::new(hv).unwrap(), 0.0, 1.0, 1.0).unwrap(),
            n: 1024,
            reps,
            method: SamplerMethod::Circulant,
            seed: 4242,
            x_grid: vec![0.5, 1.0, 2.0, 4.0],
            confidence: 0.99,
        };
        let t0 = Instant::now();
        let losses = simulate_losses(&config).unwrap();
        let sim_time = t0.elapsed();
        let em = expected_maxloss_record(&losses, 0.99);
        let tails = tail_records(&losses, &config.x_grid, 0.99);
        let t1 = Instant::now();
        let bias = estimate_bias_shift(&config).unwrap();
        let bias_time = t1.elapsed();
        println!(
            "H={hv} reps={reps}: E[M]={:.5} ci=[{:.5},{:.5}] bias={:.5} sim={:?} biasrun={:?}",
            em.estimate, em.ci_low, em.ci_high, bias, sim_time, bias_time
        );
        for r in &tails {
            let x = r.x.unwrap();
            let phibar = fbm_maxloss::bounds::tail_gaussian_lower(1.0, config.params.h, x).unwrap();
            println!(
                "  x={x}: p={:.6} exceed={} ci=[{:.6},{:.6}] phibar={:.6} ratio={:.3}",
                r.estimate,
                r.exceed_count.unwrap(),
                r.ci_low,
                r.ci_high,
                phibar,
                r.estimate / phibar
            );
        }
    }
}
