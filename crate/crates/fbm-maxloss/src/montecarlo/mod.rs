//! Seeded, replication-parallel Monte Carlo estimation and verification.
//!
//! Replication `k` of a run always draws from the Gaussian stream
//! `(master_seed, k)`, so estimates are bit-identical for any degree of
//! parallelism: workers fill an index-ordered buffer and every reduction is
//! a serial fold over it. Tail probabilities carry Wilson score intervals,
//! which stay honest at the small exceedance counts that dominate tail work.

mod config;
mod estimate;
mod output;
mod refine;
mod slope;
mod talagrand;
mod verify;

pub use config::ExperimentConfig;
pub use estimate::{
    estimate_expected_maxloss, estimate_tail, expected_maxloss_record, simulate_losses,
    simulate_statistics, tail_records, wilson_interval, EstimateRecord,
};
pub use output::write_records_csv;
pub use refine::{grid_refinement_study, RefinementReport, RefinementRow};
pub use slope::{fit_tail_slope, FittedSlope, SlopeFit, SlopePoint};
pub use talagrand::{talagrand_ratio_curve, RatioPoint};
pub use verify::{estimate_bias_shift, verify_bounds, verify_from_losses, CheckResult,
    VerificationReport, Verdict};

/// Minimum exceedance count for a tail point to enter slope fits, ratio
/// curves, and to make sparse-tail verdicts conclusive.
pub const MIN_EXCEED: u64 = 50;
