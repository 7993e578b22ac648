//! Single-pass path statistics: supremum, infimum, range, maximum loss, and
//! the running loss series.
//!
//! The maximum loss of a path is the largest peak-to-subsequent-trough
//! decline, `max over i <= j of (values[i] - values[j])`. One pass tracks the
//! running maximum and the deepest drawdown seen so far; ties resolve to the
//! earliest `(peak, trough)` index pair in lexicographic order.

use crate::model::{SamplePath, TimeGrid};

/// Extremes of one path together with the achieving times of the deepest
/// drawdown. For a zero-anchored path, `sup >= 0 >= inf`, `range = sup - inf`,
/// and `-inf <= max_loss <= range`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStatistics {
    pub sup: f64,
    pub inf: f64,
    pub range: f64,
    pub max_loss: f64,
    /// Time of the peak from which the deepest drawdown falls.
    pub peak_time: f64,
    /// Time of the trough that realizes the deepest drawdown; `>= peak_time`.
    pub trough_time: f64,
}

/// Running drawdown `x[i] = max_{j <= i} values[j] - values[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LossSeries {
    grid: TimeGrid,
    x: Vec<f64>,
}

impl LossSeries {
    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }
}

pub(crate) struct Drawdown {
    pub max_loss: f64,
    pub peak_index: usize,
    pub trough_index: usize,
}

/// Single pass over raw values; usable on series that are not zero-anchored
/// (the reversal-duality tests need that).
pub(crate) fn drawdown_of(values: &[f64]) -> Drawdown {
    debug_assert!(!values.is_empty());
    let mut running_max = values[0];
    let mut running_argmax = 0usize;
    let mut best = Drawdown {
        max_loss: 0.0,
        peak_index: 0,
        trough_index: 0,
    };
    for (i, &v) in values.iter().enumerate() {
        if v > running_max {
            running_max = v;
            running_argmax = i;
        }
        let dd = running_max - v;
        if dd > best.max_loss {
            best = Drawdown {
                max_loss: dd,
                peak_index: running_argmax,
                trough_index: i,
            };
        }
    }
    best
}

/// Supremum, infimum, range, and maximum loss in one pass.
pub fn compute_stats(path: &SamplePath) -> PathStatistics {
    let values = path.values();
    let mut sup = f64::NEG_INFINITY;
    let mut inf = f64::INFINITY;
    for &v in values {
        if v > sup {
            sup = v;
        }
        if v < inf {
            inf = v;
        }
    }
    let dd = drawdown_of(values);
    PathStatistics {
        sup,
        inf,
        range: sup - inf,
        max_loss: dd.max_loss,
        peak_time: path.grid().points()[dd.peak_index],
        trough_time: path.grid().points()[dd.trough_index],
    }
}

/// The loss process sampled on the path's grid.
pub fn loss_series(path: &SamplePath) -> LossSeries {
    let values = path.values();
    let mut x = Vec::with_capacity(values.len());
    let mut running_max = values[0];
    for &v in values {
        if v > running_max {
            running_max = v;
        }
        x.push(running_max - v);
    }
    LossSeries {
        grid: path.grid().clone(),
        x,
    }
}
