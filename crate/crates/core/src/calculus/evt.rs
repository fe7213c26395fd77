//! Maximisation on a refined partition.
//!
//! A finite stand-in for the hyperfinite-grid argument: pick the grid point
//! with the largest value (smallest index on ties), then zoom into the two
//! neighbouring cells on each side and repeat. The limit of the selected
//! points plays the role of the standard part of the maximising grid point.

use alloc::vec::Vec;

use super::{CalculusError, Univariate};
use crate::math;
use crate::transfer_ext::Expr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementSchedule {
    /// Subintervals per round; must be a positive multiple of 4.
    pub points_per_round: u64,
    pub max_rounds: u32,
    /// Stop once successive selected points are closer than this.
    pub tol_x: f64,
}

impl Default for RefinementSchedule {
    fn default() -> Self {
        RefinementSchedule {
            points_per_round: 1000,
            max_rounds: 40,
            tol_x: 1e-9,
        }
    }
}

/// One refinement round. `partitions` counts the cells of the equivalent
/// uniform partition of `[a, b]` and `index` is the selected point on it
/// (both saturate at `u128::MAX`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry {
    pub partitions: u128,
    pub index: u128,
    pub x: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionResult {
    pub argmax: f64,
    pub max_value: f64,
    pub final_partitions: u128,
    pub trace: Vec<TraceEntry>,
}

pub fn evt_max(f: &Expr, a: f64, b: f64, schedule: &RefinementSchedule) -> Result<PartitionResult, CalculusError> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(CalculusError::InvalidInterval("need finite a < b"));
    }
    let n = schedule.points_per_round;
    if n < 4 || !n.is_multiple_of(4) {
        return Err(CalculusError::InvalidSchedule("points_per_round must be a positive multiple of 4"));
    }
    if schedule.max_rounds == 0 {
        return Err(CalculusError::InvalidSchedule("max_rounds must be at least 1"));
    }
    let fu = Univariate::new(f)?;
    let zoom = (n / 4) as u128;
    let half = (n / 2) as i128;

    // Round 1: the plain grid over [a, b].
    let mut best = (0u128, a, fu.real(a)?);
    for i in 1..=n {
        let x = if i == n { b } else { a + (b - a) * (i as f64 / n as f64) };
        let v = fu.real(x)?;
        if v > best.2 {
            best = (i as u128, x, v);
        }
    }
    let mut partitions = n as u128;
    let mut spacing = (b - a) / n as f64;
    let mut trace = Vec::with_capacity(schedule.max_rounds as usize);
    trace.push(TraceEntry {
        partitions,
        index: best.0,
        x: best.1,
    });

    for _ in 1..schedule.max_rounds {
        let (center_idx, center_x, _) = best;
        partitions = partitions.saturating_mul(zoom);
        spacing /= zoom as f64;
        let base = center_idx.saturating_mul(zoom);
        let mut round_best: Option<(u128, f64, f64)> = None;
        for j in -half..=half {
            let idx = base as i128 + j;
            if idx < 0 || idx as u128 > partitions {
                continue;
            }
            let x = center_x + j as f64 * spacing;
            if x < a || x > b {
                continue;
            }
            let v = fu.real(x)?;
            if round_best.is_none_or(|(_, _, bv)| v > bv) {
                round_best = Some((idx as u128, x, v));
            }
        }
        let next = round_best.unwrap_or(best);
        let moved = math::abs(next.1 - center_x);
        best = next;
        trace.push(TraceEntry {
            partitions,
            index: best.0,
            x: best.1,
        });
        if moved < schedule.tol_x {
            break;
        }
    }

    Ok(PartitionResult {
        argmax: best.1,
        max_value: best.2,
        final_partitions: partitions,
        trace,
    })
}
