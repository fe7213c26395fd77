//! Definite integrals as the limit of left-endpoint Riemann sums.

use alloc::vec::Vec;

use super::{CalculusError, Univariate};
use crate::math;
use crate::transfer_ext::Expr;

#[derive(Debug, Clone, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    /// Difference of the last two extrapolants; `None` with a single sum.
    pub error: Option<f64>,
    pub schedule: Vec<u64>,
    /// Raw left-endpoint sums, one per schedule entry.
    pub sums: Vec<f64>,
    /// First-order Richardson extrapolants of consecutive sums.
    pub extrapolants: Vec<f64>,
    pub extrapolated: bool,
}

/// `H = 1000·2ᵏ` for `k = 0..=6`.
pub fn default_schedule() -> Vec<u64> {
    (0..=6).map(|k| 1000u64 << k).collect()
}

fn left_sum(fu: &Univariate<'_>, a: f64, b: f64, cells: u64) -> Result<f64, CalculusError> {
    let width = (b - a) / cells as f64;
    // Neumaier summation.
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for i in 0..cells {
        let x = a + (b - a) * (i as f64 / cells as f64);
        let v = fu.real(x)?;
        let t = sum + v;
        if math::abs(sum) >= math::abs(v) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    Ok((sum + comp) * width)
}

/// Integrates `f` over `[a, b]`.
///
/// Left sums carry an `O(1/H)` error, so consecutive sums `S₁, S₂` at
/// `H₁ < H₂` are combined as `(H₂·S₂ − H₁·S₁)/(H₂ − H₁)`. The last
/// extrapolant is the reported value.
pub fn riemann_integral(f: &Expr, a: f64, b: f64, schedule: &[u64]) -> Result<IntegralResult, CalculusError> {
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(CalculusError::InvalidInterval("need finite a <= b"));
    }
    if schedule.is_empty() || schedule.contains(&0) {
        return Err(CalculusError::InvalidSchedule("schedule needs at least one positive H"));
    }
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CalculusError::InvalidSchedule("schedule must be strictly increasing"));
    }
    let fu = Univariate::new(f)?;
    let sums = if a == b {
        alloc::vec![0.0; schedule.len()]
    } else {
        schedule
            .iter()
            .map(|&h| left_sum(&fu, a, b, h))
            .collect::<Result<Vec<f64>, _>>()?
    };
    let extrapolants: Vec<f64> = schedule
        .windows(2)
        .zip(sums.windows(2))
        .map(|(h, s)| {
            let (h1, h2) = (h[0] as f64, h[1] as f64);
            (h2 * s[1] - h1 * s[0]) / (h2 - h1)
        })
        .collect();

    let (value, error) = match extrapolants.as_slice() {
        [] => (sums[0], None),
        [only] => (*only, Some(math::abs(only - sums[sums.len() - 1]))),
        [.., prev, last] => (*last, Some(math::abs(last - prev))),
    };
    Ok(IntegralResult {
        value,
        error,
        schedule: schedule.to_vec(),
        sums,
        extrapolated: !extrapolants.is_empty(),
        extrapolants,
    })
}
