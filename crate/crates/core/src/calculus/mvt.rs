//! The mean value parameter `θ ∈ [0, 1]` with `f(x+h) − f(x) = h·f′(x+θh)`.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{CalculusError, Univariate};
use crate::lc_field::{FieldConfig, LcNumber, Rational};
use crate::math;
use crate::transfer_ext::{eval_hyper, Binding, Expr};

/// Number of points in the bracketing scan over `[0, 1]`.
const SCAN_POINTS: usize = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaResult<T> {
    pub theta: T,
    /// `f(x+h) − f(x) − h·f′(x+θh)` at the returned `θ`.
    pub residual: T,
    /// `k` such that `f⁽ᵏ⁺¹⁾(x)` is the first nonvanishing derivative past
    /// `f′`. Only known for infinitesimal steps.
    pub leading_order: Option<u32>,
    /// Every `θ` works (e.g. affine `f`); `θ = 1/2` is returned.
    pub degenerate: bool,
}

/// Solves for `θ` with a real step.
///
/// Scans `g(θ) = f(x+h) − f(x) − h·f′(x+θh)` on a 1024-point grid, bisects
/// the first sign-change bracket from the left and polishes with a damped
/// Newton step that stays inside the bracket.
pub fn mvt_theta_real(f: &Expr, x: f64, h: f64) -> Result<ThetaResult<f64>, CalculusError> {
    if h == 0.0 || !h.is_finite() {
        return Err(CalculusError::InvalidStep("h must be a nonzero real"));
    }
    let fu = Univariate::new(f)?;
    let d1 = fu.derivative();
    let d2 = crate::transfer_ext::symbolic_derivative(&d1, &fu.var);
    let deriv = Univariate { expr: &d1, var: fu.var.clone() };
    let curv = Univariate { expr: &d2, var: fu.var.clone() };

    let delta = fu.real(x + h)? - fu.real(x)?;
    let g = |theta: f64| -> Result<f64, CalculusError> { Ok(delta - h * deriv.real(x + theta * h)?) };
    let tol = 1e-12 * math::abs(delta).max(1.0);

    let grid: Vec<f64> = (0..=SCAN_POINTS).map(|j| j as f64 / SCAN_POINTS as f64).collect();
    let values = grid.iter().map(|&t| g(t)).collect::<Result<Vec<f64>, _>>()?;

    if values.iter().all(|v| math::abs(*v) <= tol) {
        return Ok(ThetaResult {
            theta: 0.5,
            residual: g(0.5)?,
            leading_order: None,
            degenerate: true,
        });
    }

    let mut bracket = None;
    for j in 0..SCAN_POINTS {
        if values[j] == 0.0 {
            return Ok(ThetaResult {
                theta: grid[j],
                residual: 0.0,
                leading_order: None,
                degenerate: false,
            });
        }
        if values[j].signum() != values[j + 1].signum() {
            bracket = Some(j);
            break;
        }
    }

    let Some(j) = bracket else {
        // Touching root: accept the grid point closest to zero if it meets
        // the residual contract.
        let (best, v) = values
            .iter()
            .enumerate()
            .min_by(|a, b| math::abs(*a.1).total_cmp(&math::abs(*b.1)))
            .map(|(i, v)| (i, *v))
            .unwrap();
        if math::abs(v) <= tol {
            return Ok(ThetaResult {
                theta: grid[best],
                residual: v,
                leading_order: None,
                degenerate: false,
            });
        }
        return Err(CalculusError::NoBracket);
    };

    let (mut lo, mut hi) = (grid[j], grid[j + 1]);
    let (mut glo, mut ghi) = (values[j], values[j + 1]);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid)?;
        if gm == 0.0 {
            lo = mid;
            hi = mid;
            glo = 0.0;
            ghi = 0.0;
            break;
        }
        if gm.signum() == glo.signum() {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    let (mut theta, mut gt) = if math::abs(glo) <= math::abs(ghi) { (lo, glo) } else { (hi, ghi) };

    // Newton polish: g′(θ) = −h²·f″(x + θh).
    for _ in 0..3 {
        let slope = -h * h * curv.real(x + theta * h)?;
        if slope == 0.0 || gt == 0.0 {
            break;
        }
        let mut step = gt / slope;
        let mut accepted = false;
        for _ in 0..8 {
            let cand = theta - step;
            if cand >= lo.min(hi) - f64::EPSILON && cand <= hi.max(lo) + f64::EPSILON && (0.0..=1.0).contains(&cand) {
                let gc = g(cand)?;
                if math::abs(gc) < math::abs(gt) {
                    theta = cand;
                    gt = gc;
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }

    Ok(ThetaResult {
        theta,
        residual: gt,
        leading_order: None,
        degenerate: false,
    })
}

/// Solves for `θ` as a series when `h` is a nonzero infinitesimal.
///
/// With `aⱼ = f⁽ʲ⁾(x)/j!`, dividing the mean value equation by `hᵏ⁺¹` gives
/// `F(θ) = Σ_{j>k} aⱼ·(1 − j·θʲ⁻¹)·hʲ⁻ᵏ⁻¹ = 0`, whose standard part fixes
/// `θ₀ = (k+1)^(−1/k)`. Higher orders come from repeated correction
/// `θ ← θ − F(θ)/F′(θ₀)`, each pass fixing at least one more order of `h`.
pub fn mvt_theta_infinitesimal(
    f: &Expr,
    x: f64,
    h: &LcNumber,
    config: FieldConfig,
) -> Result<ThetaResult<LcNumber>, CalculusError> {
    if !h.is_infinitesimal() {
        return Err(CalculusError::InvalidStep("h must be a nonzero infinitesimal"));
    }
    let fu = Univariate::new(f)?;
    let step = h.leading_exponent().unwrap();
    let depth = Rational::from_integer(config.depth as i64);

    let probe = fu.jet(x, config)?;
    let order_k = (2..=config.depth as i64)
        .find(|&j| math::abs(probe.coefficient_at(j)) > config.eq_tol)
        .map(|j| (j - 1) as u32);

    // Residual window and working precision.
    let k_eff = order_k.unwrap_or(config.depth);
    let window = Rational::from_integer(k_eff as i64 + 1) * step + depth;
    let work_depth = window.ceil().to_integer().to_u32().unwrap_or(u32::MAX - 4) + 4;
    let work = working_config(config, work_depth);

    let theta = match order_k {
        None => LcNumber::real(0.5, work),
        Some(k) => solve_series(&fu, x, h, k, step, depth, work)?,
    };

    let residual = series_residual(&fu, x, h, &theta, work)?.truncated_above(window);
    Ok(ThetaResult {
        theta: theta.truncated_above(depth).with_config(config),
        residual,
        leading_order: order_k,
        degenerate: order_k.is_none(),
    })
}

fn solve_series(
    fu: &Univariate<'_>,
    x: f64,
    h: &LcNumber,
    k: u32,
    step: Rational,
    depth: Rational,
    work: FieldConfig,
) -> Result<LcNumber, CalculusError> {
    let h = h.with_config(work);
    // aⱼ for j up to k + 1 + depth/step.
    let last_j = (k as i64 + 1) + (depth / step).floor().to_integer() + 1;
    let jet_cfg = work.with_depth(last_j as u32 + 2);
    let jet = fu.jet(x, jet_cfg)?;
    let coeffs: Vec<f64> = (0..=last_j).map(|j| jet.coefficient_at(j)).collect();

    let kf = k as f64;
    let lead_coef = coeffs[k as usize + 1];
    let theta0 = libm::pow(kf + 1.0, -1.0 / kf);
    let slope = -lead_coef * (kf + 1.0) * kf * libm::pow(theta0, kf - 1.0);

    let eval_f = |theta: &LcNumber| -> LcNumber {
        let one = LcNumber::one(work);
        let mut acc = LcNumber::zero(work);
        let mut h_pow = LcNumber::one(work);
        // θ^(j-1) starting from j = k + 1.
        let mut theta_pow = theta.powi(k as i64).unwrap();
        for j in (k as usize + 1)..coeffs.len() {
            if j > k as usize + 1 {
                h_pow = h_pow.mul_ref(&h);
                theta_pow = theta_pow.mul_ref(theta);
            }
            let a = coeffs[j];
            if a != 0.0 {
                let bracket = one.sub_ref(&theta_pow.scale(j as f64));
                acc = acc.add_ref(&bracket.mul_ref(&h_pow).scale(a));
            }
        }
        acc
    };

    let mut theta = LcNumber::real(theta0, work);
    for _ in 0..256 {
        let correction = eval_f(&theta).truncated_above(depth).scale(1.0 / slope);
        if correction.terms().iter().all(|t| math::abs(t.coef) <= 1e-16 * math::abs(theta0)) {
            break;
        }
        theta = theta.sub_ref(&correction).truncated_above(depth);
    }
    Ok(theta)
}

/// `f(x+h) − f(x) − h·f′(x+θh)` through the natural extensions of `f` and
/// of its symbolic derivative.
fn series_residual(
    fu: &Univariate<'_>,
    x: f64,
    h: &LcNumber,
    theta: &LcNumber,
    work: FieldConfig,
) -> Result<LcNumber, CalculusError> {
    let h = h.with_config(work);
    let xs = LcNumber::real(x, work);
    let d1 = fu.derivative();
    let lhs = fu.hyper(xs.add_ref(&h), work)?.sub_ref(&fu.hyper(xs.clone(), work)?);
    let at = xs.add_ref(&theta.mul_ref(&h));
    let slope = eval_hyper(&d1, &Binding::new().with(&fu.var, at), work)?;
    Ok(lhs.sub_ref(&h.mul_ref(&slope)))
}

/// Working config with a wider window and room for the extra terms. High
/// jet coefficients fall below the default `zero_tol` yet still matter once
/// multiplied by powers of a step with large coefficients, so nothing is
/// dropped here.
fn working_config(config: FieldConfig, depth: u32) -> FieldConfig {
    FieldConfig {
        depth,
        max_terms: config.max_terms.max(4 * depth as usize),
        zero_tol: 0.0,
        eq_tol: config.eq_tol,
    }
}
