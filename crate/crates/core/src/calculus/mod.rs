//! Derivatives, the mean value parameter, extrema and integrals.
//!
//! Every operation works on a univariate [`Expr`]; the single free variable
//! (if any) is the function argument.

mod evt;
mod integral;
mod mvt;
mod taylor;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::lc_field::{FieldConfig, LcNumber};
use crate::transfer_ext::{eval_hyper, Binding, Expr, ExprError};

pub use evt::{evt_max, PartitionResult, RefinementSchedule, TraceEntry};
pub use integral::{default_schedule, riemann_integral, IntegralResult};
pub use mvt::{mvt_theta_infinitesimal, mvt_theta_real, ThetaResult};
pub use taylor::{taylor_remainder_check, taylor_remainder_check_infinitesimal};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CalculusError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("OrderTooHigh: derivative order {order} exceeds truncation depth {depth}")]
    OrderTooHigh { order: u32, depth: u32 },
    #[error("NoBracket: no sign change of the mean value residual on [0, 1]")]
    NoBracket,
    #[error("InvalidInterval: {0}")]
    InvalidInterval(&'static str),
    #[error("InvalidStep: {0}")]
    InvalidStep(&'static str),
    #[error("InvalidSchedule: {0}")]
    InvalidSchedule(&'static str),
    #[error("NotUnivariate: expression has free variables {0:?}")]
    NotUnivariate(Vec<String>),
}

impl CalculusError {
    pub fn name(&self) -> &'static str {
        match self {
            CalculusError::Expr(e) => e.name(),
            CalculusError::OrderTooHigh { .. } => "OrderTooHigh",
            CalculusError::NoBracket => "NoBracket",
            CalculusError::InvalidInterval(_) => "InvalidInterval",
            CalculusError::InvalidStep(_) => "InvalidStep",
            CalculusError::InvalidSchedule(_) => "InvalidSchedule",
            CalculusError::NotUnivariate(_) => "NotUnivariate",
        }
    }
}

impl From<crate::lc_field::FieldError> for CalculusError {
    fn from(e: crate::lc_field::FieldError) -> Self {
        CalculusError::Expr(e.into())
    }
}

/// Name of the argument of a univariate expression. Constant expressions get
/// `x`.
pub fn argument_name(f: &Expr) -> Result<String, CalculusError> {
    let vars = f.free_vars();
    match vars.len() {
        0 => Ok("x".to_string()),
        1 => Ok(vars.into_iter().next().unwrap()),
        _ => Err(CalculusError::NotUnivariate(vars.into_iter().collect())),
    }
}

/// A univariate function bound to its argument name.
pub(crate) struct Univariate<'a> {
    pub expr: &'a Expr,
    pub var: String,
}

impl<'a> Univariate<'a> {
    pub fn new(expr: &'a Expr) -> Result<Self, CalculusError> {
        Ok(Univariate {
            var: argument_name(expr)?,
            expr,
        })
    }

    pub fn real(&self, x: f64) -> Result<f64, CalculusError> {
        Ok(crate::transfer_ext::eval_real(self.expr, &Binding::new().with(&self.var, x))?)
    }

    pub fn hyper(&self, x: LcNumber, config: FieldConfig) -> Result<LcNumber, CalculusError> {
        Ok(eval_hyper(self.expr, &Binding::new().with(&self.var, x), config)?)
    }

    /// Jet at `x0`: the series of `f(x0 + ε)`.
    pub fn jet(&self, x0: f64, config: FieldConfig) -> Result<LcNumber, CalculusError> {
        let x = LcNumber::real(x0, config).add_ref(&LcNumber::eps(config));
        let v = self.hyper(x, config)?;
        if v.is_infinite() {
            return Err(crate::lc_field::FieldError::NotFinite.into());
        }
        Ok(v)
    }

    pub fn derivative(&self) -> Expr {
        crate::transfer_ext::symbolic_derivative(self.expr, &self.var)
    }
}

/// `k`-th derivative at `x0`: `k!` times the `εᵏ` coefficient of
/// `f(x0 + ε)`.
pub fn derivative(f: &Expr, x0: f64, order: u32, config: FieldConfig) -> Result<f64, CalculusError> {
    if order == 0 || order > config.depth {
        return Err(CalculusError::OrderTooHigh {
            order,
            depth: config.depth,
        });
    }
    let jet = Univariate::new(f)?.jet(x0, config)?;
    Ok(jet.coefficient_at(order as i64) * crate::math::factorial(order as usize))
}
