//! Checks of the integral form of Taylor's remainder,
//! `f(b) = f(a) + (b − a)·f′(a) + ∫ₐᵇ (b − x)·f″(x) dx`.

use alloc::boxed::Box;

use super::{derivative, riemann_integral, CalculusError, Univariate};
use crate::lc_field::{FieldConfig, LcNumber, Rational, Term};
use crate::math;
use crate::transfer_ext::{symbolic_derivative, Expr};

/// `|LHS − RHS|` over the reals, with `f′(a)` from the jet and the integral
/// term from [`riemann_integral`] applied to `(b − x)·f″(x)`.
pub fn taylor_remainder_check(
    f: &Expr,
    a: f64,
    b: f64,
    schedule: &[u64],
    config: FieldConfig,
) -> Result<f64, CalculusError> {
    let fu = Univariate::new(f)?;
    let second = symbolic_derivative(&symbolic_derivative(f, &fu.var), &fu.var);
    let integrand = Expr::Mul(
        Box::new(Expr::Sub(Box::new(Expr::Const(b)), Box::new(Expr::Var(fu.var.clone())))),
        Box::new(second),
    );
    let integral = if a <= b {
        riemann_integral(&integrand, a, b, schedule)?.value
    } else {
        -riemann_integral(&integrand, b, a, schedule)?.value
    };
    let lhs = fu.real(b)?;
    let rhs = fu.real(a)? + (b - a) * derivative(f, a, 1, config)? + integral;
    Ok(math::abs(lhs - rhs))
}

/// The same identity with `b = a + ε`, coefficientwise.
///
/// Writing `f″(a + t) = Σ cₘ·tᵐ`, the integral term is
/// `Σ cₘ·εᵐ⁺²/((m+1)(m+2))`. Returns `LHS − RHS` on the orders up to the
/// truncation depth.
pub fn taylor_remainder_check_infinitesimal(f: &Expr, a: f64, config: FieldConfig) -> Result<LcNumber, CalculusError> {
    let fu = Univariate::new(f)?;
    let second = symbolic_derivative(&symbolic_derivative(f, &fu.var), &fu.var);
    let second_jet = Univariate {
        expr: &second,
        var: fu.var.clone(),
    }
    .jet(a, config)?;

    let integral = LcNumber::from_terms(
        (0..=config.depth as i64).map(|m| {
            let c = second_jet.coefficient_at(m);
            Term::new(Rational::from_integer(m + 2), c / ((m + 1) * (m + 2)) as f64)
        }),
        config,
    );
    let b = LcNumber::real(a, config).add_ref(&LcNumber::eps(config));
    let lhs = fu.hyper(b, config)?;
    let linear = LcNumber::from_terms(
        [
            Term::new(Rational::from_integer(0), fu.real(a)?),
            Term::new(Rational::from_integer(1), derivative(f, a, 1, config)?),
        ],
        config,
    );
    let rhs = linear.add_ref(&integral);
    Ok(lhs.sub_ref(&rhs).truncated_above(Rational::from_integer(config.depth as i64)))
}
