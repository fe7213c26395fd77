use alloc::vec::Vec;

use super::{Binding, Expr, ExprError, Func};
use crate::lc_field::{power_series, FieldConfig, FieldError, LcNumber};
use crate::math;

/// Reference semantics over `f64`.
pub fn eval_real(e: &Expr, binding: &Binding<f64>) -> Result<f64, ExprError> {
    Ok(match e {
        Expr::Const(c) => *c,
        Expr::Var(v) => *binding.get(v).ok_or_else(|| ExprError::UnboundVariable(v.clone()))?,
        Expr::Add(a, b) => eval_real(a, binding)? + eval_real(b, binding)?,
        Expr::Sub(a, b) => eval_real(a, binding)? - eval_real(b, binding)?,
        Expr::Mul(a, b) => eval_real(a, binding)? * eval_real(b, binding)?,
        Expr::Div(a, b) => {
            let num = eval_real(a, binding)?;
            let den = eval_real(b, binding)?;
            if den == 0.0 {
                return Err(ExprError::Domain("division by zero"));
            }
            num / den
        }
        Expr::Pow(a, n) => {
            let base = eval_real(a, binding)?;
            if base == 0.0 && *n < 0 {
                return Err(ExprError::Domain("division by zero"));
            }
            math::powi(base, *n as i32)
        }
        Expr::Neg(a) => -eval_real(a, binding)?,
        Expr::Call(f, a) => {
            let x = eval_real(a, binding)?;
            match f {
                Func::Sin => libm::sin(x),
                Func::Cos => libm::cos(x),
                Func::Exp => libm::exp(x),
                Func::Log => {
                    if x <= 0.0 {
                        return Err(ExprError::Domain("log of a nonpositive number"));
                    }
                    libm::log(x)
                }
                Func::Sqrt => {
                    if x < 0.0 {
                        return Err(ExprError::Domain("sqrt of a negative number"));
                    }
                    libm::sqrt(x)
                }
            }
        }
    })
}

/// The natural extension: evaluates `e` over the field.
pub fn eval_hyper(e: &Expr, binding: &Binding<LcNumber>, config: FieldConfig) -> Result<LcNumber, ExprError> {
    Ok(match e {
        Expr::Const(c) => LcNumber::real(*c, config),
        Expr::Var(v) => binding
            .get(v)
            .ok_or_else(|| ExprError::UnboundVariable(v.clone()))?
            .clone(),
        Expr::Add(a, b) => eval_hyper(a, binding, config)?.add_ref(&eval_hyper(b, binding, config)?),
        Expr::Sub(a, b) => eval_hyper(a, binding, config)?.sub_ref(&eval_hyper(b, binding, config)?),
        Expr::Mul(a, b) => eval_hyper(a, binding, config)?.mul_ref(&eval_hyper(b, binding, config)?),
        Expr::Div(a, b) => eval_hyper(a, binding, config)?.checked_div(&eval_hyper(b, binding, config)?)?,
        Expr::Pow(a, n) => eval_hyper(a, binding, config)?.powi(*n)?,
        Expr::Neg(a) => -eval_hyper(a, binding, config)?,
        Expr::Call(f, a) => extend_primitive(*f, &eval_hyper(a, binding, config)?, config)?,
    })
}

/// `*g(u)` for a primitive `g`.
pub(crate) fn extend_primitive(f: Func, u: &LcNumber, config: FieldConfig) -> Result<LcNumber, ExprError> {
    if f == Func::Sqrt {
        // Algebraic: defined on every nonnegative element, finite or not.
        return u.sqrt().map_err(|e| match e {
            FieldError::NegativeLeading => ExprError::Domain("sqrt of a negative number"),
            other => other.into(),
        });
    }
    if u.is_infinite() {
        return Err(FieldError::NotFinite.into());
    }
    let (s, delta) = u.split_standard()?;
    if delta.is_zero() {
        let v = match f {
            Func::Sin => libm::sin(s),
            Func::Cos => libm::cos(s),
            Func::Exp => libm::exp(s),
            Func::Log if s <= 0.0 => return Err(ExprError::Domain("log of a nonpositive number")),
            Func::Log => libm::log(s),
            Func::Sqrt => unreachable!(),
        };
        return Ok(LcNumber::real(v, config));
    }
    // Taylor coefficients g⁽ᵏ⁾(s)/k! about the standard part.
    let inv_fact: Vec<f64> = {
        let mut v = Vec::with_capacity(64);
        let mut acc = 1.0;
        v.push(acc);
        for k in 1..=600usize {
            acc /= k as f64;
            v.push(acc);
        }
        v
    };
    let series = match f {
        Func::Exp => {
            let e = libm::exp(s);
            power_series(|k| e * inv_fact[k], &delta, config)
        }
        Func::Sin | Func::Cos => {
            let (sn, cs) = (libm::sin(s), libm::cos(s));
            let cycle = if f == Func::Sin { [sn, cs, -sn, -cs] } else { [cs, -sn, -cs, sn] };
            power_series(|k| cycle[k % 4] * inv_fact[k], &delta, config)
        }
        Func::Log => {
            if s <= 0.0 {
                return Err(ExprError::Domain("log at a point whose standard part is not positive"));
            }
            let l = libm::log(s);
            power_series(
                |k| match k {
                    0 => l,
                    _ => {
                        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                        sign / (k as f64 * math::powi(s, k as i32))
                    }
                },
                &delta,
                config,
            )
        }
        Func::Sqrt => unreachable!(),
    };
    Ok(series)
}
