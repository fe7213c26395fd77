//! Computable infinitesimal calculus.
//!
//! The hyperreal line is modelled by a truncated Levi-Civita field: finite
//! series `Σ cᵢ·εᵠⁱ` with exact rational exponents and floating-point
//! coefficients, where `ε` is a positive infinitesimal. On top of the field
//! the crate provides
//!
//! * [`lc_field`]: arithmetic, order, standard part and classification;
//! * [`transfer_ext`]: term expressions and their natural extensions;
//! * [`calculus`]: derivatives from infinitesimal increments, the mean value
//!   parameter for real and infinitesimal steps, hyperfinite-grid maximisation,
//!   Riemann-sum integration and Taylor remainder checks;
//! * [`formula_dsl`]: a first-order formula language and a randomized
//!   transfer checker.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod calculus;
pub mod formula_dsl;
pub mod lc_field;
mod math;
pub mod transfer_ext;

pub use lc_field::{Classification, FieldConfig, FieldError, LcNumber, Rational, Term};
pub use transfer_ext::{Binding, Expr, ExprError, Func};
