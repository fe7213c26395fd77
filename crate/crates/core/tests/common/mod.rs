//! Random smooth test functions in one variable `x`.

#![allow(dead_code)]

use hyperreal_core::Expr;
use rand::Rng;

/// A random analytic expression in `x`, defined on all of the real line.
/// Logs, roots and quotients appear only in guarded forms.
pub fn smooth_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.2) {
        return if rng.gen_bool(0.7) {
            Expr::var("x")
        } else {
            Expr::constant((rng.gen_range(-20..=20) as f64) / 10.0)
        };
    }
    let a = smooth_expr(rng, depth - 1);
    match rng.gen_range(0..11) {
        0 => a + smooth_expr(rng, depth - 1),
        1 => a - smooth_expr(rng, depth - 1),
        2 => a * smooth_expr(rng, depth - 1),
        3 => a.sin(),
        4 => a.cos(),
        5 => (Expr::constant(0.5) * a).sin().exp(),
        6 => (Expr::constant(1.0) + a.clone() * a).log(),
        7 => (Expr::constant(1.0) + a.clone() * a).sqrt(),
        8 => a / (Expr::constant(2.5) + smooth_expr(rng, depth - 1).cos()),
        9 => a.powi(rng.gen_range(2..=3)),
        _ => Expr::constant(rng.gen_range(-3..=3) as f64) * a,
    }
}
