mod common;

use hyperreal_core::calculus::{
    default_schedule, derivative, evt_max, mvt_theta_infinitesimal, mvt_theta_real, riemann_integral,
    RefinementSchedule,
};
use hyperreal_core::transfer_ext::{eval_real, symbolic_derivative};
use hyperreal_core::{Binding, Expr, FieldConfig, LcNumber};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn at(f: &Expr, x: f64) -> f64 {
    eval_real(f, &Binding::new().with("x", x)).unwrap()
}

#[test]
fn mvt_real_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..500 {
        let f = common::smooth_expr(&mut rng, 3);
        let x: f64 = rng.gen_range(-1.5..1.5);
        let mag: f64 = 10f64.powf(rng.gen_range(-3.0..=0.0));
        let h = if rng.gen_bool(0.5) { mag } else { -mag };
        let r = mvt_theta_real(&f, x, h).unwrap_or_else(|e| panic!("{f} x={x} h={h}: {e}"));
        assert!((0.0..=1.0).contains(&r.theta));
        let df = symbolic_derivative(&f, "x");
        let delta = at(&f, x + h) - at(&f, x);
        let g = delta - h * at(&df, x + r.theta * h);
        assert!(g.abs() <= 1e-12 * delta.abs().max(1.0), "{f} x={x} h={h}: {g}");
    }
}

/// θ(h) extrapolated to h → 0 from the real solver.
fn theta_limit(f: &Expr, x: f64) -> f64 {
    let th: Vec<f64> = [1e-2, 1e-3, 1e-4].iter().map(|&h| mvt_theta_real(f, x, h).unwrap().theta).collect();
    let r1 = |a: f64, b: f64| (10.0 * b - a) / 9.0;
    (100.0 * r1(th[1], th[2]) - r1(th[0], th[1])) / 99.0
}

#[test]
fn mvt_paths_agree() {
    let cfg = FieldConfig::default();
    let eps = LcNumber::eps(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut compared = 0;
    while compared < 40 {
        let f = common::smooth_expr(&mut rng, 2);
        let x: f64 = rng.gen_range(-1.0..1.0);
        // The limit is well conditioned only away from inflection points.
        if derivative(&f, x, 2, cfg).unwrap().abs() < 0.1 {
            continue;
        }
        let inf = mvt_theta_infinitesimal(&f, x, &eps, cfg).unwrap();
        assert_eq!(inf.leading_order, Some(1));
        let st = inf.theta.standard_part().unwrap();
        let lim = theta_limit(&f, x);
        assert!((st - lim).abs() <= 1e-5, "{f} at {x}: {st} vs {lim}");
        compared += 1;
    }
}

#[test]
fn evt_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut fs = vec![
        "x*(1-x)".parse::<Expr>().unwrap(),
        "sin(5*x) + x".parse::<Expr>().unwrap(),
    ];
    fs.extend((0..8).map(|_| common::smooth_expr(&mut rng, 3)));
    for f in fs {
        let r = evt_max(&f, -1.0, 1.5, &RefinementSchedule::default()).unwrap();
        assert_eq!(r.max_value, at(&f, r.argmax));
        for _ in 0..10_000 {
            let x: f64 = rng.gen_range(-1.0..=1.5);
            assert!(r.max_value >= at(&f, x) - 1e-6, "{f}: c = {}, x = {x}", r.argmax);
        }
    }
}

#[test]
fn integral_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let h = default_schedule();
    for _ in 0..20 {
        let f = common::smooth_expr(&mut rng, 2);
        let mut p = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        p.sort_by(f64::total_cmp);
        let [a, b, c] = p;
        let ab = riemann_integral(&f, a, b, &h).unwrap();
        let bc = riemann_integral(&f, b, c, &h).unwrap();
        let ac = riemann_integral(&f, a, c, &h).unwrap();
        let bound = ab.error.unwrap() + bc.error.unwrap() + ac.error.unwrap() + 1e-13;
        assert!((ab.value + bc.value - ac.value).abs() <= bound, "{f} on {a} {b} {c}");
    }
}

#[test]
fn derivative_and_integral_are_linear() {
    let cfg = FieldConfig::default();
    let h = default_schedule();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for _ in 0..20 {
        let f = common::smooth_expr(&mut rng, 2);
        let g = common::smooth_expr(&mut rng, 2);
        let (al, be) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let comb = Expr::constant(al) * f.clone() + Expr::constant(be) * g.clone();
        let x: f64 = rng.gen_range(-1.0..1.0);

        let d = derivative(&comb, x, 1, cfg).unwrap();
        let parts = al * derivative(&f, x, 1, cfg).unwrap() + be * derivative(&g, x, 1, cfg).unwrap();
        assert!((d - parts).abs() <= 1e-10 * (1.0 + d.abs()), "{comb}");

        let i = riemann_integral(&comb, 0.0, 1.0, &h).unwrap();
        let (fi, gi) = (
            riemann_integral(&f, 0.0, 1.0, &h).unwrap(),
            riemann_integral(&g, 0.0, 1.0, &h).unwrap(),
        );
        let bound = i.error.unwrap() + al.abs() * fi.error.unwrap() + be.abs() * gi.error.unwrap() + 1e-12;
        assert!((i.value - (al * fi.value + be * gi.value)).abs() <= bound, "{comb}");
    }
}
