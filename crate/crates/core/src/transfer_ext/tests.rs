use super::*;
use crate::lc_field::{FieldConfig, FieldError, LcNumber, Rational};
use crate::math;
use alloc::string::ToString;

fn p(s: &str) -> Expr {
    parse_expr(s).unwrap()
}

fn cfg() -> FieldConfig {
    FieldConfig::default()
}

#[test]
fn parses_with_precedence() {
    assert_eq!(p("1 + 2*x"), Expr::Const(1.0) + Expr::Const(2.0) * Expr::var("x"));
    assert_eq!(p("-x^2"), -(Expr::var("x").powi(2)));
    assert_eq!(p("a - b - c"), (Expr::var("a") - Expr::var("b")) - Expr::var("c"));
    assert_eq!(p("x^-2"), Expr::var("x").powi(-2));
    assert_eq!(p("x^(-2)"), Expr::var("x").powi(-2));
    assert_eq!(p("sin(x)^2"), Expr::var("x").sin().powi(2));
    assert_eq!(p("2.5e-3"), Expr::Const(2.5e-3));
}

#[test]
fn parse_errors_carry_position() {
    match parse_expr("x +\n  * y") {
        Err(ExprError::Parse { line, column, token, .. }) => {
            assert_eq!((line, column), (2, 3));
            assert_eq!(token, "*");
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_expr("x^2.5"), Err(ExprError::Parse { .. })));
    assert!(matches!(parse_expr("foo(x)"), Err(ExprError::Parse { .. })));
    assert!(matches!(parse_expr("sin x"), Err(ExprError::Parse { .. })));
    assert!(matches!(parse_expr("(x"), Err(ExprError::Parse { .. })));
    assert!(matches!(parse_expr("x $ 2"), Err(ExprError::Parse { .. })));
}

#[test]
fn display_reparses() {
    for src in [
        "a - (b - c)",
        "a/(b*c)",
        "(x + 1)^3",
        "-(x + y)*z",
        "sin(x)^2 + cos(x)^2",
        "x^(-3) - --x",
        "exp(log(x)/2) - sqrt(x)",
        "(-x)^2",
    ] {
        let e = p(src);
        assert_eq!(p(&e.to_string()), e, "{src} -> {e}");
    }
}

#[test]
fn eval_real_examples() {
    let b = Binding::new().with("x", 0.7);
    let v = eval_real(&p("sin(x)^2 + cos(x)^2"), &b).unwrap();
    assert!((v - 1.0).abs() <= 1e-15);
    assert_eq!(eval_real(&p("x*(1-x)"), &Binding::new().with("x", 0.5)).unwrap(), 0.25);
    assert_eq!(
        eval_real(&p("log(x)"), &Binding::new().with("x", 0.0)),
        Err(ExprError::Domain("log of a nonpositive number"))
    );
    assert!(matches!(eval_real(&p("sqrt(x)"), &Binding::new().with("x", -1.0)), Err(ExprError::Domain(_))));
    assert!(matches!(eval_real(&p("1/x"), &Binding::new().with("x", 0.0)), Err(ExprError::Domain(_))));
    assert_eq!(eval_real(&p("y"), &b), Err(ExprError::UnboundVariable("y".into())));
}

#[test]
fn eval_hyper_pythagoras() {
    let x = LcNumber::parse("0.3 + eps", cfg()).unwrap();
    let v = eval_hyper(&p("sin(x)^2 + cos(x)^2"), &Binding::new().with("x", x), cfg()).unwrap();
    assert!((v.standard_part().unwrap() - 1.0).abs() <= 1e-12);
    for t in v.terms().iter().filter(|t| t.exp != Rational::from_integer(0)) {
        assert!(t.coef.abs() <= 1e-12, "{v}");
    }
}

#[test]
fn eval_hyper_exp_maclaurin() {
    let v = eval_hyper(&p("exp(x)"), &Binding::new().with("x", LcNumber::eps(cfg())), cfg()).unwrap();
    assert_eq!(v.terms().len(), 11);
    for k in 0..=10 {
        assert!((v.coefficient_at(k) - math::inv_factorial(k as usize)).abs() < 1e-16);
    }
}

#[test]
fn eval_hyper_errors() {
    let big = Binding::new().with("x", LcNumber::parse("eps^(-1)", cfg()).unwrap());
    assert_eq!(
        eval_hyper(&p("sin(x)"), &big, cfg()),
        Err(ExprError::Field(FieldError::NotFinite))
    );
    let tiny = Binding::new().with("x", LcNumber::eps(cfg()));
    assert!(matches!(eval_hyper(&p("log(x)"), &tiny, cfg()), Err(ExprError::Domain(_))));
    let zero = Binding::new().with("x", LcNumber::zero(cfg()));
    assert_eq!(
        eval_hyper(&p("1/x"), &zero, cfg()),
        Err(ExprError::Field(FieldError::DivisionByZero))
    );
    // sqrt is algebraic and extends to infinite arguments.
    let s = eval_hyper(&p("sqrt(x)"), &big, cfg()).unwrap();
    assert_eq!(s.to_string(), "eps^(-1/2)");
}

#[test]
fn symbolic_derivative_examples() {
    assert_eq!(symbolic_derivative(&p("x^3"), "x").to_string(), "3*x^2");
    assert_eq!(symbolic_derivative(&p("sin(x)"), "x").to_string(), "cos(x)");
    assert_eq!(symbolic_derivative(&p("x*exp(x)"), "x").to_string(), "exp(x) + x*exp(x)");
    assert_eq!(symbolic_derivative(&p("y^2"), "x"), Expr::Const(0.0));
}

#[test]
fn symbolic_derivative_of_quotient_and_roots() {
    let b = Binding::new().with("x", 1.3);
    let cases = [
        ("1/x", -1.0 / (1.3 * 1.3)),
        ("log(x)", 1.0 / 1.3),
        ("sqrt(x)", 0.5 / libm::sqrt(1.3)),
        ("cos(2*x)", -2.0 * libm::sin(2.6)),
        ("x^(-2)", -2.0 / (1.3 * 1.3 * 1.3)),
    ];
    for (src, want) in cases {
        let got = eval_real(&symbolic_derivative(&p(src), "x"), &b).unwrap();
        assert!((got - want).abs() < 1e-14, "{src}: {got} vs {want}");
    }
}

#[test]
fn free_vars_and_substitution() {
    let e = p("x*y + sin(z)");
    let vars: alloc::vec::Vec<_> = e.free_vars().into_iter().collect();
    assert_eq!(vars, ["x", "y", "z"]);
    let s = e.substitute("y", &Expr::Const(2.0));
    assert_eq!(s.to_string(), "x*2 + sin(z)");
}
