use super::*;
use alloc::string::ToString;

fn cfg() -> FieldConfig {
    FieldConfig::default()
}

fn lc(s: &str) -> LcNumber {
    LcNumber::parse(s, cfg()).unwrap()
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

#[test]
fn addition_examples() {
    assert_eq!(&lc("3 + 5*eps") + &lc("1 - 5*eps"), lc("4"));
    assert_eq!(&lc("eps") + &LcNumber::zero(cfg()), lc("eps"));
    assert_eq!(&lc("1 + eps") + &lc("eps^2"), lc("1 + eps + eps^2"));
}

#[test]
fn multiplication_examples() {
    assert_eq!(&lc("eps") * &lc("eps"), lc("eps^2"));
    assert_eq!(&lc("1 + eps") * &lc("1 - eps"), lc("1 - eps^2"));
    assert_eq!(&lc("eps^(-1)") * &lc("eps"), lc("1"));
}

#[test]
fn product_leading_exponent_is_sum() {
    let a = lc("2*eps^(1/2) + eps");
    let b = lc("3*eps^(-2) + 1");
    let p = &a * &b;
    assert_eq!(p.leading_exponent(), Some(r(-3, 2)));
    assert_eq!(p.leading_coefficient(), Some(6.0));
}

#[test]
fn inverse_examples() {
    let inv = lc("1 + eps").inv().unwrap();
    assert_eq!(inv.terms().len(), 11);
    for (k, t) in inv.terms().iter().enumerate() {
        assert_eq!(t.exp, Rational::from_integer(k as i64));
        assert_eq!(t.coef, if k % 2 == 0 { 1.0 } else { -1.0 });
    }
    assert_eq!(lc("eps").inv().unwrap(), lc("eps^(-1)"));
    assert_eq!(lc("2").inv().unwrap(), lc("0.5"));
    assert_eq!(LcNumber::zero(cfg()).inv(), Err(FieldError::DivisionByZero));
}

#[test]
fn compare_examples() {
    let zero = LcNumber::zero(cfg());
    assert_eq!(lc("eps").compare(&zero), Ordering::Greater);
    assert_eq!(lc("eps").compare(&LcNumber::real(1e-9, cfg())), Ordering::Less);
    assert_eq!(lc("eps^(-1)").compare(&LcNumber::real(1e6, cfg())), Ordering::Greater);
    assert_eq!(lc("1 + eps").compare(&lc("1")), Ordering::Greater);
    assert_eq!(lc("1 + 1e-12*eps").compare(&lc("1")), Ordering::Equal);
}

#[test]
fn standard_part_examples() {
    assert_eq!(lc("3 + 5*eps + eps^2").standard_part(), Ok(3.0));
    assert_eq!(lc("eps").standard_part(), Ok(0.0));
    assert_eq!(lc("eps^(-1)").standard_part(), Err(FieldError::NotFinite));
}

#[test]
fn infinite_proximity_examples() {
    assert!(lc("1 + eps").is_infinitely_close(&lc("1")));
    assert!(lc("eps").is_infinitely_close(&lc("eps^2")));
    assert!(!lc("1").is_infinitely_close(&lc("2")));
    assert!(!lc("eps^(-1)").is_infinitely_close(&lc("eps^(-1) + 1")));
}

#[test]
fn square_root_examples() {
    let s = lc("1 + 2*eps").sqrt().unwrap();
    // Squaring must give back 1 + 2ε on the carried window.
    let sq = &s * &s;
    assert!(sq.approx_eq(&lc("1 + 2*eps")), "{sq}");
    // Independent oracle: coefficient k of sqrt(1 + 2x) is C(1/2, k)·2^k.
    let mut binom = 1.0;
    for k in 0..=10usize {
        if k > 0 {
            binom *= (0.5 - (k - 1) as f64) / k as f64;
        }
        let want = binom * math::powi(2.0, k as i32);
        assert!((s.coefficient_at(k as i64) - want).abs() < 1e-12, "k={k}");
    }
    assert_eq!(s.coefficient_at(1), 1.0);
    assert_eq!(s.coefficient_at(2), -0.5);
    assert_eq!(lc("4").sqrt().unwrap(), lc("2"));
    assert_eq!(lc("eps^2").sqrt().unwrap(), lc("eps"));
    assert_eq!(lc("-1 + eps").sqrt(), Err(FieldError::NegativeLeading));
    assert_eq!(lc("eps").nth_root(0), Err(FieldError::InvalidRoot));
}

#[test]
fn cube_root_of_infinite() {
    let a = lc("8*eps^(-3) + 1");
    let c = a.nth_root(3).unwrap();
    assert_eq!(c.leading_exponent(), Some(r(-1, 1)));
    let back = c.powi(3).unwrap();
    assert!(back.approx_eq(&a), "{back}");
}

#[test]
fn classify_examples() {
    assert_eq!(lc("eps").classify(), Classification::Infinitesimal);
    assert_eq!(lc("3 + eps").classify(), Classification::FiniteWithInfinitesimalPart);
    assert_eq!(lc("eps^(-1)").classify(), Classification::Infinite);
    assert_eq!(lc("-2.5").classify(), Classification::AppreciableFinite);
    assert_eq!(LcNumber::zero(cfg()).classify(), Classification::Zero);
}

#[test]
fn truncation_keeps_depth_window() {
    let c = cfg().with_depth(3);
    let x = LcNumber::parse("eps^(-1) + 1 + eps + eps^2 + eps^3", c).unwrap();
    assert_eq!(x.terms().len(), 4);
    assert_eq!(x.terms().last().unwrap().exp, r(2, 1));
}

#[test]
fn cancellation_renormalizes() {
    let a = lc("1 + eps + 2*eps^2");
    let b = lc("1 + eps");
    let d = &a - &b;
    assert_eq!(d, lc("2*eps^2"));
    assert!((&a - &a).is_zero());
}

#[test]
fn powi_handles_negative_and_zero() {
    let x = lc("2 + eps");
    assert_eq!(x.powi(0).unwrap(), lc("1"));
    let back = &x.powi(-3).unwrap() * &x.powi(3).unwrap();
    assert!(back.approx_eq(&lc("1")));
    assert_eq!(LcNumber::zero(cfg()).powi(-1), Err(FieldError::DivisionByZero));
}

#[test]
fn text_rendering() {
    assert_eq!(lc("3 + 5*eps + eps^2").to_string(), "3 + 5*eps + eps^2");
    assert_eq!(lc("eps^(1/2) - 2*eps^(-1)").to_string(), "-2*eps^(-1) + eps^(1/2)");
    assert_eq!(LcNumber::zero(cfg()).to_string(), "0");
    assert_eq!(lc("-eps").to_string(), "-eps");
    assert_eq!(lc("0.5 - 1.25*eps^(3/2)").to_string(), "0.5 - 1.25*eps^(3/2)");
    assert_eq!(lc("1e-3eps").to_string(), "0.001*eps");
}

#[test]
fn parse_errors_report_column() {
    let e = LcNumber::parse("1 + * eps", cfg()).unwrap_err();
    assert_eq!(e.column, 5);
    assert!(LcNumber::parse("1 + eps^(1/0)", cfg()).is_err());
    assert!(LcNumber::parse("1 + epsilon", cfg()).is_err());
}

#[test]
fn config_validation() {
    assert!(FieldConfig::new(0, 64, 1e-14, 1e-10).is_err());
    assert!(FieldConfig::new(10, 64, 1e-8, 1e-10).is_err());
    assert!(FieldConfig::new(10, 0, 1e-14, 1e-10).is_err());
    assert!(FieldConfig::new(10, 64, 1e-14, 1e-10).is_ok());
}

#[test]
fn non_archimedean_up_to_a_million() {
    let eps = LcNumber::eps(cfg());
    let one = LcNumber::one(cfg());
    for n in (1..=1_000_000u32).step_by(997).chain([1_000_000]) {
        assert_eq!(eps.scale(n as f64).compare(&one), Ordering::Less, "n={n}");
    }
}

#[test]
fn tiny_and_huge_coefficients_round_trip() {
    let c = FieldConfig::default();
    let v = LcNumber::from_terms(
        [
            Term::new(Rational::from_integer(-1), 2.5e20),
            Term::new(Rational::new(1, 3), -3.25e-9),
        ],
        c,
    );
    let s = v.to_string();
    assert_eq!(s, "2.5e20*eps^(-1) - 3.25e-9*eps^(1/3)");
    assert_eq!(LcNumber::parse(&s, c).unwrap(), v);
}
