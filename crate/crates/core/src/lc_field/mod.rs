//! A truncated Levi-Civita field.
//!
//! An [`LcNumber`] is a finite sum `Σ cᵢ·εᵠⁱ` with strictly increasing exact
//! rational exponents `qᵢ` and `f64` coefficients. `ε` is a positive
//! infinitesimal: it is smaller than every positive real, and `ε⁻¹` is larger
//! than every real. Every value keeps only the orders that lie within
//! [`FieldConfig::depth`] exponent units of its own leading exponent, so
//! arithmetic is exact on the carried window and the error always sits beyond
//! it.

mod text;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::math;

pub use text::ParseLcError;
pub(crate) use text::Num;

/// Exact exponent type.
pub type Rational = num_rational::Ratio<i64>;

/// Upper bound on the number of series terms summed by [`power_series`].
const MAX_SERIES_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FieldError {
    #[error("DivisionByZero: division by zero")]
    DivisionByZero,
    #[error("NotFinite: value has a negative leading exponent")]
    NotFinite,
    #[error("NegativeLeading: root of a value whose leading coefficient is not positive")]
    NegativeLeading,
    #[error("InvalidRoot: root index must be at least 1")]
    InvalidRoot,
    #[error("InvalidConfig: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Parse(#[from] ParseLcError),
}

impl FieldError {
    /// Short error name, used by front ends.
    pub fn name(&self) -> &'static str {
        match self {
            FieldError::DivisionByZero => "DivisionByZero",
            FieldError::NotFinite => "NotFinite",
            FieldError::NegativeLeading => "NegativeLeading",
            FieldError::InvalidRoot => "InvalidRoot",
            FieldError::InvalidConfig(_) => "InvalidConfig",
            FieldError::Parse(_) => "ParseError",
        }
    }
}

/// Truncation budget and tolerances shared by all arithmetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    /// Number of exponent units kept past the leading exponent.
    pub depth: u32,
    pub max_terms: usize,
    /// Coefficients below this magnitude are dropped.
    pub zero_tol: f64,
    /// Coefficientwise tolerance for equality.
    pub eq_tol: f64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            depth: 10,
            max_terms: 64,
            zero_tol: 1e-14,
            eq_tol: 1e-10,
        }
    }
}

impl FieldConfig {
    pub fn new(depth: u32, max_terms: usize, zero_tol: f64, eq_tol: f64) -> Result<Self, FieldError> {
        let cfg = FieldConfig {
            depth,
            max_terms,
            zero_tol,
            eq_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        if self.depth < 1 {
            return Err(FieldError::InvalidConfig("depth must be at least 1"));
        }
        if self.max_terms < 1 {
            return Err(FieldError::InvalidConfig("max_terms must be at least 1"));
        }
        if !(self.zero_tol >= 0.0) {
            return Err(FieldError::InvalidConfig("zero_tol must be nonnegative"));
        }
        if !(self.eq_tol >= self.zero_tol) {
            return Err(FieldError::InvalidConfig("eq_tol must be at least zero_tol"));
        }
        Ok(())
    }

    pub fn with_depth(self, depth: u32) -> Self {
        FieldConfig { depth, ..self }
    }

    /// Combined config of two operands: the coarser of each setting.
    pub fn join(self, other: FieldConfig) -> FieldConfig {
        if self == other {
            return self;
        }
        FieldConfig {
            depth: self.depth.min(other.depth),
            max_terms: self.max_terms.min(other.max_terms),
            zero_tol: self.zero_tol.max(other.zero_tol),
            eq_tol: self.eq_tol.max(other.eq_tol),
        }
    }

    fn depth_rational(&self) -> Rational {
        Rational::from_integer(self.depth as i64)
    }
}

/// One `coef·ε^exp` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub exp: Rational,
    pub coef: f64,
}

impl Term {
    pub fn new(exp: Rational, coef: f64) -> Self {
        Term { exp, coef }
    }
}

/// Magnitude class of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Infinitesimal,
    /// A nonzero real with no infinitesimal part.
    AppreciableFinite,
    FiniteWithInfinitesimalPart,
    Infinite,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Zero => "zero",
            Classification::Infinitesimal => "infinitesimal",
            Classification::AppreciableFinite => "appreciable-finite",
            Classification::FiniteWithInfinitesimalPart => "finite-with-infinitesimal-part",
            Classification::Infinite => "infinite",
        }
    }
}

/// An element of the truncated Levi-Civita field.
#[derive(Debug, Clone, PartialEq)]
pub struct LcNumber {
    terms: Vec<Term>,
    config: FieldConfig,
}

/// Unnormalized term with the magnitude scale of its contributions, used to
/// detect cancellation.
#[derive(Clone, Copy)]
struct RawTerm {
    exp: Rational,
    coef: f64,
    scale: f64,
}

/// Exponent order. Same-denominator and integer cases skip the generic
/// `Ratio` comparison, which dominates the cost of small-series arithmetic.
#[inline]
fn exp_cmp(a: &Rational, b: &Rational) -> Ordering {
    if a.denom() == b.denom() {
        a.numer().cmp(b.numer())
    } else {
        (*a.numer() as i128 * *b.denom() as i128).cmp(&(*b.numer() as i128 * *a.denom() as i128))
    }
}

/// Exponents are kept in lowest terms, so equality is componentwise.
#[inline]
fn exp_eq(a: &Rational, b: &Rational) -> bool {
    a.numer() == b.numer() && a.denom() == b.denom()
}

#[inline]
fn exp_add(a: Rational, b: Rational) -> Rational {
    if *a.denom() == 1 && *b.denom() == 1 {
        Rational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

/// Applies the cleanup and truncation rules to sorted terms with distinct
/// exponents.
struct Clean<I> {
    inner: I,
    config: FieldConfig,
    limit: Option<Rational>,
    count: usize,
}

impl<I: Iterator<Item = RawTerm>> Iterator for Clean<I> {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        for t in self.inner.by_ref() {
            let mag = math::abs(t.coef);
            let cfg = &self.config;
            if t.coef == 0.0 || mag < cfg.zero_tol || mag <= cfg.zero_tol * t.scale {
                continue;
            }
            let l = *self.limit.get_or_insert_with(|| exp_add(t.exp, cfg.depth_rational()));
            if exp_cmp(&t.exp, &l) == Ordering::Greater || self.count >= cfg.max_terms {
                return None;
            }
            self.count += 1;
            return Some(Term::new(t.exp, t.coef));
        }
        None
    }
}

fn clean<I: Iterator<Item = RawTerm>>(inner: I, config: FieldConfig) -> Clean<I> {
    Clean {
        inner,
        config,
        limit: None,
        count: 0,
    }
}

fn normalize(mut raw: Vec<RawTerm>, config: &FieldConfig) -> Vec<Term> {
    if raw.windows(2).any(|w| exp_cmp(&w[0].exp, &w[1].exp) != Ordering::Less) {
        raw.sort_by(|a, b| exp_cmp(&a.exp, &b.exp));
        // Coalesce equal exponents in place.
        let mut w = 0;
        for r in 1..raw.len() {
            if exp_eq(&raw[w].exp, &raw[r].exp) {
                raw[w].coef += raw[r].coef;
                raw[w].scale += raw[r].scale;
            } else {
                w += 1;
                raw[w] = raw[r];
            }
        }
        raw.truncate(w + 1);
    }
    clean(raw.into_iter(), *config).collect()
}

/// The `cap` smallest sums of nonnegative multiples of `gens` (all
/// positive, ascending) that do not exceed `limit`, in ascending order.
fn lattice(gens: &[Rational], limit: Rational, cap: usize) -> Vec<Rational> {
    use alloc::collections::BTreeSet;
    use core::ops::Bound::{Excluded, Unbounded};

    let mut set = BTreeSet::new();
    set.insert(Rational::zero());
    let mut cur = Some(Rational::zero());
    while let Some(e) = cur {
        for g in gens {
            let n = exp_add(e, *g);
            if exp_cmp(&n, &limit) == Ordering::Greater {
                break;
            }
            set.insert(n);
            if set.len() > cap {
                set.pop_last();
            }
        }
        cur = set.range((Excluded(e), Unbounded)).next().copied();
    }
    set.into_iter().collect()
}

/// Merged view of `a ± b` for two normalized term lists.
struct Merge<'a> {
    a: &'a [Term],
    b: &'a [Term],
    sign: f64,
}

impl Iterator for Merge<'_> {
    type Item = RawTerm;

    fn next(&mut self) -> Option<RawTerm> {
        let raw = |exp, coef: f64| RawTerm {
            exp,
            coef,
            scale: math::abs(coef),
        };
        let (x, y) = match (self.a.first(), self.b.first()) {
            (None, None) => return None,
            (Some(x), None) => {
                self.a = &self.a[1..];
                return Some(raw(x.exp, x.coef));
            }
            (None, Some(y)) => {
                self.b = &self.b[1..];
                return Some(raw(y.exp, self.sign * y.coef));
            }
            (Some(x), Some(y)) => (x, y),
        };
        Some(match exp_cmp(&x.exp, &y.exp) {
            Ordering::Less => {
                self.a = &self.a[1..];
                raw(x.exp, x.coef)
            }
            Ordering::Greater => {
                self.b = &self.b[1..];
                raw(y.exp, self.sign * y.coef)
            }
            Ordering::Equal => {
                self.a = &self.a[1..];
                self.b = &self.b[1..];
                RawTerm {
                    exp: x.exp,
                    coef: x.coef + self.sign * y.coef,
                    scale: math::abs(x.coef) + math::abs(y.coef),
                }
            }
        })
    }
}

fn merge<'a>(a: &'a [Term], b: &'a [Term], negate_b: bool) -> Merge<'a> {
    Merge {
        a,
        b,
        sign: if negate_b { -1.0 } else { 1.0 },
    }
}

impl LcNumber {
    pub fn zero(config: FieldConfig) -> Self {
        LcNumber {
            terms: Vec::new(),
            config,
        }
    }

    pub fn one(config: FieldConfig) -> Self {
        Self::real(1.0, config)
    }

    pub fn real(value: f64, config: FieldConfig) -> Self {
        Self::monomial(value, Rational::zero(), config)
    }

    /// The infinitesimal generator `ε`.
    pub fn eps(config: FieldConfig) -> Self {
        Self::monomial(1.0, Rational::one(), config)
    }

    /// `coef·ε^exp`.
    pub fn monomial(coef: f64, exp: Rational, config: FieldConfig) -> Self {
        Self::from_terms([Term::new(exp, coef)], config)
    }

    /// Builds a normalized value from arbitrary terms: sorted, merged,
    /// cleaned of tiny coefficients and truncated.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>, config: FieldConfig) -> Self {
        let raw = terms
            .into_iter()
            .map(|t| RawTerm {
                exp: t.exp,
                coef: t.coef,
                scale: math::abs(t.coef),
            })
            .collect();
        LcNumber {
            terms: normalize(raw, &config),
            config,
        }
    }

    fn from_raw(raw: Vec<RawTerm>, config: FieldConfig) -> Self {
        LcNumber {
            terms: normalize(raw, &config),
            config,
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn config(&self) -> &FieldConfig {
        &self.config
    }

    /// Re-normalizes under another config.
    pub fn with_config(&self, config: FieldConfig) -> Self {
        Self::from_terms(self.terms.iter().copied(), config)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_exponent(&self) -> Option<Rational> {
        self.terms.first().map(|t| t.exp)
    }

    pub fn leading_coefficient(&self) -> Option<f64> {
        self.terms.first().map(|t| t.coef)
    }

    /// Coefficient of `ε^exp` (zero if absent).
    pub fn coefficient(&self, exp: Rational) -> f64 {
        self.terms
            .binary_search_by(|t| t.exp.cmp(&exp))
            .map(|i| self.terms[i].coef)
            .unwrap_or(0.0)
    }

    /// Coefficient of `ε^k` for an integer `k`.
    pub fn coefficient_at(&self, k: i64) -> f64 {
        self.coefficient(Rational::from_integer(k))
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncated_above(&self, max_exp: Rational) -> Self {
        LcNumber {
            terms: self.terms.iter().copied().take_while(|t| t.exp <= max_exp).collect(),
            config: self.config,
        }
    }

    /// Sign of the leading coefficient: -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.leading_coefficient() {
            None => 0,
            Some(c) if c > 0.0 => 1,
            Some(_) => -1,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.exp.is_zero())
    }

    pub fn is_infinitesimal(&self) -> bool {
        matches!(self.leading_exponent(), Some(e) if e.is_positive())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.leading_exponent(), Some(e) if e.is_negative())
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_terms(
            self.terms.iter().map(|t| Term::new(t.exp, t.coef * factor)),
            self.config,
        )
    }

    /// Multiplies by `ε^shift`.
    pub fn shift(&self, shift: Rational) -> Self {
        LcNumber {
            terms: self.terms.iter().map(|t| Term::new(t.exp + shift, t.coef)).collect(),
            config: self.config,
        }
    }

    pub fn add_ref(&self, other: &LcNumber) -> LcNumber {
        let config = self.config.join(other.config);
        LcNumber {
            terms: clean(merge(&self.terms, &other.terms, false), config).collect(),
            config,
        }
    }

    pub fn sub_ref(&self, other: &LcNumber) -> LcNumber {
        let config = self.config.join(other.config);
        LcNumber {
            terms: clean(merge(&self.terms, &other.terms, true), config).collect(),
            config,
        }
    }

    /// Truncated Cauchy product. Only pairs that land within `depth` of the
    /// product's leading exponent are formed.
    pub fn mul_ref(&self, other: &LcNumber) -> LcNumber {
        let config = self.config.join(other.config);
        let (Some(la), Some(lb)) = (self.leading_exponent(), other.leading_exponent()) else {
            return LcNumber::zero(config);
        };
        let depth = config.depth_rational();
        let a_limit = exp_add(la, depth);
        let limit = exp_add(a_limit, lb);
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ta in &self.terms {
            if exp_cmp(&ta.exp, &a_limit) == Ordering::Greater {
                break;
            }
            for tb in &other.terms {
                let exp = exp_add(ta.exp, tb.exp);
                if exp_cmp(&exp, &limit) == Ordering::Greater {
                    break;
                }
                let p = ta.coef * tb.coef;
                raw.push(RawTerm {
                    exp,
                    coef: p,
                    scale: math::abs(p),
                });
            }
        }
        Self::from_raw(raw, config)
    }

    /// Splits a nonzero value as `c·ε^q·(1 + m)` with `m` infinitesimal or
    /// zero, returning `(c, q, m)`.
    fn factor_leading(&self) -> Option<(f64, Rational, LcNumber)> {
        let lead = *self.terms.first()?;
        let m = LcNumber {
            terms: self.terms[1..]
                .iter()
                .map(|t| Term::new(t.exp - lead.exp, t.coef / lead.coef))
                .collect(),
            config: self.config,
        };
        Some((lead.coef, lead.exp, m))
    }

    /// Multiplicative inverse.
    ///
    /// With `self = c·ε^q·(1 + m)`, the coefficients of `b = 1/(1 + m)` are
    /// solved order by order from `b·(1 + m) = 1` over the exponents
    /// reachable from those of `m`. Each coefficient then carries only its
    /// own rounding error, where summing the geometric series of `m` lets
    /// errors from fast-growing powers of `m` pile up.
    pub fn inv(&self) -> Result<LcNumber, FieldError> {
        let (c, q, m) = self.factor_leading().ok_or(FieldError::DivisionByZero)?;
        let gens: Vec<Rational> = m.terms.iter().map(|t| t.exp).collect();
        let exps = lattice(&gens, self.config.depth_rational(), self.config.max_terms);
        let mut b: Vec<Term> = Vec::with_capacity(exps.len());
        for e in exps {
            if e.is_zero() {
                b.push(Term::new(e, 1.0));
                continue;
            }
            let mut acc = 0.0;
            for t in &m.terms {
                if exp_cmp(&t.exp, &e) == Ordering::Greater {
                    break;
                }
                let rest = e - t.exp;
                if let Ok(i) = b.binary_search_by(|x| exp_cmp(&x.exp, &rest)) {
                    acc += t.coef * b[i].coef;
                }
            }
            b.push(Term::new(e, -acc));
        }
        Ok(LcNumber::from_terms(b.into_iter().map(|t| Term::new(t.exp - q, t.coef / c)), self.config))
    }

    pub fn checked_div(&self, other: &LcNumber) -> Result<LcNumber, FieldError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents go through [`LcNumber::inv`].
    pub fn powi(&self, n: i64) -> Result<LcNumber, FieldError> {
        if n < 0 {
            return self.inv()?.powi(-n);
        }
        let mut base = self.clone();
        let mut acc = LcNumber::one(self.config);
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// Positive `n`-th root through the binomial series of the tail.
    pub fn nth_root(&self, n: u32) -> Result<LcNumber, FieldError> {
        if n == 0 {
            return Err(FieldError::InvalidRoot);
        }
        let Some((c, q, m)) = self.factor_leading() else {
            return Ok(self.clone());
        };
        if c <= 0.0 {
            return Err(FieldError::NegativeLeading);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let alpha = 1.0 / n as f64;
        let mut coeffs = Vec::new();
        let mut binom = 1.0;
        coeffs.push(binom);
        for k in 1..=MAX_SERIES_ORDER {
            binom *= (alpha - (k - 1) as f64) / k as f64;
            coeffs.push(binom);
        }
        let series = power_series(|k| coeffs[k], &m, self.config);
        let root_c = libm::pow(c, alpha);
        Ok(series.scale(root_c).shift(q / Rational::from_integer(n as i64)))
    }

    pub fn sqrt(&self) -> Result<LcNumber, FieldError> {
        self.nth_root(2)
    }

    /// Order comparison. Terms of the difference with magnitude at most
    /// `eq_tol` are treated as zero; the first remaining term decides.
    pub fn compare(&self, other: &LcNumber) -> Ordering {
        let config = self.config.join(other.config);
        let tol = config.eq_tol;
        let mut diff = clean(merge(&self.terms, &other.terms, true), config);
        match diff.find(|t| math::abs(t.coef) > tol) {
            None => Ordering::Equal,
            Some(t) if t.coef > 0.0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn approx_eq(&self, other: &LcNumber) -> bool {
        self.compare(other) == Ordering::Equal
    }

    /// The real number infinitely close to a finite value.
    pub fn standard_part(&self) -> Result<f64, FieldError> {
        if self.is_infinite() {
            return Err(FieldError::NotFinite);
        }
        Ok(self.coefficient(Rational::zero()))
    }

    /// `a ≈ b`: the difference is zero or infinitesimal. Coefficients at or
    /// below `eq_tol` are ignored.
    pub fn is_infinitely_close(&self, other: &LcNumber) -> bool {
        let d = self.sub_ref(other);
        let tol = d.config.eq_tol;
        match d.terms.iter().find(|t| math::abs(t.coef) > tol) {
            None => true,
            Some(t) => t.exp.is_positive(),
        }
    }

    pub fn classify(&self) -> Classification {
        match self.leading_exponent() {
            None => Classification::Zero,
            Some(e) if e.is_positive() => Classification::Infinitesimal,
            Some(e) if e.is_negative() => Classification::Infinite,
            Some(_) if self.terms.len() == 1 => Classification::AppreciableFinite,
            Some(_) => Classification::FiniteWithInfinitesimalPart,
        }
    }

    /// Splits a finite value into its standard part and the infinitesimal
    /// remainder.
    pub fn split_standard(&self) -> Result<(f64, LcNumber), FieldError> {
        let s = self.standard_part()?;
        let rest = LcNumber {
            terms: self.terms.iter().copied().filter(|t| !t.exp.is_zero()).collect(),
            config: self.config,
        };
        Ok((s, rest))
    }
}

/// Sums `Σ coeff(k)·δᵏ` for `δ` zero or infinitesimal, up to the last order
/// that can reach the result's truncation window.
///
/// Powers are taken of `δ/λ` with `λ` the magnitude of the leading
/// coefficient of `δ`, and `λᵏ` is folded into the coefficients. Powers of a
/// small `δ` would otherwise fall under the absolute cleanup threshold
/// before being multiplied by large series coefficients.
pub fn power_series(coeff: impl Fn(usize) -> f64, delta: &LcNumber, config: FieldConfig) -> LcNumber {
    let config = config.join(delta.config);
    let c0 = coeff(0);
    let Some(step) = delta.leading_exponent() else {
        return LcNumber::real(c0, config);
    };
    debug_assert!(step.is_positive(), "power_series needs an infinitesimal argument");
    let depth = config.depth_rational();
    let first_nonzero = (0..=MAX_SERIES_ORDER).find(|&k| coeff(k) != 0.0);
    let Some(k0) = first_nonzero else {
        return LcNumber::zero(config);
    };
    // Largest k with (k - k0)·step <= depth.
    let span = (depth / step).floor().to_integer().to_usize().unwrap_or(MAX_SERIES_ORDER);
    let last = (k0 + span).min(MAX_SERIES_ORDER);

    let lambda = math::abs(delta.terms[0].coef);
    let unit = delta.scale(1.0 / lambda);
    let mut raw: Vec<RawTerm> = Vec::new();
    let mut power = LcNumber::one(config);
    let mut lambda_k = 1.0;
    for k in 0..=last {
        if k > 0 {
            power = power.mul_ref(&unit);
            lambda_k *= lambda;
        }
        let c = coeff(k) * lambda_k;
        if c == 0.0 {
            continue;
        }
        raw.extend(power.terms.iter().map(|t| {
            let v = t.coef * c;
            RawTerm {
                exp: t.exp,
                coef: v,
                scale: math::abs(v),
            }
        }));
    }
    LcNumber::from_raw(raw, config)
}

impl Add for LcNumber {
    type Output = LcNumber;
    fn add(self, rhs: LcNumber) -> LcNumber {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a LcNumber> for &'a LcNumber {
    type Output = LcNumber;
    fn add(self, rhs: &'a LcNumber) -> LcNumber {
        self.add_ref(rhs)
    }
}

impl Sub for LcNumber {
    type Output = LcNumber;
    fn sub(self, rhs: LcNumber) -> LcNumber {
        self.sub_ref(&rhs)
    }
}

impl<'a> Sub<&'a LcNumber> for &'a LcNumber {
    type Output = LcNumber;
    fn sub(self, rhs: &'a LcNumber) -> LcNumber {
        self.sub_ref(rhs)
    }
}

impl Mul for LcNumber {
    type Output = LcNumber;
    fn mul(self, rhs: LcNumber) -> LcNumber {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a LcNumber> for &'a LcNumber {
    type Output = LcNumber;
    fn mul(self, rhs: &'a LcNumber) -> LcNumber {
        self.mul_ref(rhs)
    }
}

impl Neg for LcNumber {
    type Output = LcNumber;
    fn neg(mut self) -> LcNumber {
        for t in &mut self.terms {
            t.coef = -t.coef;
        }
        self
    }
}

impl Neg for &LcNumber {
    type Output = LcNumber;
    fn neg(self) -> LcNumber {
        -self.clone()
    }
}

#[cfg(test)]
mod tests;
