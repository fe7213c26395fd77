use alloc::vec::Vec;

use rand::Rng;

use super::Stratum;
use crate::lc_field::{FieldConfig, FieldError, LcNumber, Rational, Term};

/// Relative frequency of each sample shape when a stratum admits several.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KindWeights {
    pub real: f64,
    pub infinitesimal: f64,
    /// Real part plus an infinitesimal tail.
    pub finite_mixed: f64,
    pub infinite: f64,
}

impl Default for KindWeights {
    fn default() -> Self {
        KindWeights {
            real: 1.0,
            infinitesimal: 1.0,
            finite_mixed: 1.0,
            infinite: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SamplerConfig {
    pub weights: KindWeights,
    /// Range of coefficient magnitudes; signs are drawn separately.
    pub coef_min: f64,
    pub coef_max: f64,
    /// Largest exponent denominator.
    pub max_denominator: i64,
    /// Leading exponents lie in `[-max_lead, max_lead]`.
    pub max_lead: i64,
    /// Extra terms per sample, placed up to `lead + 2`.
    pub max_extra_terms: usize,
    pub samples: usize,
    pub witness_pool: usize,
    pub seed: u64,
    pub field: FieldConfig,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            weights: KindWeights::default(),
            coef_min: 0.1,
            coef_max: 10.0,
            max_denominator: 3,
            max_lead: 3,
            max_extra_terms: 2,
            samples: 1000,
            witness_pool: 200,
            seed: 0,
            field: FieldConfig::default(),
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<(), FieldError> {
        let w = self.weights;
        let ws = [w.real, w.infinitesimal, w.finite_mixed, w.infinite];
        if ws.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) || !ws.iter().any(|x| *x > 0.0) {
            return Err(FieldError::InvalidConfig("weights must be nonnegative with one positive"));
        }
        if !(self.coef_min > 0.0 && self.coef_min <= self.coef_max && self.coef_max.is_finite()) {
            return Err(FieldError::InvalidConfig("need 0 < coef_min <= coef_max"));
        }
        if self.max_denominator < 1 || self.max_lead < 1 {
            return Err(FieldError::InvalidConfig("denominator and lead bounds must be >= 1"));
        }
        if self.samples == 0 {
            return Err(FieldError::InvalidConfig("samples must be positive"));
        }
        self.field.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kind {
    Real,
    Infinitesimal,
    FiniteMixed,
    Infinite,
}

/// One stratification cell: a shape and the sign of the leading term.
pub(crate) type Cell = (Kind, bool);

pub(crate) fn cells(stratum: Stratum, w: &KindWeights) -> Vec<Cell> {
    use Kind::*;
    let (kinds, positive_only): (&[Kind], bool) = match stratum {
        Stratum::Real => (&[Real], false),
        Stratum::PositiveReal => (&[Real], true),
        Stratum::Infinitesimal => (&[Infinitesimal], false),
        Stratum::Positive => (&[Real, Infinitesimal, FiniteMixed, Infinite], true),
        Stratum::Finite => (&[Real, Infinitesimal, FiniteMixed], false),
        Stratum::Infinite => (&[Infinite], false),
        Stratum::Any => (&[Real, Infinitesimal, FiniteMixed, Infinite], false),
    };
    // Zero-weight kinds are dropped unless that would empty the stratum.
    let weighted: Vec<Kind> = kinds.iter().copied().filter(|k| weight(*k, w) > 0.0).collect();
    let kinds = if weighted.is_empty() { kinds.to_vec() } else { weighted };
    let mut out = Vec::new();
    for k in kinds {
        out.push((k, true));
        if !positive_only {
            out.push((k, false));
        }
    }
    out
}

fn weight(k: Kind, w: &KindWeights) -> f64 {
    match k {
        Kind::Real => w.real,
        Kind::Infinitesimal => w.infinitesimal,
        Kind::FiniteMixed => w.finite_mixed,
        Kind::Infinite => w.infinite,
    }
}

pub(crate) fn random_cell<R: Rng + ?Sized>(cells: &[Cell], w: &KindWeights, rng: &mut R) -> Cell {
    let total: f64 = cells.iter().map(|c| weight(c.0, w)).sum();
    if total <= 0.0 {
        return cells[rng.gen_range(0..cells.len())];
    }
    let mut pick = rng.gen::<f64>() * total;
    for c in cells {
        pick -= weight(c.0, w);
        if pick < 0.0 {
            return *c;
        }
    }
    cells[cells.len() - 1]
}

fn magnitude<R: Rng + ?Sized>(cfg: &SamplerConfig, rng: &mut R) -> f64 {
    if cfg.coef_min == cfg.coef_max {
        cfg.coef_min
    } else {
        rng.gen_range(cfg.coef_min..cfg.coef_max)
    }
}

fn signed<R: Rng + ?Sized>(cfg: &SamplerConfig, rng: &mut R) -> f64 {
    let m = magnitude(cfg, rng);
    if rng.gen::<bool>() {
        m
    } else {
        -m
    }
}

/// A rational in `(0, span]` with denominator at most the configured bound.
fn positive_exponent<R: Rng + ?Sized>(span: i64, cfg: &SamplerConfig, rng: &mut R) -> Rational {
    let d = rng.gen_range(1..=cfg.max_denominator);
    let n = rng.gen_range(1..=span * d);
    Rational::new(n, d)
}

fn tail<R: Rng + ?Sized>(lead: Rational, cfg: &SamplerConfig, rng: &mut R, out: &mut Vec<Term>) {
    let extra = rng.gen_range(0..=cfg.max_extra_terms);
    for _ in 0..extra {
        let e = lead + positive_exponent(2, cfg, rng);
        out.push(Term::new(e, signed(cfg, rng)));
    }
}

pub(crate) fn draw_cell<R: Rng + ?Sized>(cell: Cell, cfg: &SamplerConfig, rng: &mut R) -> LcNumber {
    let (kind, positive) = cell;
    let lead_coef = if positive { magnitude(cfg, rng) } else { -magnitude(cfg, rng) };
    let mut terms = Vec::new();
    match kind {
        Kind::Real => terms.push(Term::new(Rational::from_integer(0), lead_coef)),
        Kind::Infinitesimal => {
            let lead = positive_exponent(cfg.max_lead, cfg, rng);
            terms.push(Term::new(lead, lead_coef));
            tail(lead, cfg, rng, &mut terms);
        }
        Kind::FiniteMixed => {
            terms.push(Term::new(Rational::from_integer(0), lead_coef));
            let lead = positive_exponent(cfg.max_lead, cfg, rng);
            terms.push(Term::new(lead, signed(cfg, rng)));
            tail(lead, cfg, rng, &mut terms);
        }
        Kind::Infinite => {
            let lead = -positive_exponent(cfg.max_lead, cfg, rng);
            terms.push(Term::new(lead, lead_coef));
            tail(lead, cfg, rng, &mut terms);
        }
    }
    // Distinct exponents keep the leading term intact under merging.
    terms.sort_by_key(|t| t.exp);
    terms.dedup_by(|a, b| a.exp == b.exp);
    LcNumber::from_terms(terms, cfg.field)
}

/// Draws one element of `stratum`.
///
/// Real samples are a single exponent-0 term, infinitesimal ones lead with
/// an exponent in `(0, max_lead]`, infinite ones with one in `[-max_lead, 0)`
/// and finite-mixed ones carry a real part plus an infinitesimal tail.
/// Coefficient magnitudes are uniform in `[coef_min, coef_max)`.
pub fn sample<R: Rng + ?Sized>(stratum: Stratum, cfg: &SamplerConfig, rng: &mut R) -> LcNumber {
    let cs = cells(stratum, &cfg.weights);
    let cell = random_cell(&cs, &cfg.weights, rng);
    draw_cell(cell, cfg, rng)
}
