//! JSON shapes of command results. Field order is fixed by declaration
//! order, so equal results serialize to identical bytes.

use serde::Serialize;

use hyperreal_core::calculus::{IntegralResult, PartitionResult, ThetaResult};
use hyperreal_core::formula_dsl::CheckReport;
use hyperreal_core::LcNumber;

#[derive(Debug, Serialize)]
pub struct LcTerm {
    /// Always `p/q`, including integers.
    pub exp: String,
    pub coef: f64,
}

pub fn lc(v: &LcNumber) -> Vec<LcTerm> {
    v.terms()
        .iter()
        .map(|t| LcTerm {
            exp: format!("{}/{}", t.exp.numer(), t.exp.denom()),
            coef: t.coef,
        })
        .collect()
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Value {
    Real(f64),
    Series(Vec<LcTerm>),
}

#[derive(Debug, Serialize)]
pub struct Eval {
    pub value: Vec<LcTerm>,
    pub classification: &'static str,
}

#[derive(Debug, Serialize)]
pub struct StandardPart {
    pub st: f64,
    pub classification: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Derivative {
    pub value: f64,
    pub order: u32,
    pub at: f64,
}

#[derive(Debug, Serialize)]
pub struct Theta {
    pub theta: Value,
    pub residual_norm: f64,
    pub leading_order: Option<u32>,
    pub degenerate: bool,
}

impl Theta {
    pub fn real(r: &ThetaResult<f64>) -> Self {
        Theta {
            theta: Value::Real(r.theta),
            residual_norm: r.residual.abs(),
            leading_order: r.leading_order,
            degenerate: r.degenerate,
        }
    }

    pub fn series(r: &ThetaResult<LcNumber>) -> Self {
        Theta {
            theta: Value::Series(lc(&r.theta)),
            residual_norm: max_abs(&r.residual),
            leading_order: r.leading_order,
            degenerate: r.degenerate,
        }
    }
}

pub fn max_abs(v: &LcNumber) -> f64 {
    v.terms().iter().map(|t| t.coef.abs()).fold(0.0, f64::max)
}

#[derive(Debug, Serialize)]
pub struct Partition {
    pub c: f64,
    pub max: f64,
    /// `[H, i0, x]` per refinement round.
    pub trace: Vec<(u128, u128, f64)>,
}

impl From<&PartitionResult> for Partition {
    fn from(r: &PartitionResult) -> Self {
        Partition {
            c: r.argmax,
            max: r.max_value,
            trace: r.trace.iter().map(|t| (t.partitions, t.index, t.x)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Integral {
    pub value: f64,
    pub error: Option<f64>,
    pub sums: Vec<f64>,
}

impl From<&IntegralResult> for Integral {
    fn from(r: &IntegralResult) -> Self {
        Integral {
            value: r.value,
            error: r.error,
            sums: r.sums.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Taylor {
    pub residual: Value,
    pub residual_norm: f64,
}

#[derive(Debug, Serialize)]
pub struct Bound {
    pub var: String,
    pub value: Vec<LcTerm>,
}

#[derive(Debug, Serialize)]
pub struct FormulaReport {
    pub line: usize,
    pub formula: String,
    pub verdict: &'static str,
    pub samples_used: u64,
    pub binding: Vec<Bound>,
    pub seed: u64,
    pub eq_tol: f64,
}

impl FormulaReport {
    pub fn new(line: usize, formula: String, r: &CheckReport) -> Self {
        FormulaReport {
            line,
            formula,
            verdict: r.verdict.as_str(),
            samples_used: r.samples_used,
            binding: r
                .binding
                .iter()
                .map(|(var, v)| Bound {
                    var: var.clone(),
                    value: lc(v),
                })
                .collect(),
            seed: r.seed,
            eq_tol: r.eq_tol,
        }
    }
}
