//! First-order formulas over field terms and a randomized transfer checker.
//!
//! ```text
//! formula := (quant ",")* quant "." matrix | matrix
//! quant   := ("forall"|"exists") ident (":" stratum)?
//! stratum := "real"|"positive-real"|"infinitesimal"|"positive"|"finite"|"infinite"|"any"
//! matrix  := disj ("=>" matrix)?
//! disj    := conj ("or" conj)*
//! conj    := atomf ("and" atomf)*
//! atomf   := "not" atomf | "(" matrix ")" | term ("<"|"<="|"=") term
//! ```
//!
//! Terms use the expression grammar of [`crate::transfer_ext`] and may
//! mention the literal `eps`. A missing stratum means `any`.
//!
//! Checking is falsification, not proof: universal quantifiers are
//! instantiated with stratified samples and existential ones with a bounded
//! witness search.

mod check;
mod parser;
mod sampler;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::lc_field::LcNumber;
use crate::transfer_ext::{Expr, ExprError};

pub use check::{check, evaluate_matrix, CheckReport, Verdict};
pub use parser::{parse_formula, parse_formula_lines};
pub use sampler::{sample, KindWeights, SamplerConfig};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormulaError {
    #[error("ParseError at line {line}, column {column} near '{token}': {message}")]
    Parse {
        line: usize,
        column: usize,
        token: String,
        message: String,
    },
    #[error("BindingError: variable '{var}' {message}")]
    Binding { var: String, message: &'static str },
    #[error("EvaluationError: {source} with binding {binding}")]
    Evaluation { binding: String, source: ExprError },
}

impl FormulaError {
    pub fn name(&self) -> &'static str {
        match self {
            FormulaError::Parse { .. } => "ParseError",
            FormulaError::Binding { .. } => "BindingError",
            FormulaError::Evaluation { .. } => "EvaluationError",
        }
    }
}

impl From<ExprError> for FormulaError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Parse {
                line,
                column,
                token,
                message,
            } => FormulaError::Parse {
                line,
                column,
                token,
                message,
            },
            other => FormulaError::Evaluation {
                binding: String::new(),
                source: other,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    ForAll,
    Exists,
}

/// The part of the field a bound variable ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stratum {
    Real,
    PositiveReal,
    Infinitesimal,
    Positive,
    Finite,
    Infinite,
    Any,
}

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::Real,
        Stratum::PositiveReal,
        Stratum::Infinitesimal,
        Stratum::Positive,
        Stratum::Finite,
        Stratum::Infinite,
        Stratum::Any,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Stratum::Real => "real",
            Stratum::PositiveReal => "positive-real",
            Stratum::Infinitesimal => "infinitesimal",
            Stratum::Positive => "positive",
            Stratum::Finite => "finite",
            Stratum::Infinite => "infinite",
            Stratum::Any => "any",
        }
    }

    /// Membership test; zero is real and finite but not infinitesimal.
    pub fn contains(&self, v: &LcNumber) -> bool {
        match self {
            Stratum::Real => v.is_real(),
            Stratum::PositiveReal => v.is_real() && v.is_positive(),
            Stratum::Infinitesimal => v.is_infinitesimal(),
            Stratum::Positive => v.is_positive(),
            Stratum::Finite => v.is_finite(),
            Stratum::Infinite => v.is_infinite(),
            Stratum::Any => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundVar {
    pub quantifier: Quantifier,
    pub name: String,
    pub stratum: Stratum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }
}

/// Quantifier-free part of a formula.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Atom(Expr, Relation, Expr),
    Not(Box<Matrix>),
    And(Box<Matrix>, Box<Matrix>),
    Or(Box<Matrix>, Box<Matrix>),
    Implies(Box<Matrix>, Box<Matrix>),
}

impl Matrix {
    fn level(&self) -> u8 {
        match self {
            Matrix::Implies(..) => 0,
            Matrix::Or(..) => 1,
            Matrix::And(..) => 2,
            Matrix::Not(_) | Matrix::Atom(..) => 3,
        }
    }

    fn fmt_level(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.level() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Matrix::Atom(l, r, rhs) => write!(f, "{l} {} {rhs}", r.symbol())?,
            Matrix::Not(m) => {
                f.write_str("not ")?;
                m.fmt_level(f, 3)?;
            }
            Matrix::And(a, b) => {
                a.fmt_level(f, 2)?;
                f.write_str(" and ")?;
                b.fmt_level(f, 3)?;
            }
            Matrix::Or(a, b) => {
                a.fmt_level(f, 1)?;
                f.write_str(" or ")?;
                b.fmt_level(f, 2)?;
            }
            Matrix::Implies(a, b) => {
                a.fmt_level(f, 1)?;
                f.write_str(" => ")?;
                b.fmt_level(f, 0)?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_level(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Formula {
    pub prefix: Vec<BoundVar>,
    pub matrix: Matrix,
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.prefix.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let kw = match q.quantifier {
                Quantifier::ForAll => "forall",
                Quantifier::Exists => "exists",
            };
            write!(f, "{kw} {}: {}", q.name, q.stratum.name())?;
        }
        if !self.prefix.is_empty() {
            f.write_str(". ")?;
        }
        write!(f, "{}", self.matrix)
    }
}
