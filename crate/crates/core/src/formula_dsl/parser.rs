use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{BoundVar, Formula, FormulaError, Matrix, Quantifier, Relation, Stratum};
use crate::transfer_ext::lexer::{Tok, TokenStream};
use crate::transfer_ext::{ExprError, ExprParser, Func};

const KEYWORDS: [&str; 6] = ["forall", "exists", "and", "or", "not", "eps"];

fn is_reserved(name: &str) -> bool {
    KEYWORDS.contains(&name) || Func::from_name(name).is_some()
}

/// Parses one formula and checks that every matrix variable is bound
/// exactly once.
pub fn parse_formula(src: &str) -> Result<Formula, FormulaError> {
    let mut ts = TokenStream::new(src)?;
    let formula = FormulaParser { ts: &mut ts }.formula()?;
    check_bindings(&formula)?;
    Ok(formula)
}

/// Parses a formula file: one formula per line, `#` starts a comment and
/// blank lines are skipped. Returns each formula with its 1-based line.
pub fn parse_formula_lines(src: &str) -> Result<Vec<(usize, Formula)>, FormulaError> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match parse_formula(line) {
            Ok(f) => out.push((i + 1, f)),
            Err(FormulaError::Parse {
                column, token, message, ..
            }) => {
                return Err(FormulaError::Parse {
                    line: i + 1,
                    column,
                    token,
                    message,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn check_bindings(f: &Formula) -> Result<(), FormulaError> {
    let mut bound = BTreeSet::new();
    for q in &f.prefix {
        if is_reserved(&q.name) {
            return Err(FormulaError::Binding {
                var: q.name.clone(),
                message: "is a reserved word",
            });
        }
        if !bound.insert(q.name.clone()) {
            return Err(FormulaError::Binding {
                var: q.name.clone(),
                message: "is bound more than once",
            });
        }
    }
    let mut used = BTreeSet::new();
    collect_matrix_vars(&f.matrix, &mut used);
    for v in used {
        if v != "eps" && !bound.contains(&v) {
            return Err(FormulaError::Binding {
                var: v,
                message: "is not bound by any quantifier",
            });
        }
    }
    Ok(())
}

fn collect_matrix_vars(m: &Matrix, out: &mut BTreeSet<String>) {
    match m {
        Matrix::Atom(a, _, b) => {
            out.extend(a.free_vars());
            out.extend(b.free_vars());
        }
        Matrix::Not(x) => collect_matrix_vars(x, out),
        Matrix::And(a, b) | Matrix::Or(a, b) | Matrix::Implies(a, b) => {
            collect_matrix_vars(a, out);
            collect_matrix_vars(b, out);
        }
    }
}

struct FormulaParser<'a> {
    ts: &'a mut TokenStream,
}

impl FormulaParser<'_> {
    fn keyword(&self) -> Option<&str> {
        match self.ts.peek() {
            Tok::Ident(s) => Some(s.as_str()),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula, ExprError> {
        let mut prefix = Vec::new();
        if matches!(self.keyword(), Some("forall" | "exists")) {
            loop {
                prefix.push(self.quantifier()?);
                if self.ts.eat(&Tok::Comma) {
                    continue;
                }
                self.ts.expect(&Tok::Dot)?;
                break;
            }
        }
        let matrix = self.matrix()?;
        if *self.ts.peek() != Tok::Eof {
            return Err(self.ts.error("end of formula"));
        }
        Ok(Formula { prefix, matrix })
    }

    fn quantifier(&mut self) -> Result<BoundVar, ExprError> {
        let quantifier = match self.keyword() {
            Some("forall") => Quantifier::ForAll,
            Some("exists") => Quantifier::Exists,
            _ => return Err(self.ts.error("'forall' or 'exists'")),
        };
        self.ts.next();
        let name = match self.ts.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.ts.error("a variable name")),
        };
        self.ts.next();
        let stratum = if self.ts.eat(&Tok::Colon) { self.stratum()? } else { Stratum::Any };
        Ok(BoundVar {
            quantifier,
            name,
            stratum,
        })
    }

    fn stratum(&mut self) -> Result<Stratum, ExprError> {
        let word = match self.keyword() {
            Some(w) => w.to_string(),
            None => return Err(self.ts.error("a stratum")),
        };
        let s = match word.as_str() {
            "real" => Stratum::Real,
            "infinitesimal" => Stratum::Infinitesimal,
            "finite" => Stratum::Finite,
            "infinite" => Stratum::Infinite,
            "any" => Stratum::Any,
            "positive" => {
                if *self.ts.peek_at(1) == Tok::Minus && *self.ts.peek_at(2) == Tok::Ident("real".to_string()) {
                    self.ts.next();
                    self.ts.next();
                    Stratum::PositiveReal
                } else {
                    Stratum::Positive
                }
            }
            _ => return Err(self.ts.error("a stratum")),
        };
        self.ts.next();
        Ok(s)
    }

    fn matrix(&mut self) -> Result<Matrix, ExprError> {
        let lhs = self.disj()?;
        if self.ts.eat(&Tok::Implies) {
            let rhs = self.matrix()?;
            return Ok(Matrix::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Matrix, ExprError> {
        let mut lhs = self.conj()?;
        while self.keyword() == Some("or") {
            self.ts.next();
            lhs = Matrix::Or(Box::new(lhs), Box::new(self.conj()?));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Matrix, ExprError> {
        let mut lhs = self.atomf()?;
        while self.keyword() == Some("and") {
            self.ts.next();
            lhs = Matrix::And(Box::new(lhs), Box::new(self.atomf()?));
        }
        Ok(lhs)
    }

    fn atomf(&mut self) -> Result<Matrix, ExprError> {
        if self.keyword() == Some("not") {
            self.ts.next();
            return Ok(Matrix::Not(Box::new(self.atomf()?)));
        }
        if *self.ts.peek() == Tok::LParen {
            // Either a parenthesized matrix or a term that starts with '('.
            let save = self.ts.save();
            self.ts.next();
            if let Ok(m) = self.matrix() {
                if self.ts.eat(&Tok::RParen) && !starts_term_continuation(self.ts.peek()) {
                    return Ok(m);
                }
            }
            self.ts.restore(save);
        }
        let lhs = ExprParser { ts: self.ts }.expr()?;
        let rel = match self.ts.peek() {
            Tok::Lt => Relation::Lt,
            Tok::Le => Relation::Le,
            Tok::Eq => Relation::Eq,
            _ => return Err(self.ts.error("'<', '<=' or '='")),
        };
        self.ts.next();
        let rhs = ExprParser { ts: self.ts }.expr()?;
        Ok(Matrix::Atom(lhs, rel, rhs))
    }
}

fn starts_term_continuation(t: &Tok) -> bool {
    matches!(
        t,
        Tok::Plus | Tok::Minus | Tok::Star | Tok::Slash | Tok::Caret | Tok::Lt | Tok::Le | Tok::Eq
    )
}
