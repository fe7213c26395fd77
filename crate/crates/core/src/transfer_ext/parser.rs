//! Recursive-descent parser for expressions.
//!
//! ```text
//! expr  := term (("+"|"-") term)*
//! term  := unary (("*"|"/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" integer)?
//! atom  := number | ident | ident "(" expr ")" | "(" expr ")"
//! ```

use alloc::boxed::Box;
use alloc::string::ToString;

use super::lexer::{Tok, TokenStream};
use super::{Expr, ExprError, Func};

/// Parses a complete expression.
pub fn parse_expr(src: &str) -> Result<Expr, ExprError> {
    let mut ts = TokenStream::new(src)?;
    let e = ExprParser { ts: &mut ts }.expr()?;
    if *ts.peek() != Tok::Eof {
        return Err(ts.error("end of input"));
    }
    Ok(e)
}

pub(crate) struct ExprParser<'a> {
    pub ts: &'a mut TokenStream,
}

impl ExprParser<'_> {
    pub fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.ts.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.ts.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.ts.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.ts.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.ts.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if !self.ts.eat(&Tok::Caret) {
            return Ok(base);
        }
        let n = self.integer_exponent()?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    /// `2`, `-2` or `(-2)`.
    fn integer_exponent(&mut self) -> Result<i64, ExprError> {
        let paren = self.ts.eat(&Tok::LParen);
        let neg = self.ts.eat(&Tok::Minus);
        let n = match self.ts.peek() {
            Tok::Number(v) if libm::trunc(*v) == *v && *v <= i32::MAX as f64 => *v as i64,
            _ => return Err(self.ts.error("an integer exponent")),
        };
        self.ts.next();
        if paren {
            self.ts.expect(&Tok::RParen)?;
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.ts.peek().clone() {
            Tok::Number(v) => {
                self.ts.next();
                Ok(Expr::Const(v))
            }
            Tok::Ident(name) => {
                if *self.ts.peek_at(1) == Tok::LParen {
                    let Some(func) = Func::from_name(&name) else {
                        return Err(ExprError::Parse {
                            line: self.ts.current().line,
                            column: self.ts.current().column,
                            token: name,
                            message: "unknown function".to_string(),
                        });
                    };
                    self.ts.next();
                    self.ts.next();
                    let arg = self.expr()?;
                    self.ts.expect(&Tok::RParen)?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                if Func::from_name(&name).is_some() {
                    self.ts.next();
                    return Err(self.ts.error("'(' after function name"));
                }
                self.ts.next();
                Ok(Expr::Var(name))
            }
            Tok::LParen => {
                self.ts.next();
                let e = self.expr()?;
                self.ts.expect(&Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.ts.error("a number, identifier or '('")),
        }
    }
}
