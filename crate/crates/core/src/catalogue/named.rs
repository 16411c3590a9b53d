//! Expressions naming complexes, e.g. `-T(2,5) # T(4,5) # -cable(T(2,3),2,5)`.
//!
//! ```text
//! expr   := term ('#' term)*
//! term   := '-' term | atom
//! atom   := 'U' | 'T(' int ',' int ')' | 'cable(' expr ',' int ',' int ')'
//!         | 'thin(' int ',' int ')' | fixture | '(' expr ')'
//! ```

use super::{cable_alexander, fixture, staircase_from_alexander, thin_complex, torus_knot_alexander, LaurentPoly};
use crate::complex::CfkComplex;
use crate::error::CfkError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Unknot,
    Torus(i64, i64),
    Cable(Box<Expr>, i64, i64, usize),
    Thin(i64, i64),
    Fixture(String),
    Mirror(Box<Expr>),
    Sum(Vec<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, CfkError> {
        Err(CfkError::Parse { pos: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CfkError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        rest[..len].to_string()
    }

    fn int(&mut self) -> Result<i64, CfkError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let sign = usize::from(rest.starts_with('-'));
        let digits = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign);
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        let value = text.parse().or_else(|_| self.err("integer out of range"))?;
        self.pos += sign + digits;
        Ok(value)
    }

    fn expr(&mut self) -> Result<Expr, CfkError> {
        let mut terms = vec![self.term()?];
        while self.eat('#') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, CfkError> {
        if self.eat('-') {
            return Ok(Expr::Mirror(Box::new(self.term()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, CfkError> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        self.skip_ws();
        let start = self.pos;
        let name = self.ident();
        match name.as_str() {
            "" => self.err("expected a knot expression"),
            "U" => Ok(Expr::Unknot),
            "T" => {
                let (p, q) = self.pair_args()?;
                Ok(Expr::Torus(p, q))
            }
            "thin" => {
                let (t, b) = self.pair_args()?;
                if b < 0 {
                    return self.err("box count must be non-negative");
                }
                Ok(Expr::Thin(t, b))
            }
            "cable" => {
                self.expect('(')?;
                self.skip_ws();
                let inner_pos = self.pos;
                let inner = self.expr()?;
                self.expect(',')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(')')?;
                Ok(Expr::Cable(Box::new(inner), p, q, inner_pos))
            }
            fixture_name if fixture_name.starts_with("fig") => Ok(Expr::Fixture(fixture_name.to_string())),
            other => {
                self.pos = start;
                self.err(format!("unknown name `{other}`"))
            }
        }
    }

    fn pair_args(&mut self) -> Result<(i64, i64), CfkError> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok((a, b))
    }
}

/// Alexander polynomial of an L-space expression, or `None` when the
/// expression is not built from `U`, `T` and `cable` alone.
fn lspace_polynomial(e: &Expr) -> Result<Option<LaurentPoly>, CfkError> {
    Ok(match e {
        Expr::Unknot => Some(LaurentPoly::one()),
        Expr::Torus(p, q) => Some(torus_knot_alexander(*p, *q)?),
        Expr::Cable(inner, p, q, pos) => {
            let Some(d) = lspace_polynomial(inner)? else {
                return Err(CfkError::Cable(format!("operand at position {pos} is not an L-space knot")));
            };
            let genus = d.max_degree().unwrap_or(0);
            Some(cable_alexander(&d, *p, *q, genus)?)
        }
        _ => None,
    })
}

fn build(e: &Expr) -> Result<CfkComplex, CfkError> {
    match e {
        Expr::Thin(t, b) => Ok(thin_complex(*t, *b as usize)),
        Expr::Fixture(name) => fixture(name),
        Expr::Mirror(inner) => Ok(build(inner)?.dual()),
        Expr::Sum(terms) => {
            let mut it = terms.iter();
            let mut acc = build(it.next().expect("nonempty sum"))?;
            for t in it {
                acc = acc.tensor(&build(t)?);
            }
            Ok(acc)
        }
        Expr::Unknot | Expr::Torus(..) | Expr::Cable(..) => {
            let d = lspace_polynomial(e)?.expect("L-space expression");
            staircase_from_alexander(&d)
        }
    }
}

/// Parses and builds the complex named by `expr`.
pub fn named(expr: &str) -> Result<CfkComplex, CfkError> {
    let mut p = Parser { src: expr, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(build(&e)?.with_name(expr.trim()))
}
