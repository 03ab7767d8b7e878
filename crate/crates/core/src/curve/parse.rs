//! Polynomial expressions in `X, Y, Z` with rational constants and named
//! parameters, e.g. `-(t1 + t2 - 1)*X^2*Z + 23/27*Y^3`.
//!
//! Products may be written with `*` or by juxtaposition (`2 X^2 Y`).
//! Division is allowed only by nonzero constants.

use std::collections::BTreeMap;

use num_traits::One;

use super::poly::{HomPoly, Poly3};
use super::{CurveError, Result};
use crate::arith::Rat;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

struct Lexed {
    tok: Tok,
    offset: usize,
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn error(src: &str, offset: usize, message: impl Into<String>) -> CurveError {
    let (line, column) = position(src, offset);
    CurveError::Parse { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Lexed>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse().expect("digits");
            out.push(Lexed { tok: Tok::Num(n), offset: start });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Lexed { tok: Tok::Ident(src[start..i].to_string()), offset: start });
        } else if "+-*/^()".contains(c) {
            out.push(Lexed { tok: Tok::Op(c), offset: i });
            i += 1;
        } else {
            let ch = src[i..].chars().next().expect("char");
            return Err(error(src, i, format!("unexpected character '{ch}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Lexed>,
    pos: usize,
    params: &'a BTreeMap<String, Rat>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |l| l.offset)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly3> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Poly3> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let d = self.unary()?;
                let c = match d.total_degree() {
                    Some(0) => d.coeff(&[0, 0, 0]),
                    None => return Err(error(self.src, at, "division by zero")),
                    Some(_) => return Err(error(self.src, at, "division by a non-constant")),
                };
                acc = acc.scale(&(Rat::one() / c));
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly3> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly3> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k = u32::try_from(&n)
                        .ok()
                        .filter(|k| *k <= 64)
                        .ok_or_else(|| error(self.src, at, "exponent too large"))?;
                    Ok(base.pow(k))
                }
                _ => Err(error(self.src, at, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly3> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly3::constant(Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "X" => Ok(Poly3::var(0)),
                    "Y" => Ok(Poly3::var(1)),
                    "Z" => Ok(Poly3::var(2)),
                    _ => self
                        .params
                        .get(&name)
                        .map(|v| Poly3::constant(v.clone()))
                        .ok_or_else(|| error(self.src, at, format!("unknown parameter '{name}'"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(error(self.src, self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(error(self.src, at, format!("unexpected '{c}'"))),
            None => Err(error(self.src, at, "unexpected end of input")),
        }
    }
}

/// Parse with parameter values substituted.
pub fn parse_poly(src: &str, params: &BTreeMap<String, Rat>) -> Result<Poly3> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(error(src, 0, "empty polynomial"));
    }
    let mut p = Parser { src, toks, pos: 0, params };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(error(src, p.offset(), "unexpected trailing input"));
    }
    Ok(out)
}

/// Parse and check homogeneity of the given degree.
pub fn parse_hom(src: &str, params: &BTreeMap<String, Rat>, degree: u32) -> Result<HomPoly> {
    let p = parse_poly(src, params)?;
    if p.is_zero() {
        return Ok(HomPoly::zero(degree));
    }
    HomPoly::new(p, degree)
}

/// Parameter names referenced by `src` (identifiers other than `X, Y, Z`).
pub fn parameter_names(src: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = lex(src)?
        .into_iter()
        .filter_map(|l| match l.tok {
            Tok::Ident(s) if !matches!(s.as_str(), "X" | "Y" | "Z") => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    Ok(names)
}

/// Parameters as a sorted map from string values such as `"-23/27"`.
pub fn params_from_strs<'a, I>(pairs: I) -> Option<BTreeMap<String, Rat>>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    pairs.into_iter().map(|(k, v)| crate::arith::parse_rat(v).map(|r| (k.to_string(), r))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn no_params() -> BTreeMap<String, Rat> {
        BTreeMap::new()
    }

    #[test]
    fn rationals_and_powers() {
        let p = parse_poly("-23/27*X^3 + (Y - Z)^2", &no_params()).unwrap();
        assert_eq!(p.coeff(&[3, 0, 0]), rat(-23, 27));
        assert_eq!(p.coeff(&[0, 1, 1]), rat(-2, 1));
        assert_eq!(p.coeff(&[0, 0, 2]), rat(1, 1));
    }

    #[test]
    fn parameters_substituted() {
        let params = params_from_strs([("t1", "1"), ("t2", "1/2")]).unwrap();
        let p = parse_poly("-(t1 + t2/2 - 1) X^2 Z + t1*Y*Z^2", &params).unwrap();
        assert_eq!(p.coeff(&[2, 0, 1]), rat(-1, 4));
        assert_eq!(p.coeff(&[0, 1, 2]), rat(1, 1));
        assert_eq!(parameter_names("t2*X + s*Y - Z").unwrap(), ["s", "t2"]);
    }

    #[test]
    fn positions_reported() {
        let e = parse_poly("X^2 +\n  Y $ Z", &no_params()).unwrap_err();
        assert_eq!(e, CurveError::Parse { line: 2, column: 5, message: "unexpected character '$'".into() });
        let e = parse_poly("X + q", &no_params()).unwrap_err();
        assert!(matches!(e, CurveError::Parse { line: 1, column: 5, .. }));
        assert!(parse_poly("X / Y", &no_params()).is_err());
        assert!(parse_poly("(X + Y", &no_params()).is_err());
    }

    #[test]
    fn homogeneity_enforced() {
        assert!(parse_hom("Y*Z - X^2", &no_params(), 2).is_ok());
        assert!(matches!(parse_hom("Y*Z - X", &no_params(), 2), Err(CurveError::DegreeMismatch { .. })));
    }
}
