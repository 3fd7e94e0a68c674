//! Text grammar for polynomials.
//!
//! ```text
//! expr    := ('+' | '-')? term (('+' | '-') term)*
//! term    := factor (('*' | '/')? factor)*      juxtaposition multiplies
//! factor  := '-' factor | primary ('^' integer)?
//! primary := integer | variable | generator | '(' expr ')'
//! ```
//!
//! Variables are `x, y` (affine) or `X, Y, Z` (homogeneous), never both.
//! Generators `z1, z2, …` name the tower levels of the target field. The
//! right operand of `/` must be a nonzero constant.

use num_bigint::BigInt;

use super::{MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Gen(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

type Tokens = (Vec<(usize, Tok)>, Option<Vars>);

fn tokenize(s: &str) -> Result<Tokens> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut affine = false;
    let mut projective = false;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Num(s[start..i].parse().expect("digits"))));
                continue;
            }
            'z' => {
                i += 1;
                let d0 = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if d0 == i {
                    return Err(err(start, "generator names are z1, z2, ..."));
                }
                toks.push((start, Tok::Gen(s[d0..i].parse().map_err(|_| err(d0, "bad index"))?)));
                continue;
            }
            'x' | 'y' => {
                affine = true;
                Tok::Var(if c == 'x' { 0 } else { 1 })
            }
            'X' | 'Y' | 'Z' => {
                projective = true;
                Tok::Var(match c {
                    'X' => 0,
                    'Y' => 1,
                    _ => 2,
                })
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(start, format!("unexpected character '{other}'"))),
        };
        toks.push((start, tok));
        i += 1;
    }
    if affine && projective {
        return Err(Error::VariableMismatch(
            "mixes affine x,y with homogeneous X,Y,Z".into(),
        ));
    }
    let vars = if affine {
        Some(Vars::Affine)
    } else if projective {
        Some(Vars::Projective)
    } else {
        None
    };
    Ok((toks, vars))
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: Vars,
    field: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.here();
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(err(at, "divisor must be a nonzero constant"));
                    }
                    let inv = d.constant_term().inv().map_err(|_| err(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Gen(_) | Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| err(at, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(MultiPoly::constant(self.vars, Scalar::from_bigint(self.field, &n))),
            Some(Tok::Var(i)) => Ok(MultiPoly::var(self.vars, self.field, i)),
            Some(Tok::Gen(level)) => {
                let g = self
                    .field
                    .generator_at_level(level)
                    .ok_or_else(|| err(at, format!("field {} has no generator z{level}", self.field)))?;
                Ok(MultiPoly::constant(self.vars, g))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(err(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(at, format!("unexpected token {t:?}"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

/// Parses a polynomial over `field`, inferring the coordinate system from
/// the variables used (affine when no variable appears).
pub fn parse_poly(text: &str, field: &Field) -> Result<MultiPoly> {
    let (toks, vars) = tokenize(text)?;
    parse_tokens(toks, vars.unwrap_or(Vars::Affine), text.len(), field)
}

/// Parses and requires the given coordinate system.
pub fn parse_in(text: &str, field: &Field, want: Vars) -> Result<MultiPoly> {
    let (toks, vars) = tokenize(text)?;
    if let Some(v) = vars {
        if v != want {
            return Err(Error::VariableMismatch(format!("expected {want:?} variables in '{text}'")));
        }
    }
    parse_tokens(toks, want, text.len(), field)
}

fn parse_tokens(toks: Vec<(usize, Tok)>, vars: Vars, end: usize, field: &Field) -> Result<MultiPoly> {
    if toks.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0, end, vars, field };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.here(), "trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn juxtaposition_and_powers() {
        let a = parse_poly("2x^2y", &q()).unwrap();
        let b = parse_poly("2*x^2*y", &q()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2*x^2*y");
    }

    #[test]
    fn rational_coefficients_and_signs() {
        let a = parse_poly("-x^2 + 1/2y - (x - y)", &q()).unwrap();
        assert_eq!(a.to_string(), "3/2*y - x - x^2");
    }

    #[test]
    fn tilted_a6_curve_prints_in_local_order() {
        let f = parse_poly("Y^2 + 2*X^2*Y + X^4 + X^7", &q()).unwrap();
        assert_eq!(f.vars(), Vars::Projective);
        assert_eq!(f.to_string(), "Y^2 + 2*X^2*Y + X^4 + X^7");
    }

    #[test]
    fn mixed_variables_rejected() {
        assert!(matches!(parse_poly("x + Y", &q()), Err(Error::VariableMismatch(_))));
        assert!(matches!(parse_in("x + y", &q(), Vars::Projective), Err(Error::VariableMismatch(_))));
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_poly("x^", &q()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/y", &q()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x+1", &q()), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x $ y", &q()), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("z1*x", &q()), Err(Error::Parse { .. })));
    }

    #[test]
    fn generators_parse_in_extensions() {
        let f3 = Field::prime(3).unwrap();
        let f9 = f3.with_degree(2).unwrap();
        let p = parse_poly("(2*z1+1)*x^2 + z1*y", &f9).unwrap();
        let back = parse_poly(&p.to_string(), &f9).unwrap();
        assert_eq!(p, back);
    }
}
