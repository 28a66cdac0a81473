//! Text syntax for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | name | '(' expr ')' | '-' factor
//! ```
//!
//! Multiplication must be written out; `2x` and `x y` are rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::{Coeff, Polynomial};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(Error::Syntax {
                        pos: i,
                        msg: "implicit multiplication is not allowed; write `*`".into(),
                    });
                }
                out.push((start, Tok::Int(text[start..i].parse().unwrap())));
                continue;
            }
            _ if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Name(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{c}`") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(Tok::Name(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                self.err("implicit multiplication is not allowed; write `*`")
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    let k: u32 = match u32::try_from(&k) {
                        Ok(k) => k,
                        Err(_) => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    Ok(base.pow(k))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Coeff::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Coeff::from_integer(d);
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(Tok::Name(name)) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var_index(self.ring, i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Syntax { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { ring, toks, pos: 0, end: text.len() };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses a rational literal such as `-3` or `5/2`.
pub fn parse_rational(text: &str) -> Option<Coeff> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Coeff::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::polynomial::rational;

    fn zring() -> Ring {
        Ring::grevlex(&["z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"]).unwrap()
    }

    #[test]
    fn zero_literal() {
        let r = zring();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
    }

    #[test]
    fn binomial_identity_vanishes() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        assert!(parse_polynomial("(x+y)^2 - x^2 - 2*x*y - y^2", &r).unwrap().is_zero());
    }

    #[test]
    fn syzygy_entry_round_trip() {
        let r = zring();
        let f = parse_polynomial("z1*z4 + z3*z8 - z2*z3 - z4*z7", &r).unwrap();
        assert_eq!(f.len(), 4);
        let printed = f.to_string();
        assert_eq!(printed, "-z2*z3 + z1*z4 - z4*z7 + z3*z8");
        assert_eq!(parse_polynomial(&printed, &r).unwrap(), f);
        assert_eq!(parse_polynomial(&printed, &r).unwrap().to_string(), printed);
    }

    #[test]
    fn rational_literals() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let f = parse_polynomial("5/2*x - -3", &r).unwrap();
        assert_eq!(f.to_string(), "5/2*x + 3");
        assert_eq!(parse_rational("-6/4"), Some(rational(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        match parse_polynomial("x + * y", &r) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("x + w", &r), Err(Error::UnknownVariable(v)) if v == "w"));
        assert!(matches!(parse_polynomial("2x", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("(x + y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x^y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("1/0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x $ y", &r), Err(Error::Syntax { pos: 2, .. })));
    }
}
