//! Text syntax for polynomials.
//!
//! Terms are joined by `+`/`-`. A term is an optional coefficient (an integer
//! or `a/b`), an optional `*`, and a product of `name` or `name^e` factors
//! joined by `*`. Whitespace is ignored: `-1/2*x^2*y + y^3`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Monomial, PolyRing, Polynomial, Scalar};

pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(err(text, "empty polynomial"));
    }
    let mut p = Parser {
        src: text,
        chars,
        pos: 0,
        ring,
    };
    let mut terms = Vec::new();
    let mut first = true;
    while p.pos < p.chars.len() {
        let negative = match p.peek() {
            Some('+') => {
                p.pos += 1;
                false
            }
            Some('-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            Some(c) => return Err(p.fail(&format!("expected '+' or '-', found {c:?}"))),
            None => unreachable!(),
        };
        first = false;
        let (m, mut c) = p.term()?;
        if negative {
            c = -&c;
        }
        terms.push((m, c));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomial_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_polynomial(s, ring))
        .collect()
}

fn err(src: &str, msg: &str) -> Error {
    Error::Parse(format!("{msg} in {src:?}"))
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail(&self, msg: &str) -> Error {
        err(self.src, &format!("{msg} at offset {}", self.pos))
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut saw_factor = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.integer()?
            } else {
                BigInt::from(1)
            };
            coeff = field.from_ratio(&num, &den)?;
            saw_factor = true;
            if self.peek() == Some('*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
                    return Err(self.fail("expected a variable after '*'"));
                }
            }
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            let (var, e) = self.factor()?;
            exps[var] += e;
            saw_factor = true;
            if self.peek() == Some('*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
                    return Err(self.fail("expected a variable after '*'"));
                }
            }
        }
        if !saw_factor {
            return Err(self.fail("expected a term"));
        }
        Ok((Monomial::new(&exps, self.ring.weights()), coeff))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let var = self
            .ring
            .var_index(&name)
            .ok_or_else(|| self.fail(&format!("unknown variable {name:?}")))?;
        let e = if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            u32::try_from(e).map_err(|_| self.fail("exponent out of range"))?
        } else {
            1
        };
        Ok((var, e))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse as integer"))
    }
}
