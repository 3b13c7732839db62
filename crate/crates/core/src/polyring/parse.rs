//! Text format for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := integer ['/' integer]
//! factor := var ['^' posint]
//! var    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace between tokens is ignored. Multiplication must be written
//! explicitly.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::Rational;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b) if b.is_ascii_alphabetic() => self.pos += 1,
            _ => return self.err("expected variable name"),
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier"))
    }
}

struct VarTable {
    names: Vec<String>,
    fixed: bool,
}

impl VarTable {
    fn index(&mut self, name: &str) -> Result<usize> {
        if let Some(i) = self.names.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        self.names.push(name.to_string());
        Ok(self.names.len() - 1)
    }
}

/// Parses a polynomial. With `variables = None` the variable order is the
/// order of first appearance in `text`.
pub fn parse_polynomial(text: &str, variables: Option<&[String]>) -> Result<Polynomial<Rational>> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut table = VarTable {
        names: variables.map(|v| v.to_vec()).unwrap_or_default(),
        fixed: variables.is_some(),
    };
    if let Some(vs) = variables {
        for (i, v) in vs.iter().enumerate() {
            if vs[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
        }
    }
    // Terms carry sparse (var, exp) lists until the variable set is known.
    let mut raw: Vec<(Vec<(usize, u32)>, Rational)> = Vec::new();

    let mut negative = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        let (factors, mut coeff) = parse_term(&mut cur, &mut table)?;
        if negative {
            coeff = -coeff;
        }
        raw.push((factors, coeff));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(_) => return cur.err("expected '+', '-' or end of input"),
        }
    }

    let n = table.names.len();
    let vars: Arc<[String]> = table.names.into();
    let terms = raw.into_iter().map(|(factors, c)| {
        let mut m = Monomial::one(n);
        for (i, e) in factors {
            m.exponents_mut()[i] += e;
        }
        (m, c)
    });
    Ok(Polynomial::from_terms(
        vars,
        MonomialOrder::default(),
        terms,
    ))
}

fn parse_term(cur: &mut Cursor<'_>, table: &mut VarTable) -> Result<(Vec<(usize, u32)>, Rational)> {
    let mut coeff = Rational::one();
    let mut factors = Vec::new();
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let num: BigInt = cur.digits()?.parse().expect("digits parse");
            let mut value = Rational::from_integer(num);
            if cur.eat(b'/') {
                let at = cur.pos;
                let den: BigInt = cur.digits()?.parse().expect("digits parse");
                if den.is_zero() {
                    return Err(Error::Syntax {
                        offset: at,
                        message: "zero denominator".into(),
                    });
                }
                value /= Rational::from_integer(den);
            }
            coeff = value;
        }
        Some(b) if b.is_ascii_alphabetic() => factors.push(parse_factor(cur, table)?),
        None => return cur.err("unexpected end of input"),
        Some(_) => return cur.err("expected coefficient or variable"),
    }
    while cur.eat(b'*') {
        factors.push(parse_factor(cur, table)?);
    }
    Ok((factors, coeff))
}

fn parse_factor(cur: &mut Cursor<'_>, table: &mut VarTable) -> Result<(usize, u32)> {
    let name = cur.ident()?;
    let idx = table.index(name)?;
    let mut exp = 1u32;
    if cur.eat(b'^') {
        let at = cur.pos;
        let digits = cur.digits()?;
        exp = match digits.parse::<u32>() {
            Ok(e) if e > 0 => e,
            Ok(_) => {
                return Err(Error::Syntax {
                    offset: at,
                    message: "exponent must be positive".into(),
                })
            }
            Err(_) => {
                return Err(Error::Syntax {
                    offset: at,
                    message: "exponent too large".into(),
                })
            }
        };
    }
    Ok((idx, exp))
}
