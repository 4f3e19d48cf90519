//! Text syntax for polynomials: `3/2*x1^2*x2 - x3 + 5`.
//!
//! Terms are joined by `+`/`-`; a term is a `*`-separated product of
//! rational coefficients (`a` or `a/b`) and powers `var` / `var^e`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarContext};
use crate::scalar::Scalar;

/// Parses `text` over `ctx`. Error columns are 1-based character positions.
pub fn parse_polynomial(ctx: &Arc<VarContext>, text: &str) -> Result<Polynomial> {
    Parser {
        ctx,
        chars: text.chars().collect(),
        pos: 0,
    }
    .polynomial()
}

struct Parser<'a> {
    ctx: &'a Arc<VarContext>,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -Scalar::one()
            }
            Some('+') => {
                self.pos += 1;
                Scalar::one()
            }
            Some(_) => Scalar::one(),
            None => return self.error("empty polynomial"),
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                None => break,
                Some('+') => sign = Scalar::one(),
                Some('-') => sign = -Scalar::one(),
                Some(c) => return self.error(format!("unexpected `{c}`")),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ctx, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut exps = vec![0u32; self.ctx.n()];
        let mut coeff = Scalar::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.rational()?,
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let (idx, e) = self.power()?;
                    exps[idx] += e;
                }
                Some(c) => return self.error(format!("expected a coefficient or variable, found `{c}`")),
                None => return self.error("expected a coefficient or variable"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digit run"))
    }

    fn rational(&mut self) -> Result<Scalar> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                self.pos = at;
                return self.error("zero denominator");
            }
            return Ok(Scalar::new(num, den));
        }
        Ok(Scalar::from_integer(num))
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let Some(idx) = self.ctx.index_of(&name) else {
            self.pos = start;
            return self.error(format!("unknown variable `{name}`"));
        };
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.pos;
            let value = self.digits()?;
            e = match u32::try_from(value) {
                Ok(v) => v,
                Err(_) => {
                    self.pos = at;
                    return self.error("exponent too large");
                }
            };
        }
        Ok((idx, e))
    }
}
