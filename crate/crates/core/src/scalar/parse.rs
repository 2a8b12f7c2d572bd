//! Scalar literal grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! atom   := integer | 'q' | '(' expr ')'
//! exponent := ('-' | '+')? integer | '(' ('-' | '+')? integer ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::RationalFunction;
use crate::error::{Error, Result};

pub fn parse_scalar(src: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty scalar literal".into()));
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in `{s}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        let mag: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        if paren && !self.eat(')') {
            return Err(self.err("expected `)`"));
        }
        Ok(if neg { -mag } else { mag })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(RationalFunction::q_pow(1))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(RationalFunction::from_rational(BigRational::from_integer(n)))
            }
            _ => Err(self.err("expected integer, `q` or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_scalar("q^2 - 1").unwrap().to_string(), "-1 + q^2");
        assert_eq!(parse_scalar("1/(q+1)").unwrap().to_string(), "1/(1 + q)");
        assert_eq!(parse_scalar("-3*q^-1").unwrap().to_string(), "-3*q^-1");
        assert_eq!(parse_scalar("-q^2").unwrap().to_string(), "-q^2");
        assert_eq!(parse_scalar("(q+1)^2").unwrap().to_string(), "1 + 2*q + q^2");
        assert_eq!(parse_scalar("3/2*q").unwrap().to_string(), "3/2*q");
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "q^", "(q", "q+*2", "x", "1/0", "2 q"] {
            assert!(parse_scalar(bad).is_err(), "{bad} should fail");
        }
    }
}
