//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors are byte
//! offsets into the input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::{Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("exponent does not fit in 32 bits")]
    ExponentOverflow,
    #[error("zero denominator")]
    ZeroDenominator,
}

pub(super) fn parse(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(p),
        Some(c) => Err(parser.error(ParseErrorKind::UnexpectedChar(c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c as char)),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let Some(digits) = self.digits() else {
                return Err(self.unexpected());
            };
            let e: u32 = digits.parse().map_err(|_| ParseError {
                position: start,
                kind: ParseErrorKind::ExponentOverflow,
            })?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.unexpected())?;
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(b')') {
                return Err(self.unexpected());
            }
            return Ok(inner);
        }
        if let Some(v) = Var::from_name(c as char) {
            self.pos += 1;
            return Ok(Polynomial::var(v));
        }
        if c.is_ascii_digit() {
            let num: BigInt = self
                .digits()
                .expect("digit present")
                .parse()
                .expect("decimal digits");
            let mut value = BigRational::from_integer(num);
            if self.eat(b'/') {
                self.skip_ws();
                let at = self.pos;
                let Some(den) = self.digits() else {
                    return Err(self.unexpected());
                };
                let den: BigInt = den.parse().expect("decimal digits");
                if den.is_zero() {
                    return Err(ParseError {
                        position: at,
                        kind: ParseErrorKind::ZeroDenominator,
                    });
                }
                value /= BigRational::from_integer(den);
            }
            return Ok(Polynomial::constant(value));
        }
        Err(self.unexpected())
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
        }
    }
}
