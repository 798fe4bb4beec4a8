//! Parser for operator expressions over `{p, q}`.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := sign? term (('+'|'-') term)*
//! term   := scalar? ('*'? factor)*        -- at least a scalar or a factor
//! factor := ('p'|'q') ('^' uint)?
//! scalar := Gaussian-rational literal, e.g. 2, -3/4, 1/2 i, 1/4-3/4 i, 2i
//! ```
//!
//! Juxtaposition and `*` both mean concatenation. A term with no factors is
//! a scalar multiple of the empty word. Errors carry the byte offset of the
//! offending character.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{BigRat, GaussRat};

use super::word::{Letter, Word};
use super::{WeylError, WeylExpr};

pub fn parse_expr(text: &str) -> Result<WeylExpr, WeylError> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> WeylError {
        WeylError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<WeylExpr, WeylError> {
        let mut out = WeylExpr::zero();
        let mut sign = match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(_) => 1,
            None => return Err(self.err("empty expression")),
        };
        loop {
            let (word, coeff) = self.term()?;
            out.add_term(
                word,
                coeff.mul_rat(&BigRat::from_integer(BigInt::from(sign))),
            );
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => {
                    return Err(self.err(format!("unexpected character `{}`", c as char)));
                }
            }
        }
    }

    fn term(&mut self) -> Result<(Word, GaussRat), WeylError> {
        let scalar = self.try_scalar()?;
        let mut letters = Vec::new();
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    continue;
                }
                Some(b'p') | Some(b'q') => {
                    let letter = if self.bytes[self.pos] == b'p' {
                        Letter::P
                    } else {
                        Letter::Q
                    };
                    self.pos += 1;
                    let count = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.uint()? as usize
                    } else {
                        1
                    };
                    letters.extend(std::iter::repeat_n(letter, count));
                    saw_factor = true;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    return Err(self.err(format!("unknown symbol `{}`", c as char)));
                }
                _ => break,
            }
        }
        let coeff = match scalar {
            Some(c) => c,
            None if saw_factor => GaussRat::one(),
            None => return Err(self.err("expected a scalar or a letter")),
        };
        Ok((Word::new(letters), coeff))
    }

    /// Maximal-munch Gaussian-rational literal: after a first rational, a
    /// following signed rational is consumed only when it ends in `i`.
    fn try_scalar(&mut self) -> Result<Option<GaussRat>, WeylError> {
        let first = match self.try_signed_rat(false)? {
            Some(v) => v,
            None => return Ok(None),
        };
        if first.1 {
            // pure imaginary literal
            return Ok(Some(GaussRat::new(BigRat::zero(), first.0)));
        }
        let save = self.pos;
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            if let Some((second, true)) = self.try_signed_rat(true)? {
                return Ok(Some(GaussRat::new(first.0, second)));
            }
            self.pos = save;
        }
        Ok(Some(GaussRat::from_rat(first.0)))
    }

    /// A signed rational, optionally tagged imaginary by a trailing `i`.
    /// With `explicit_sign` the leading sign is required; otherwise absence
    /// of digits (and of a bare `i`) yields `None`.
    fn try_signed_rat(&mut self, explicit_sign: bool) -> Result<Option<(BigRat, bool)>, WeylError> {
        let save = self.pos;
        let sign = match self.peek() {
            Some(b'+') if explicit_sign => {
                self.pos += 1;
                1
            }
            Some(b'-') if explicit_sign => {
                self.pos += 1;
                -1
            }
            _ if explicit_sign => return Ok(None),
            _ => 1,
        };
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok(Some((BigRat::from_integer(BigInt::from(sign)), true)));
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos = save;
            return Ok(None);
        }
        let num = self.uint_big()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.uint_big()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let mut r = BigRat::new(num, den);
        if sign < 0 {
            r = -r;
        }
        let imag = if self.peek() == Some(b'i') {
            self.pos += 1;
            true
        } else {
            false
        };
        Ok(Some((r, imag)))
    }

    fn uint_big(&mut self) -> Result<BigInt, WeylError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn uint(&mut self) -> Result<u64, WeylError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an exponent"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| self.err("exponent out of range"))
    }
}
