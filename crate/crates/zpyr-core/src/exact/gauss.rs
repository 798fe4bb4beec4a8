//! Gaussian rationals: elements of Q(i) with exact component arithmetic.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{BigRat, ExactError};

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn big_rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text for a rational: `num/den`, with `/den` omitted when the
/// denominator is one.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a` or `a/b` with an optional leading sign.
pub fn rat_from_str(s: &str) -> Result<BigRat, ExactError> {
    let bad = || ExactError::BadLiteral(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRat::new(num, den))
}

/// A Gaussian rational `re + im*i`, the scalar field for every coefficient
/// in the crate. Both parts are kept in lowest terms, so equality is
/// componentwise structural equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    re: BigRat,
    im: BigRat,
}

impl GaussRat {
    pub fn new(re: BigRat, im: BigRat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRat::zero(), BigRat::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(BigRat::zero(), BigRat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::from_rat(big_rat(n, 1))
    }

    pub fn from_rat(re: BigRat) -> Self {
        GaussRat::new(re, BigRat::zero())
    }

    /// Real rational `num/den`.
    pub fn frac(num: i64, den: i64) -> Self {
        GaussRat::from_rat(big_rat(num, den))
    }

    /// Pure imaginary `num/den * i`.
    pub fn frac_i(num: i64, den: i64) -> Self {
        GaussRat::new(BigRat::zero(), big_rat(num, den))
    }

    /// `i^k` for any integer `k` (period four).
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::one(),
            1 => GaussRat::i(),
            2 => -GaussRat::one(),
            _ => -GaussRat::i(),
        }
    }

    pub fn re(&self) -> &BigRat {
        &self.re
    }

    pub fn im(&self) -> &BigRat {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the value is an integer `<= 0` (used for hypergeometric
    /// termination analysis).
    pub fn is_nonpositive_int(&self) -> bool {
        self.im.is_zero() && self.re.denom().is_one() && !self.re.numer().is_positive()
    }

    /// For a nonpositive integer, its absolute value as `usize`.
    pub fn nonpositive_int_magnitude(&self) -> Option<usize> {
        if self.is_nonpositive_int() {
            usize::try_from(self.re.numer().magnitude().clone()).ok()
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    /// `self^exp` for any integer exponent; negative exponents require a
    /// nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self, ExactError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = GaussRat::one();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact division by a plain rational scalar (nonzero).
    pub fn div_rat(&self, r: &BigRat) -> Self {
        GaussRat::new(&self.re / r, &self.im / r)
    }

    pub fn mul_rat(&self, r: &BigRat) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panicking division, for sites where the divisor is known nonzero.
impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self.checked_div(rhs).expect("division by zero GaussRat")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: &GaussRat) -> GaussRat {
                (&self).$method(rhs)
            }
        }
        impl $imp<GaussRat> for &GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for GaussRat {
    /// Canonical textual form: `a/b`, `c/d i` or `a/b+c/d i`, integer parts
    /// printed without `/1`. Round-trips through [`GaussRat::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", rat_to_string(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{} i", rat_to_string(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{} i",
            rat_to_string(&self.re),
            sign,
            rat_to_string(&self.im.abs())
        )
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Scanner for the textual form. Accepts optional whitespace between
/// tokens, so `1/4-3/4 i`, `2i` and `1/2 i` all parse.
struct Scan<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scan<'a> {
    fn new(s: &'a str) -> Self {
        Scan {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn eat_sign(&mut self) -> i32 {
        match self.peek() {
            Some(b'+') => {
                self.bump();
                1
            }
            Some(b'-') => {
                self.bump();
                -1
            }
            _ => 1,
        }
    }

    fn eat_uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }

    /// Signed rational with optional `/den`. Consumes a directly following
    /// `i` and reports it in the flag; `i` alone means coefficient one.
    fn eat_signed_rat(&mut self) -> Option<(BigRat, bool)> {
        let sign = self.eat_sign();
        if self.peek() == Some(b'i') {
            self.bump();
            return Some((BigRat::from_integer(BigInt::from(sign)), true));
        }
        let num = self.eat_uint()?;
        let den = if self.peek() == Some(b'/') {
            self.bump();
            let d = self.eat_uint()?;
            if d.is_zero() {
                return None;
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
            self.bump();
            true
        } else {
            false
        };
        Some((r, imag))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

impl FromStr for GaussRat {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::BadLiteral(s.to_string());
        let mut scan = Scan::new(s);
        let (first, first_imag) = scan.eat_signed_rat().ok_or_else(bad)?;
        if first_imag {
            if !scan.at_end() {
                return Err(bad());
            }
            return Ok(GaussRat::new(BigRat::zero(), first));
        }
        match scan.peek() {
            None => Ok(GaussRat::from_rat(first)),
            Some(b'+') | Some(b'-') => {
                let (second, imag) = scan.eat_signed_rat().ok_or_else(bad)?;
                if !imag || !scan.at_end() {
                    return Err(bad());
                }
                Ok(GaussRat::new(first, second))
            }
            _ => Err(bad()),
        }
    }
}
