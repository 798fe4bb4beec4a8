//! Dense polynomials over the Gaussian rationals.
//!
//! The indeterminate is written `z` throughout (the crate also reuses the
//! type for polynomials in other formal variables, e.g. the `x` of Eulerian
//! polynomials); coefficients are stored in ascending degree with the last
//! stored coefficient nonzero, so the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{BigRat, GaussRat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<GaussRat>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(GaussRat::one())
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        ZPoly::monomial(1, GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        ZPoly::from_coeffs(vec![c])
    }

    pub fn monomial(degree: usize, c: GaussRat) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![GaussRat::zero(); degree + 1];
        coeffs[degree] = c;
        ZPoly { coeffs }
    }

    /// Ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> GaussRat {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    /// True when the polynomial has degree exactly `n` and leading
    /// coefficient one.
    pub fn is_monic_of_degree(&self, n: usize) -> bool {
        self.degree() == Some(n) && self.leading().is_some_and(GaussRat::is_one)
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_real)
    }

    /// True when only powers congruent to `n` mod 2 carry nonzero
    /// coefficients.
    pub fn has_parity_of(&self, n: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k % 2 == n % 2)
    }

    pub fn scale(&self, s: &GaussRat) -> Self {
        if s.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn div_rat(&self, r: &BigRat) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c.div_rat(r)).collect(),
        }
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, w: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * w + c;
        }
        acc
    }

    /// Substitutes `z -> a*z + b`.
    pub fn compose_linear(&self, a: &GaussRat, b: &GaussRat) -> Self {
        let inner = ZPoly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = ZPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &ZPoly::constant(c.clone());
        }
        acc
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Self {
        self.compose_linear(&-GaussRat::one(), &GaussRat::zero())
    }

    /// Conjugates every coefficient.
    pub fn conj_coeffs(&self) -> Self {
        ZPoly {
            coeffs: self.coeffs.iter().map(GaussRat::conj).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = ZPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients in canonical textual form, ascending degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Inverse of [`ZPoly::coeff_strings`].
    pub fn from_coeff_strings(strings: &[String]) -> Result<Self, super::ExactError> {
        let coeffs = strings
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<GaussRat>, _>>()?;
        Ok(ZPoly::from_coeffs(coeffs))
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        ZPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        ZPoly::from_coeffs(coeffs)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                coeffs[a + b] = &coeffs[a + b] + &(ca * cb);
            }
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

macro_rules! forward_poly_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $method(self, rhs: ZPoly) -> ZPoly {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $method(self, rhs: &ZPoly) -> ZPoly {
                (&self).$method(rhs)
            }
        }
        impl $imp<ZPoly> for &ZPoly {
            type Output = ZPoly;
            fn $method(self, rhs: ZPoly) -> ZPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl fmt::Display for ZPoly {
    /// Human-readable form, descending powers: `z^2 + 1/4`, `z^3 - 5/4 z`,
    /// `(1/4-3/4 i) z`. Complex coefficients with two parts are
    /// parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{Signed, Zero};
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            // Split a leading sign off real or pure-imaginary coefficients.
            let (neg, body) = if c.im().is_zero() {
                (c.re().is_negative(), GaussRat::from_rat(c.re().abs()))
            } else if c.re().is_zero() {
                (
                    c.im().is_negative(),
                    GaussRat::new(BigRat::from_integer(0.into()), c.im().abs()),
                )
            } else {
                (false, c.clone())
            };
            let composite = !body.re().is_zero() && !body.im().is_zero();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = if composite {
                format!("({body})")
            } else {
                body.to_string()
            };
            match k {
                0 => write!(f, "{coeff_str}")?,
                _ => {
                    if body.is_one() && !composite {
                        // coefficient 1 is omitted before a power of z
                    } else {
                        write!(f, "{coeff_str} ")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
