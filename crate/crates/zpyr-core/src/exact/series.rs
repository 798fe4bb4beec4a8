//! Truncated formal power series with exact coefficients.
//!
//! A series carries a fixed truncation order `N` and stores coefficients
//! `0..=N`; every operation truncates back to `N` and mixing different
//! orders is an error. Coefficients may be rationals, Gaussian rationals or
//! polynomials (for bivariate generating functions).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BigRat, ExactError, GaussRat, ZPoly};

/// Coefficient ring for [`TruncSeries`]: exact ring operations plus exact
/// division by nonzero integers (enough for `exp` and binomial series).
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_rat(&self, r: &BigRat) -> Self;
}

impl SeriesCoeff for BigRat {
    fn zero() -> Self {
        <BigRat as Zero>::zero()
    }
    fn one() -> Self {
        <BigRat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn mul_rat(&self, r: &BigRat) -> Self {
        self * r
    }
}

impl SeriesCoeff for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_rat(&self, r: &BigRat) -> Self {
        GaussRat::mul_rat(self, r)
    }
}

impl SeriesCoeff for ZPoly {
    fn zero() -> Self {
        ZPoly::zero()
    }
    fn one() -> Self {
        ZPoly::one()
    }
    fn is_zero(&self) -> bool {
        ZPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_rat(&self, r: &BigRat) -> Self {
        self.scale(&GaussRat::from_rat(r.clone()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries<T> {
    order: usize,
    coeffs: Vec<T>, // length order + 1
}

impl<T: SeriesCoeff> TruncSeries<T> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(T::one(), order)
    }

    /// The series `t` (the formal variable itself).
    pub fn variable(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = T::one();
        }
        s
    }

    /// Builds a series from coefficients `0..=order`; shorter input is
    /// zero-padded, longer input is truncated.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, T::zero());
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), ExactError> {
        if self.order != other.order {
            return Err(ExactError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_order(other)?;
        let mut coeffs = vec![T::zero(); self.order + 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().take(self.order + 1 - a).enumerate() {
                if cb.is_zero() {
                    continue;
                }
                coeffs[a + b] = coeffs[a + b].add(&ca.mul(cb));
            }
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &BigRat) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul_rat(r)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(T::neg).collect(),
        }
    }

    /// `exp` of a series with zero constant term: `sum u^k / k!`.
    pub fn exp(&self) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_zero() {
            return Err(ExactError::NonzeroConstantTerm);
        }
        let mut acc = TruncSeries::one(self.order);
        let mut term = TruncSeries::one(self.order);
        let mut kfact = BigInt::one();
        for k in 1..=self.order {
            term = term.mul(self)?;
            kfact *= k;
            acc = acc.add(&term.scale_rat(&BigRat::new(BigInt::one(), kfact.clone())))?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series with constant term one.
    pub fn reciprocal(&self) -> Result<Self, ExactError> {
        if self.coeffs[0] != T::one() {
            return Err(ExactError::ConstantTermNotOne);
        }
        let mut inv = vec![T::zero(); self.order + 1];
        inv[0] = T::one();
        for n in 1..=self.order {
            let mut acc = T::zero();
            for j in 1..=n {
                acc = acc.add(&self.coeffs[j].mul(&inv[n - j]));
            }
            inv[n] = acc.neg();
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: inv,
        })
    }

    /// Substitutes `inner` (zero constant term) into `self` by Horner's
    /// scheme.
    pub fn compose(&self, inner: &Self) -> Result<Self, ExactError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(ExactError::NonzeroConstantTerm);
        }
        let mut acc = TruncSeries::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc = acc.add(&TruncSeries::constant(c.clone(), self.order))?;
        }
        Ok(acc)
    }

    /// `(self)^(-1/2)` for a series with constant term one, through the
    /// binomial series composed with `self - 1`.
    pub fn sqrt_reciprocal(&self) -> Result<Self, ExactError> {
        if self.coeffs[0] != T::one() {
            return Err(ExactError::ConstantTermNotOne);
        }
        // binomial coefficients C(-1/2, k) = (-1)^k C(2k, k) / 4^k
        let mut outer = TruncSeries::zero(self.order);
        let mut c = BigRat::from_integer(BigInt::one());
        for k in 0..=self.order {
            outer.coeffs[k] = T::one().mul_rat(&c);
            // C(-1/2, k+1) = C(-1/2, k) * (-1/2 - k) / (k + 1)
            c *= BigRat::new(-BigInt::from(2 * k as i64 + 1), BigInt::from(2 * (k + 1)));
        }
        let shifted = self.sub(&TruncSeries::one(self.order))?;
        outer.compose(&shifted)
    }
}

impl TruncSeries<BigRat> {
    /// `arctan t` truncated: `t - t^3/3 + t^5/5 - ...`.
    pub fn arctan(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        for k in (1..=order).step_by(2) {
            let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
            s.coeffs[k] = BigRat::new(BigInt::from(sign), BigInt::from(k));
        }
        s
    }

    /// `cosh t` truncated: `sum t^{2k} / (2k)!`.
    pub fn cosh(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        let mut fact = BigInt::one();
        for k in 0..=order {
            if k > 0 {
                fact *= k;
            }
            if k % 2 == 0 {
                s.coeffs[k] = BigRat::new(BigInt::one(), fact.clone());
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_rat;

    #[test]
    fn exp_truncated_to_order_three() {
        let t = TruncSeries::<BigRat>::variable(3);
        let e = t.exp().unwrap();
        assert_eq!(
            e.coeffs(),
            &[big_rat(1, 1), big_rat(1, 1), big_rat(1, 2), big_rat(1, 6)]
        );
    }

    #[test]
    fn reciprocal_of_one_minus_t() {
        let one = TruncSeries::<BigRat>::one(3);
        let t = TruncSeries::variable(3);
        let s = one.sub(&t).unwrap();
        let r = s.reciprocal().unwrap();
        assert_eq!(r.coeffs(), vec![big_rat(1, 1); 4].as_slice());
    }

    #[test]
    fn arctan_series_to_order_three() {
        let a = TruncSeries::<BigRat>::arctan(3);
        assert_eq!(
            a.coeffs(),
            &[big_rat(0, 1), big_rat(1, 1), big_rat(0, 1), big_rat(-1, 3)]
        );
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        let s = TruncSeries::<BigRat>::one(2);
        assert_eq!(s.exp(), Err(ExactError::NonzeroConstantTerm));
    }

    #[test]
    fn mixing_orders_is_an_error() {
        let a = TruncSeries::<BigRat>::one(2);
        let b = TruncSeries::<BigRat>::one(3);
        assert_eq!(a.add(&b), Err(ExactError::OrderMismatch(2, 3)));
    }

    #[test]
    fn sqrt_reciprocal_squares_back() {
        // (1 + t^2)^(-1/2) squared times (1 + t^2) is 1
        let order = 8;
        let one = TruncSeries::<BigRat>::one(order);
        let t = TruncSeries::variable(order);
        let s = one.add(&t.mul(&t).unwrap()).unwrap();
        let r = s.sqrt_reciprocal().unwrap();
        let back = r.mul(&r).unwrap().mul(&s).unwrap();
        assert_eq!(back, TruncSeries::one(order));
    }

    #[test]
    fn exp_of_negation_is_inverse() {
        let order = 6;
        let t = TruncSeries::<BigRat>::variable(order);
        let u = t.mul(&t).unwrap().add(&t).unwrap(); // t + t^2
        let prod = u.exp().unwrap().mul(&u.neg().exp().unwrap()).unwrap();
        assert_eq!(prod, TruncSeries::one(order));
    }
}
