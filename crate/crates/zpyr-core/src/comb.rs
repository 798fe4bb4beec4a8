//! Exact combinatorial number kernels.
//!
//! Conventions matter here and are fixed once:
//!
//! - `binomial(a, b)` vanishes for `b < 0` and for `0 <= a < b`;
//! - `stirling1` is the *signed* Stirling number of the first kind, i.e. the
//!   coefficients of the falling factorial `x(x-1)...(x-n+1) = sum_k s(n,k) x^k`
//!   (equivalently, the rising factorial satisfies
//!   `(y)_n = sum_j s(n,j) (y+n-1)^j`);
//! - Euler numbers come from `1/cosh`, so odd indices vanish and signs
//!   alternate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{BigRat, GaussRat, TruncSeries, ZPoly};

/// `C(a, b)` with `a >= 0`; zero for `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    debug_assert!(a >= 0, "binomial upper argument must be nonnegative");
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..b {
        num *= a - j;
        den *= j + 1;
    }
    num / den
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Signed Stirling number of the first kind; zero outside `0 <= k <= n`.
pub fn stirling1(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    stirling1_row(n)[k as usize].clone()
}

/// Row `n` of the signed triangle, entries `s(n, 0..=n)`, built from the
/// recurrence `s(n+1, k) = s(n, k-1) - n s(n, k)`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (k, v) in row.iter().enumerate() {
            next[k + 1] += v;
            next[k] -= v * m;
        }
        row = next;
    }
    row
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)` of a scalar.
pub fn rising_factorial(x: &GaussRat, n: usize) -> GaussRat {
    let mut acc = GaussRat::one();
    for j in 0..n {
        acc = &acc * &(x + &GaussRat::from_int(j as i64));
    }
    acc
}

/// Rising factorial of an integer, kept exact in `BigInt`.
pub fn rising_factorial_int(x: i64, n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..n {
        acc *= x + j as i64;
    }
    acc
}

/// Rising factorial of a polynomial argument.
pub fn rising_factorial_poly(p: &ZPoly, n: usize) -> ZPoly {
    let mut acc = ZPoly::one();
    for j in 0..n {
        let shifted = p + &ZPoly::constant(GaussRat::from_int(j as i64));
        acc = &acc * &shifted;
    }
    acc
}

/// Euler numbers `E_0..=E_max` from the exact series reciprocal of `cosh`.
pub fn euler_numbers(max: usize) -> Vec<BigInt> {
    let recip = TruncSeries::<BigRat>::cosh(max)
        .reciprocal()
        .expect("cosh has constant term one");
    let mut fact = BigInt::one();
    recip
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n > 0 {
                fact *= n;
            }
            let e = c * BigRat::from_integer(fact.clone());
            debug_assert!(e.denom().is_one(), "Euler numbers are integers");
            e.numer().clone()
        })
        .collect()
}

/// `(F_n, L_n)` by the standard recurrences, `F_0 = 0, F_1 = 1`,
/// `L_0 = 2, L_1 = 1`.
pub fn fib_lucas(n: usize) -> (BigInt, BigInt) {
    let (mut fa, mut fb) = (BigInt::zero(), BigInt::one());
    let (mut la, mut lb) = (BigInt::from(2), BigInt::one());
    for _ in 0..n {
        let fc = &fa + &fb;
        fa = std::mem::replace(&mut fb, fc);
        let lc = &la + &lb;
        la = std::mem::replace(&mut lb, lc);
    }
    (fa, la)
}

/// Eulerian number of type A (descent count over `S_n`), by the explicit
/// alternating sum; zero outside `0 <= k <= n`.
pub fn eulerian_a(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(n as i64 + 1, j) * BigInt::from(k + 1 - j).pow(n as u32);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// A triangle of exact integers, row `n` holding `n + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl IntTriangle {
    /// Rows `0..=n_max` of the signed Stirling triangle.
    pub fn stirling1(n_max: usize) -> Self {
        IntTriangle {
            rows: (0..=n_max).map(stirling1_row).collect(),
        }
    }

    /// Rows `0..=n_max` of the type-A Eulerian triangle.
    pub fn eulerian_a(n_max: usize) -> Self {
        IntTriangle {
            rows: (0..=n_max)
                .map(|n| (0..=n).map(|k| eulerian_a(n, k as i64)).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}
