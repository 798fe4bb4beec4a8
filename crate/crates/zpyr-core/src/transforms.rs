//! The pyramid <-> polynomial correspondence.
//!
//! A pyramid row `{a_{n,k}}` weights the basis words `q^k p^n q^{n-k}`; its
//! polynomial is
//!
//! ```text
//! P_n(z) = i^n n! sum_k a_{n,k} Q_{n,k}(z),
//! Q_{n,k}(z) = C(-iz - 1/2 + k, n)
//! ```
//!
//! and the inverse direction evaluates `P_n` at the points `i(j + 1/2)`:
//!
//! ```text
//! a_{n,k} = (i^n n!)^{-1} sum_{j=0}^{n-k} (-1)^{n-k-j} C(n+1, n-k-j) P_n(i(j+1/2)).
//! ```
//!
//! Both maps are implemented by direct summation; the Hankel-inverse lemma
//! and the coefficient-level expansions are kept as independent
//! verification routes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::comb::{binomial, factorial, stirling1_row};
use crate::exact::{BigRat, GaussRat, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("polynomial degree {degree} exceeds row index {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("row length {len} does not match n = {n}")]
    RowLength { len: usize, n: usize },
    #[error("basis index k = {k} out of range for n = {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("entry {index} is not real")]
    NonRealEntry { index: usize },
    #[error("polynomial does not correspond to the given row")]
    RowPolyMismatch,
}

/// Row `n` of a pyramid: entries `a_{n,0..=n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PyramidRow {
    n: usize,
    entries: Vec<GaussRat>,
}

impl PyramidRow {
    pub fn new(n: usize, entries: Vec<GaussRat>) -> Result<Self, TransformError> {
        if entries.len() != n + 1 {
            return Err(TransformError::RowLength {
                len: entries.len(),
                n,
            });
        }
        Ok(PyramidRow { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> &GaussRat {
        &self.entries[k]
    }

    pub fn sum(&self) -> GaussRat {
        let mut acc = GaussRat::zero();
        for e in &self.entries {
            acc = &acc + e;
        }
        acc
    }

    /// Normalized: entries sum to one.
    pub fn is_normalized(&self) -> bool {
        self.sum().is_one()
    }

    /// Symmetric: `a_{n,k} = a_{n,n-k}`.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.n).all(|k| self.entries[k] == self.entries[self.n - k])
    }

    /// Hermitian-symmetric: `a_{n,k} = conj(a_{n,n-k})`.
    pub fn is_hermitian_symmetric(&self) -> bool {
        (0..=self.n).all(|k| self.entries[k] == self.entries[self.n - k].conj())
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussRat::is_real)
    }

    pub fn entry_strings(&self) -> Vec<String> {
        self.entries.iter().map(GaussRat::to_string).collect()
    }
}

/// An integerized pyramid row (for matching the printed triangles).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntRow {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// `i^n n!` as a scalar.
fn i_n_factorial(n: usize) -> GaussRat {
    GaussRat::i_pow(n as i64).mul_rat(&BigRat::from_integer(factorial(n)))
}

/// The basis polynomial `Q_{n,k}(z) = C(-iz - 1/2 + k, n)`.
pub fn q_basis(n: usize, k: usize) -> Result<ZPoly, TransformError> {
    if k > n {
        return Err(TransformError::IndexOutOfRange { k, n });
    }
    let mut acc = ZPoly::one();
    for l in 0..n {
        // factor (-iz - 1/2 + k - l)
        let constant = GaussRat::from_rat(big_half(2 * k as i64 - 2 * l as i64 - 1));
        let factor = ZPoly::from_coeffs(vec![constant, GaussRat::frac_i(-1, 1)]);
        acc = &acc * &factor;
    }
    Ok(acc.div_rat(&BigRat::from_integer(factorial(n))))
}

/// `m/2` as a rational.
fn big_half(m: i64) -> BigRat {
    BigRat::new(BigInt::from(m), BigInt::from(2))
}

/// `P_n(z) = i^n n! sum_k a_{n,k} Q_{n,k}(z)`.
///
/// ```
/// use zpyr_core::exact::GaussRat;
/// use zpyr_core::transforms::{poly_to_pyramid, pyramid_to_poly};
/// use zpyr_core::PyramidRow;
///
/// let weyl2 = PyramidRow::new(
///     2,
///     vec![GaussRat::frac(1, 4), GaussRat::frac(1, 2), GaussRat::frac(1, 4)],
/// )
/// .unwrap();
/// let p2 = pyramid_to_poly(&weyl2);
/// assert_eq!(p2.to_string(), "z^2 - 1/4");
/// assert_eq!(poly_to_pyramid(&p2, 2).unwrap(), weyl2);
/// ```
pub fn pyramid_to_poly(row: &PyramidRow) -> ZPoly {
    let n = row.n;
    let mut acc = ZPoly::zero();
    for (k, a) in row.entries.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let q = q_basis(n, k).expect("k <= n by construction");
        acc = &acc + &q.scale(a);
    }
    acc.scale(&i_n_factorial(n))
}

/// Inverts the correspondence for a polynomial of degree `<= n`.
pub fn poly_to_pyramid(p: &ZPoly, n: usize) -> Result<PyramidRow, TransformError> {
    if let Some(degree) = p.degree() {
        if degree > n {
            return Err(TransformError::DegreeTooHigh { degree, n });
        }
    }
    let scale = i_n_factorial(n).inv().expect("i^n n! is nonzero");
    // values P(i(j + 1/2))
    let values: Vec<GaussRat> = (0..=n)
        .map(|j| p.eval(&GaussRat::frac_i(2 * j as i64 + 1, 2)))
        .collect();
    let entries = (0..=n)
        .map(|k| {
            let mut acc = GaussRat::zero();
            for (j, value) in values.iter().enumerate().take(n - k + 1) {
                let c = binomial(n as i64 + 1, (n - k - j) as i64);
                let mut term = value.mul_rat(&BigRat::from_integer(c));
                if (n - k - j) % 2 == 1 {
                    term = -term;
                }
                acc = &acc + &term;
            }
            &acc * &scale
        })
        .collect();
    PyramidRow::new(n, entries)
}

/// Expanded coefficient-level form of the inverse map
/// (`a_{n,k}` from the `b_{n,r}` directly); an independent route kept for
/// cross-checking.
pub fn poly_to_pyramid_coeffwise(p: &ZPoly, n: usize) -> Result<PyramidRow, TransformError> {
    if let Some(degree) = p.degree() {
        if degree > n {
            return Err(TransformError::DegreeTooHigh { degree, n });
        }
    }
    let scale = i_n_factorial(n).inv().expect("i^n n! is nonzero");
    let entries = (0..=n)
        .map(|k| {
            let mut acc = GaussRat::zero();
            for j in 0..=(n - k) {
                // inner sum: sum_r b_r i^r (j + 1/2)^r
                let mut inner = GaussRat::zero();
                let point = big_half(2 * j as i64 + 1);
                let mut power = BigRat::one();
                for r in 0..=n {
                    let b = p.coeff(r);
                    if !b.is_zero() {
                        inner = &inner + &(&b * &GaussRat::i_pow(r as i64)).mul_rat(&power);
                    }
                    power *= &point;
                }
                let c = binomial(n as i64 + 1, (n - k - j) as i64);
                let mut term = inner.mul_rat(&BigRat::from_integer(c));
                if (n - k - j) % 2 == 1 {
                    term = -term;
                }
                acc = &acc + &term;
            }
            &acc * &scale
        })
        .collect();
    PyramidRow::new(n, entries)
}

/// Expanded coefficient-level form of the forward map: each `b_{n,k}` from
/// the Stirling-number expansion of `Q_{n,l}`.
pub fn pyramid_to_poly_coeffwise(row: &PyramidRow) -> ZPoly {
    let n = row.n;
    let stirling = stirling1_row(n);
    let coeffs = (0..=n)
        .map(|k| {
            let mut total = GaussRat::zero();
            for (l, a) in row.entries.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                // sum_j s(n, j+k) C(j+k, k) (l - 1/2)^j
                let mut inner = BigRat::zero();
                let point = big_half(2 * l as i64 - 1);
                let mut power = BigRat::one();
                for j in 0..=(n - k) {
                    let s = &stirling[j + k];
                    let c = binomial((j + k) as i64, k as i64);
                    inner += BigRat::from_integer(s * c) * &power;
                    power *= &point;
                }
                total = &total + &a.mul_rat(&inner);
            }
            let mut factor = GaussRat::i_pow((n + k) as i64);
            if k % 2 == 1 {
                factor = -factor;
            }
            &total * &factor
        })
        .collect();
    ZPoly::from_coeffs(coeffs)
}

/// Value `P_n(i(m + 1/2))` computed from the row alone:
/// `i^n n! sum_l C(n+l, l) a_{n, n-m+l}`.
pub fn row_point_value(row: &PyramidRow, m: usize) -> GaussRat {
    let n = row.n;
    let mut acc = GaussRat::zero();
    // entries with n - m + l outside 0..=n contribute nothing
    for l in m.saturating_sub(n)..=m {
        let idx = n + l - m;
        if idx > n {
            break;
        }
        let c = binomial((n + l) as i64, l as i64);
        acc = &acc + &row.entries[idx].mul_rat(&BigRat::from_integer(c));
    }
    &acc * &i_n_factorial(n)
}

/// The Hankel matrix `M_n = [C(i+j, n)]`.
pub fn hankel_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| binomial((i + j) as i64, n as i64))
                .collect()
        })
        .collect()
}

/// Its inverse in closed form: `[(-1)^{n-i-j} C(n+1, i+j+1)]`.
pub fn hankel_inverse(n: usize) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let mut v = binomial(n as i64 + 1, (i + j + 1) as i64);
                    if (n as i64 - i as i64 - j as i64).rem_euclid(2) == 1 {
                        v = -v;
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// Exact integer matrix product.
pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let prod = &a[i][k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

pub fn is_identity(m: &[Vec<BigInt>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
    })
}

/// The change-of-basis matrix `S_{r,k} = sum_j s(n, j+r) C(j+r, r) (k - 1/2)^j`.
pub fn basis_s_matrix(n: usize) -> Vec<Vec<BigRat>> {
    let stirling = stirling1_row(n);
    (0..=n)
        .map(|r| {
            (0..=n)
                .map(|k| {
                    let point = big_half(2 * k as i64 - 1);
                    let mut power = BigRat::one();
                    let mut acc = BigRat::zero();
                    for j in 0..=(n - r) {
                        let c = binomial((j + r) as i64, r as i64);
                        acc += BigRat::from_integer(&stirling[j + r] * c) * &power;
                        power *= &point;
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Exact determinant by rational Gaussian elimination.
pub fn rat_determinant(matrix: &[Vec<BigRat>]) -> BigRat {
    let mut m: Vec<Vec<BigRat>> = matrix.to_vec();
    let n = m.len();
    let mut det = BigRat::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return BigRat::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Determinant of the `Q`-basis change matrix; its absolute value is
/// `prod_{k=1..n} k^k` (the sign pattern is recorded empirically, see
/// [`basis_det_sign`]).
pub fn basis_det(n: usize) -> GaussRat {
    GaussRat::from_rat(rat_determinant(&basis_s_matrix(n)))
}

/// Sign of [`basis_det`]: `+1` or `-1`.
pub fn basis_det_sign(n: usize) -> i32 {
    if rat_determinant(&basis_s_matrix(n)).is_negative() {
        -1
    } else {
        1
    }
}

/// Outer-diagonal entry from the polynomial alone:
/// `a_{n,n} = P_n(i/2) / (i^n n!)` with `n = deg P`.
pub fn outer_diagonal(p: &ZPoly) -> GaussRat {
    let n = match p.degree() {
        Some(n) => n,
        None => return GaussRat::zero(),
    };
    p.eval(&GaussRat::frac_i(1, 2))
        .checked_div(&i_n_factorial(n))
        .expect("i^n n! is nonzero")
}

/// Structural predicates of a row and its polynomial, each computed on its
/// own side of the correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    pub n: usize,
    /// Row side: entries sum to one.
    pub normalized: bool,
    /// Polynomial side: degree `n` with leading coefficient one.
    pub monic: bool,
    /// Row side: `a_{n,k} = conj(a_{n,n-k})`.
    pub hermitian_symmetric: bool,
    /// Polynomial side: all coefficients real.
    pub real_coefficients: bool,
    /// Row side: real entries with `a_{n,k} = a_{n,n-k}`.
    pub real_symmetric: bool,
    /// Polynomial side: only powers of the parity of `n` appear.
    pub parity_consistent: bool,
}

impl PredicateReport {
    /// The structure theorems relating the two sides.
    pub fn theorems_hold(&self) -> bool {
        self.normalized == self.monic
            && self.hermitian_symmetric == self.real_coefficients
            && (!self.real_symmetric || self.parity_consistent)
    }
}

/// Evaluates the predicates; `p` must be the polynomial of `row`.
pub fn predicates(row: &PyramidRow, p: &ZPoly) -> Result<PredicateReport, TransformError> {
    if &pyramid_to_poly(row) != p {
        return Err(TransformError::RowPolyMismatch);
    }
    Ok(PredicateReport {
        n: row.n,
        normalized: row.is_normalized(),
        monic: p.is_monic_of_degree(row.n),
        hermitian_symmetric: row.is_hermitian_symmetric(),
        real_coefficients: p.is_real(),
        real_symmetric: row.is_real() && row.is_symmetric(),
        parity_consistent: p.has_parity_of(row.n),
    })
}

/// Clears denominators and common factors from a real row, preserving
/// ratios: multiply by the lcm of denominators, divide by the gcd of
/// numerators.
pub fn integerize(row: &PyramidRow) -> Result<IntRow, TransformError> {
    let mut rats = Vec::with_capacity(row.entries.len());
    for (index, e) in row.entries.iter().enumerate() {
        if !e.is_real() {
            return Err(TransformError::NonRealEntry { index });
        }
        rats.push(e.re().clone());
    }
    let mut lcm = BigInt::one();
    for r in &rats {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.is_zero() {
        gcd = BigInt::one();
    }
    Ok(IntRow {
        n: row.n,
        entries: ints.iter().map(|v| v / &gcd).collect(),
    })
}
