//! Named ordering families (rows given a priori) and classical polynomial
//! families (pyramids computed from the polynomials), with their
//! outer-diagonal and generating-function identities.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::comb::{binomial, factorial, fib_lucas};
use crate::exact::{big_rat, BigRat, GaussRat, TruncSeries, ZPoly};
use crate::transforms::{outer_diagonal, poly_to_pyramid, pyramid_to_poly, PyramidRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamiliesError {
    #[error("custom family has no row {0}")]
    MissingRow(usize),
    #[error("unknown family name `{0}`")]
    UnknownName(String),
}

/// Ordering families: pyramid rows defined directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingFamily {
    /// Endpoints only: `a_{n,0} = a_{n,n} = 1/2` (row `[1]` at `n = 0`).
    Symmetric,
    /// Uniform: `a_{n,k} = 1/(n+1)`.
    BornJordan,
    /// Binomial over `2^n`: `a_{n,k} = C(n,k)/2^n`.
    Weyl,
    /// Normalized powers of binomials: `a_{n,k} = C(n,k)^r / sum_j C(n,j)^r`.
    BinomPower(u32),
    /// User-supplied rows.
    Custom(Vec<PyramidRow>),
}

impl OrderingFamily {
    pub fn parse(name: &str) -> Result<Self, FamiliesError> {
        match name {
            "symmetric" => Ok(OrderingFamily::Symmetric),
            "born-jordan" | "born_jordan" => Ok(OrderingFamily::BornJordan),
            "weyl" => Ok(OrderingFamily::Weyl),
            _ => {
                if let Some(r) = name
                    .strip_prefix("binom-pow-")
                    .or_else(|| name.strip_prefix("binom_pow_"))
                {
                    if let Ok(r) = r.parse::<u32>() {
                        if r >= 1 {
                            return Ok(OrderingFamily::BinomPower(r));
                        }
                    }
                }
                Err(FamiliesError::UnknownName(name.to_string()))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            OrderingFamily::Symmetric => "symmetric".into(),
            OrderingFamily::BornJordan => "born-jordan".into(),
            OrderingFamily::Weyl => "weyl".into(),
            OrderingFamily::BinomPower(r) => format!("binom-pow-{r}"),
            OrderingFamily::Custom(_) => "custom".into(),
        }
    }
}

/// Row `n` of an ordering family.
pub fn ordering_row(family: &OrderingFamily, n: usize) -> Result<PyramidRow, FamiliesError> {
    let entries: Vec<GaussRat> = match family {
        OrderingFamily::Symmetric => {
            if n == 0 {
                vec![GaussRat::one()]
            } else {
                let mut v = vec![GaussRat::zero(); n + 1];
                v[0] = GaussRat::frac(1, 2);
                v[n] = GaussRat::frac(1, 2);
                v
            }
        }
        OrderingFamily::BornJordan => {
            vec![GaussRat::frac(1, n as i64 + 1); n + 1]
        }
        OrderingFamily::Weyl => {
            let den = BigInt::one() << n;
            (0..=n)
                .map(|k| GaussRat::from_rat(BigRat::new(binomial(n as i64, k as i64), den.clone())))
                .collect()
        }
        OrderingFamily::BinomPower(r) => {
            let powers: Vec<BigInt> = (0..=n)
                .map(|k| binomial(n as i64, k as i64).pow(*r))
                .collect();
            let total: BigInt = powers.iter().sum();
            powers
                .into_iter()
                .map(|p| GaussRat::from_rat(BigRat::new(p, total.clone())))
                .collect()
        }
        OrderingFamily::Custom(rows) => {
            return rows
                .iter()
                .find(|r| r.n() == n)
                .cloned()
                .ok_or(FamiliesError::MissingRow(n));
        }
    };
    Ok(PyramidRow::new(n, entries).expect("length n + 1 by construction"))
}

/// The polynomial of an ordering-family row.
pub fn ordering_poly(family: &OrderingFamily, n: usize) -> Result<ZPoly, FamiliesError> {
    Ok(pyramid_to_poly(&ordering_row(family, n)?))
}

/// Classical polynomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    /// Monic Legendre.
    Legendre,
    /// Monic Hermite.
    Hermite,
    /// Chebyshev of the first kind, standard normalization.
    ChebyshevT,
    /// Chebyshev of the second kind, standard normalization.
    ChebyshevU,
    /// `z^n`.
    Monomial,
}

impl PolyFamily {
    pub fn parse(name: &str) -> Result<Self, FamiliesError> {
        match name {
            "legendre" => Ok(PolyFamily::Legendre),
            "hermite" => Ok(PolyFamily::Hermite),
            "chebyshev-t" | "chebyshev_t" => Ok(PolyFamily::ChebyshevT),
            "chebyshev-u" | "chebyshev_u" => Ok(PolyFamily::ChebyshevU),
            "monomial" => Ok(PolyFamily::Monomial),
            _ => Err(FamiliesError::UnknownName(name.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::Legendre => "legendre",
            PolyFamily::Hermite => "hermite",
            PolyFamily::ChebyshevT => "chebyshev-t",
            PolyFamily::ChebyshevU => "chebyshev-u",
            PolyFamily::Monomial => "monomial",
        }
    }
}

/// `n`-th member of a classical family, exact coefficients.
pub fn family_poly(family: PolyFamily, n: usize) -> ZPoly {
    match family {
        PolyFamily::Legendre => {
            // (1/C(2n,n)) sum_m (-1)^m C(n,m) C(2n-2m, n) x^{n-2m}
            let mut coeffs = vec![GaussRat::zero(); n + 1];
            let norm = binomial(2 * n as i64, n as i64);
            for m in 0..=(n / 2) {
                let c = binomial(n as i64, m as i64) * binomial(2 * (n - m) as i64, n as i64);
                let mut v = BigRat::new(c, norm.clone());
                if m % 2 == 1 {
                    v = -v;
                }
                coeffs[n - 2 * m] = GaussRat::from_rat(v);
            }
            ZPoly::from_coeffs(coeffs)
        }
        PolyFamily::Hermite => {
            // (n!/2^n) sum_m (-1)^m / (m! (n-2m)!) (2x)^{n-2m}
            let mut coeffs = vec![GaussRat::zero(); n + 1];
            let nfact = factorial(n);
            for m in 0..=(n / 2) {
                let k = n - 2 * m;
                let den = factorial(m) * factorial(k);
                // n!/2^n * 2^k / den
                let mut v = BigRat::new(&nfact * (BigInt::one() << k), den * (BigInt::one() << n));
                if m % 2 == 1 {
                    v = -v;
                }
                coeffs[k] = GaussRat::from_rat(v);
            }
            ZPoly::from_coeffs(coeffs)
        }
        PolyFamily::ChebyshevT => chebyshev(n, ZPoly::one(), ZPoly::z()),
        PolyFamily::ChebyshevU => {
            chebyshev(n, ZPoly::one(), ZPoly::monomial(1, GaussRat::from_int(2)))
        }
        PolyFamily::Monomial => ZPoly::monomial(n, GaussRat::one()),
    }
}

/// Three-term recurrence `T_{n+1} = 2z T_n - T_{n-1}` from the given first
/// two members.
fn chebyshev(n: usize, t0: ZPoly, t1: ZPoly) -> ZPoly {
    if n == 0 {
        return t0;
    }
    let two_z = ZPoly::monomial(1, GaussRat::from_int(2));
    let (mut prev, mut cur) = (t0, t1);
    for _ in 1..n {
        let next = &(&two_z * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// The pyramid row of a classical-family polynomial.
pub fn classical_pyramid(family: PolyFamily, n: usize) -> PyramidRow {
    poly_to_pyramid(&family_poly(family, n), n).expect("degree n polynomial")
}

/// One outer-diagonal identity check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OuterDiagonalCheck {
    pub family: String,
    pub n: usize,
    /// Outer diagonal entry `a_{n,n}` in canonical text form.
    pub outer: String,
    pub status: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct OuterDiagonalReport {
    pub checks: Vec<OuterDiagonalCheck>,
}

impl OuterDiagonalReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status)
    }
}

/// Verifies, for `n <= n_max`:
///
/// - Chebyshev T: `a_{n,n} * 2 n! = L_n`;
/// - Chebyshev U: `a_{n,n} * n! = F_{n+1}`;
/// - Hermite: `h_n = a_{n,n} 2^n n!` satisfies
///   `h_n = h_{n-1} + 2(n-1) h_{n-2}` with `h_1 = 1, h_2 = 3`;
/// - Legendre: the closed-form sum
///   `a_{n,n} = n!/(2^n (2n)!) sum_j 2^{2j} C(n,j) C(2n-2j, n)` matches the
///   inverse-map entry.
pub fn outer_diagonal_identities(n_max: usize) -> OuterDiagonalReport {
    let mut report = OuterDiagonalReport::default();
    let mut hermite_h: Vec<BigRat> = Vec::new();
    for n in 0..=n_max {
        let nfact = BigRat::from_integer(factorial(n));

        let t_outer = outer_diagonal(&family_poly(PolyFamily::ChebyshevT, n));
        let (_, lucas) = fib_lucas(n);
        let t_ok = t_outer.mul_rat(&(&nfact * big_rat(2, 1)))
            == GaussRat::from_rat(BigRat::from_integer(lucas));
        report.checks.push(OuterDiagonalCheck {
            family: "chebyshev-t".into(),
            n,
            outer: t_outer.to_string(),
            status: t_ok,
        });

        let u_outer = outer_diagonal(&family_poly(PolyFamily::ChebyshevU, n));
        let (fib_next, _) = fib_lucas(n + 1);
        let u_ok = u_outer.mul_rat(&nfact) == GaussRat::from_rat(BigRat::from_integer(fib_next));
        report.checks.push(OuterDiagonalCheck {
            family: "chebyshev-u".into(),
            n,
            outer: u_outer.to_string(),
            status: u_ok,
        });

        let h_outer = outer_diagonal(&family_poly(PolyFamily::Hermite, n));
        let h_n = h_outer.mul_rat(&(&nfact * BigRat::from_integer(BigInt::one() << n)));
        debug_assert!(h_n.is_real());
        hermite_h.push(h_n.re().clone());
        let h_ok = match n {
            0 => true,
            1 => hermite_h[1] == BigRat::one(),
            2 => hermite_h[2] == big_rat(3, 1),
            _ => {
                let expect = &hermite_h[n - 1]
                    + BigRat::from_integer(BigInt::from(2 * (n as i64 - 1))) * &hermite_h[n - 2];
                hermite_h[n] == expect
            }
        };
        report.checks.push(OuterDiagonalCheck {
            family: "hermite".into(),
            n,
            outer: h_outer.to_string(),
            status: h_ok,
        });

        let l_outer = outer_diagonal(&family_poly(PolyFamily::Legendre, n));
        let mut sum = BigInt::from(0);
        for j in 0..=n {
            sum += (BigInt::one() << (2 * j))
                * binomial(n as i64, j as i64)
                * binomial(2 * (n - j) as i64, n as i64);
        }
        let closed = BigRat::new(factorial(n) * sum, (BigInt::one() << n) * factorial(2 * n));
        let l_ok = l_outer == GaussRat::from_rat(closed)
            && &l_outer == classical_pyramid(PolyFamily::Legendre, n).entry(n);
        report.checks.push(OuterDiagonalCheck {
            family: "legendre".into(),
            n,
            outer: l_outer.to_string(),
            status: l_ok,
        });
    }
    report
}

/// Generating-function checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EgfReport {
    pub order: usize,
    /// `sum (2t)^n/n! P_n(z)` equals `exp(2z arctan t)/sqrt(1+t^2)` through
    /// the order, coefficient polynomials compared exactly.
    pub weyl_ok: bool,
    pub weyl_first_mismatch: Option<usize>,
    /// `sum a_{n,n} t^n` for the Hermite pyramid equals `exp(t/2 + t^2/4)`.
    pub hermite_ok: bool,
    pub hermite_first_mismatch: Option<usize>,
}

impl EgfReport {
    pub fn all_pass(&self) -> bool {
        self.weyl_ok && self.hermite_ok
    }
}

/// Closed form `exp(2z arctan t) / sqrt(1 + t^2)` as a `t`-series with
/// polynomial (in `z`) coefficients.
pub fn weyl_egf_closed_form(order: usize) -> TruncSeries<ZPoly> {
    let two_z = ZPoly::monomial(1, GaussRat::from_int(2));
    let arctan = TruncSeries::<BigRat>::arctan(order);
    let exponent = TruncSeries::from_coeffs(
        order,
        arctan
            .coeffs()
            .iter()
            .map(|c| two_z.scale(&GaussRat::from_rat(c.clone())))
            .collect(),
    );
    let exp_part = exponent.exp().expect("arctan has zero constant term");
    // 1 + t^2 lifted to polynomial coefficients
    let mut one_plus_t2 = TruncSeries::<ZPoly>::one(order);
    if order >= 2 {
        one_plus_t2 = one_plus_t2
            .add(&TruncSeries::from_coeffs(
                order,
                vec![ZPoly::zero(), ZPoly::zero(), ZPoly::one()],
            ))
            .expect("orders match");
    }
    let root = one_plus_t2.sqrt_reciprocal().expect("constant term is one");
    exp_part.mul(&root).expect("orders match")
}

/// Runs both generating-function checks through the given order.
pub fn egf_checks(order: usize) -> EgfReport {
    // Weyl: left side has t^n coefficient 2^n/n! * P_n
    let closed = weyl_egf_closed_form(order);
    let mut weyl_first_mismatch = None;
    for n in 0..=order {
        let p = ordering_poly(&OrderingFamily::Weyl, n).expect("built-in family");
        let lhs = p.scale(&GaussRat::from_rat(BigRat::new(
            BigInt::one() << n,
            factorial(n),
        )));
        if &lhs != closed.coeff(n) {
            weyl_first_mismatch = Some(n);
            break;
        }
    }

    // Hermite outer diagonal: exp(t/2 + t^2/4)
    let t = TruncSeries::<BigRat>::variable(order);
    let half_t = t.scale_rat(&big_rat(1, 2));
    let quarter_t2 = t.mul(&t).expect("orders match").scale_rat(&big_rat(1, 4));
    let closed_h = half_t
        .add(&quarter_t2)
        .expect("orders match")
        .exp()
        .expect("zero constant term");
    let mut hermite_first_mismatch = None;
    for n in 0..=order {
        let outer = outer_diagonal(&family_poly(PolyFamily::Hermite, n));
        if outer != GaussRat::from_rat(closed_h.coeff(n).clone()) {
            hermite_first_mismatch = Some(n);
            break;
        }
    }

    EgfReport {
        order,
        weyl_ok: weyl_first_mismatch.is_none(),
        weyl_first_mismatch,
        hermite_ok: hermite_first_mismatch.is_none(),
        hermite_first_mismatch,
    }
}
