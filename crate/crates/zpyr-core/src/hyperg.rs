//! Terminating hypergeometric sums and the identity suite connecting the
//! ordering families to continuous Hahn and Bateman polynomials.
//!
//! All sums are finite and exact. Where a closed form multiplies a
//! hypergeometric series by a Pochhammer prefactor whose lower parameter can
//! hit a nonpositive integer (e.g. `(m-n+1)_n * 2F1(-n, m+1; m-n+1; -1)`),
//! the prefactor is folded into the sum via
//! `(c)_n / (c)_k = (c+k)_{n-k}`, which removes the division entirely.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::comb::{binomial, factorial, rising_factorial, rising_factorial_int};
use crate::exact::{BigRat, GaussRat, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypError {
    #[error("no upper parameter is a nonpositive integer; series does not terminate")]
    NoTermination,
    #[error("lower parameter {index} vanishes within the summation range")]
    BadLowerParam { index: usize },
}

/// Parameters of a terminating `pFq` at a scalar argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSpec {
    upper: Vec<GaussRat>,
    lower: Vec<GaussRat>,
    argument: GaussRat,
    termination: usize,
}

impl HypSpec {
    /// Validates termination (some upper parameter a nonpositive integer)
    /// and that no lower parameter vanishes before the terminating index.
    pub fn new(
        upper: Vec<GaussRat>,
        lower: Vec<GaussRat>,
        argument: GaussRat,
    ) -> Result<Self, HypError> {
        let termination = upper
            .iter()
            .filter_map(GaussRat::nonpositive_int_magnitude)
            .min()
            .ok_or(HypError::NoTermination)?;
        for (index, c) in lower.iter().enumerate() {
            if let Some(m) = c.nonpositive_int_magnitude() {
                // (c)_k = 0 once k > m = |c|
                if m < termination {
                    return Err(HypError::BadLowerParam { index });
                }
            }
        }
        Ok(HypSpec {
            upper,
            lower,
            argument,
            termination,
        })
    }

    pub fn termination_index(&self) -> usize {
        self.termination
    }
}

/// Evaluates the terminating sum
/// `sum_{k=0}^{K} prod (upper)_k / prod (lower)_k * arg^k / k!`.
pub fn pfq(spec: &HypSpec) -> GaussRat {
    let mut acc = GaussRat::zero();
    let mut term = GaussRat::one();
    for k in 0..=spec.termination {
        if k > 0 {
            let shift = GaussRat::from_int(k as i64 - 1);
            for a in &spec.upper {
                term = &term * &(a + &shift);
            }
            for c in &spec.lower {
                term = term
                    .checked_div(&(c + &shift))
                    .expect("validated lower parameters are nonzero in range");
            }
            term = (&term * &spec.argument).div_rat(&BigRat::from_integer(BigInt::from(k)));
        }
        acc = &acc + &term;
    }
    acc
}

/// Polynomial-valued terminating sum: upper parameters may be polynomials
/// in `z` (constants included), lower parameters are scalars, and the
/// terminating index is supplied by the caller.
pub fn pfq_poly(
    upper: &[ZPoly],
    lower: &[GaussRat],
    argument: &GaussRat,
    termination: usize,
) -> Result<ZPoly, HypError> {
    for (index, c) in lower.iter().enumerate() {
        if let Some(m) = c.nonpositive_int_magnitude() {
            if m < termination {
                return Err(HypError::BadLowerParam { index });
            }
        }
    }
    let mut acc = ZPoly::zero();
    let mut term = ZPoly::one();
    for k in 0..=termination {
        if k > 0 {
            let shift = GaussRat::from_int(k as i64 - 1);
            for a in upper {
                term = &term * &(a + &ZPoly::constant(shift.clone()));
            }
            let mut scalar = argument.div_rat(&BigRat::from_integer(BigInt::from(k)));
            for c in lower {
                scalar = scalar
                    .checked_div(&(c + &shift))
                    .expect("validated lower parameters are nonzero in range");
            }
            term = term.scale(&scalar);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Continuous Hahn polynomial `p_n(z; a, b, c, d)` evaluated exactly at a
/// scalar `z`:
/// `i^n (a+c)_n (a+d)_n / n! * 3F2(-n, n+a+b+c+d-1, a+iz; a+c, a+d; 1)`.
pub fn continuous_hahn(
    n: usize,
    z: &GaussRat,
    a: &GaussRat,
    b: &GaussRat,
    c: &GaussRat,
    d: &GaussRat,
) -> GaussRat {
    let arg = a + &(&GaussRat::i() * z);
    let sum_abcd = &(a + b) + &(c + d);
    let spec = HypSpec::new(
        vec![
            GaussRat::from_int(-(n as i64)),
            &GaussRat::from_int(n as i64 - 1) + &sum_abcd,
            arg,
        ],
        vec![a + c, a + d],
        GaussRat::one(),
    )
    .expect("terminates at -n");
    let prefactor = &(&GaussRat::i_pow(n as i64) * &rising_factorial(&(a + c), n))
        * &rising_factorial(&(a + d), n);
    (&prefactor * &pfq(&spec)).div_rat(&BigRat::from_integer(factorial(n)))
}

/// Continuous Hahn as a polynomial in `z`.
pub fn continuous_hahn_poly(
    n: usize,
    a: &GaussRat,
    b: &GaussRat,
    c: &GaussRat,
    d: &GaussRat,
) -> ZPoly {
    let arg_poly = ZPoly::from_coeffs(vec![a.clone(), GaussRat::i()]);
    let sum_abcd = &(a + b) + &(c + d);
    let upper = vec![
        ZPoly::constant(GaussRat::from_int(-(n as i64))),
        ZPoly::constant(&GaussRat::from_int(n as i64 - 1) + &sum_abcd),
        arg_poly,
    ];
    let series = pfq_poly(&upper, &[a + c, a + d], &GaussRat::one(), n)
        .expect("lower parameters are positive here");
    let prefactor = &(&GaussRat::i_pow(n as i64) * &rising_factorial(&(a + c), n))
        * &rising_factorial(&(a + d), n);
    series
        .scale(&prefactor)
        .div_rat(&BigRat::from_integer(factorial(n)))
}

/// Bateman polynomial `F_n(z) = 3F2(-n, n+1, (1+z)/2; 1, 1; 1)` at a scalar.
pub fn bateman_f(n: usize, z: &GaussRat) -> GaussRat {
    let spec = HypSpec::new(
        vec![
            GaussRat::from_int(-(n as i64)),
            GaussRat::from_int(n as i64 + 1),
            (&GaussRat::one() + z).div_rat(&crate::exact::big_rat(2, 1)),
        ],
        vec![GaussRat::one(), GaussRat::one()],
        GaussRat::one(),
    )
    .expect("terminates at -n");
    pfq(&spec)
}

/// `F_n(-2iz)` as a polynomial in `z` (third upper parameter `1/2 - iz`).
pub fn bateman_f_of_minus_2iz(n: usize) -> ZPoly {
    let third = ZPoly::from_coeffs(vec![GaussRat::frac(1, 2), GaussRat::frac_i(-1, 1)]);
    let upper = vec![
        ZPoly::constant(GaussRat::from_int(-(n as i64))),
        ZPoly::constant(GaussRat::from_int(n as i64 + 1)),
        third,
    ];
    pfq_poly(
        &upper,
        &[GaussRat::one(), GaussRat::one()],
        &GaussRat::one(),
        n,
    )
    .expect("lower parameters are one")
}

/// The Weyl-family polynomial in hypergeometric closed form:
/// `P_n(z) = n!/(2i)^n * 3F2(-n, n+1, 1/4 - iz/2; 1/2, 1; 1)`.
pub fn weyl_hyp_poly(n: usize) -> ZPoly {
    let third = ZPoly::from_coeffs(vec![GaussRat::frac(1, 4), GaussRat::frac_i(-1, 2)]);
    let upper = vec![
        ZPoly::constant(GaussRat::from_int(-(n as i64))),
        ZPoly::constant(GaussRat::from_int(n as i64 + 1)),
        third,
    ];
    let series = pfq_poly(
        &upper,
        &[GaussRat::frac(1, 2), GaussRat::one()],
        &GaussRat::one(),
        n,
    )
    .expect("lower parameters are positive");
    let scale = GaussRat::from_rat(BigRat::from_integer(factorial(n)))
        .checked_div(&GaussRat::frac_i(2, 1).pow(n as i64).expect("nonzero base"))
        .expect("2i is nonzero");
    series.scale(&scale)
}

/// One cell of the identity suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub n: usize,
    pub m: usize,
    pub status: bool,
}

/// Result of running the suite over a rectangle of `(n, m)`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.status).collect()
    }

    fn push(&mut self, identity: &str, n: usize, m: usize, status: bool) {
        self.checks.push(IdentityCheck {
            identity: identity.to_string(),
            n,
            m,
            status,
        });
    }
}

/// `sum_k C(n,k) (m+1-k)_n`, the binomial-sum side of the first lemma.
fn binomial_shift_sum(n: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        acc += binomial(n as i64, k as i64) * rising_factorial_int(m as i64 + 1 - k as i64, n);
    }
    acc
}

/// `(m-n+1)_n 2F1(-n, m+1; m-n+1; -1)` with the prefactor folded in:
/// `sum_k C(n,k) (m+1)_k (m-n+1+k)_{n-k}`.
fn folded_2f1_sum(n: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        acc += binomial(n as i64, k as i64)
            * rising_factorial_int(m as i64 + 1, k)
            * rising_factorial_int(m as i64 - n as i64 + 1 + k as i64, n - k);
    }
    acc
}

/// `(-1)^n 3F2(-n, n+1, (m+1)/2; 1/2, 1; 1)`, exactly.
fn hahn_3f2_side(n: usize, m: usize) -> BigRat {
    let spec = HypSpec::new(
        vec![
            GaussRat::from_int(-(n as i64)),
            GaussRat::from_int(n as i64 + 1),
            GaussRat::frac(m as i64 + 1, 2),
        ],
        vec![GaussRat::frac(1, 2), GaussRat::one()],
        GaussRat::one(),
    )
    .expect("terminates at -n");
    let v = pfq(&spec);
    debug_assert!(v.is_real());
    let mut r = v.re().clone();
    if n % 2 == 1 {
        r = -r;
    }
    r
}

/// Bateman-lemma left side: `sum_k (-1)^k C(n+k,k) C(m+k,k) C(n,k)`.
fn bateman_lhs(n: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let term = binomial((n + k) as i64, k as i64)
            * binomial((m + k) as i64, k as i64)
            * binomial(n as i64, k as i64);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Bateman-lemma right side: `(-1)^n sum_k C(n,k)^2 C(m+k, n)`.
fn bateman_rhs(n: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let b = binomial(n as i64, k as i64);
        acc += &b * &b * binomial((m + k) as i64, n as i64);
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    acc
}

/// The two printed forms of `c(n, m)`.
fn c_sum_first(n: usize, m: usize) -> BigInt {
    (0..=n)
        .map(|k| binomial((m + k) as i64, m as i64) * binomial(m as i64, (n - k) as i64))
        .sum()
}

fn c_sum_second(n: usize, m: usize) -> BigInt {
    (0..=m)
        .map(|k| binomial((n + k) as i64, m as i64) * binomial(m as i64, k as i64))
        .sum()
}

/// Runs the exact identity suite on `0 <= n <= n_max`, `0 <= m <= m_max`:
///
/// - `binomial-sum`: `sum_k C(n,k)(m+1-k)_n = (m-n+1)_n 2F1(-n,m+1;m-n+1;-1)`;
/// - `hahn-bridge`: the folded sum over `n!` equals
///   `(-1)^n 3F2(-n,n+1,(m+1)/2; 1/2,1; 1)`;
/// - `hahn-recurrence`: both sides satisfy
///   `(n+2)u(n+2) - (2m+1)u(n+1) - (n+1)u(n) = 0`;
/// - `bateman-identity` and `bateman-recurrence`: the alternating binomial
///   identity and its certified recurrence
///   `(n+2)^2 u(n+2) + (2m+1)(2n+3)u(n+1) - (n+1)^2 u(n) = 0`;
/// - `prudnikov`: the closed-form entry specialized to `a = n+1, b = (m+1)/2`;
/// - `c-forms`: both printed forms of `c(n,m)` agree with each other and
///   with the folded sum over `n!`.
pub fn identity_suite(n_max: usize, m_max: usize) -> IdentityReport {
    let mut report = IdentityReport::default();
    for m in 0..=m_max {
        // values needed up to n_max + 2 for the recurrences
        let folded: Vec<BigRat> = (0..=n_max + 2)
            .map(|n| BigRat::new(folded_2f1_sum(n, m), factorial(n)))
            .collect();
        let hahn: Vec<BigRat> = (0..=n_max + 2).map(|n| hahn_3f2_side(n, m)).collect();
        let bl: Vec<BigInt> = (0..=n_max + 2).map(|n| bateman_lhs(n, m)).collect();
        let br: Vec<BigInt> = (0..=n_max + 2).map(|n| bateman_rhs(n, m)).collect();
        for n in 0..=n_max {
            report.push(
                "binomial-sum",
                n,
                m,
                binomial_shift_sum(n, m) == folded_2f1_sum(n, m),
            );
            report.push("hahn-bridge", n, m, folded[n] == hahn[n]);
            let rec = |u: &[BigRat]| -> bool {
                let lhs = BigRat::from_integer(BigInt::from(n as i64 + 2)) * &u[n + 2]
                    - BigRat::from_integer(BigInt::from(2 * m as i64 + 1)) * &u[n + 1]
                    - BigRat::from_integer(BigInt::from(n as i64 + 1)) * &u[n];
                lhs.is_zero()
            };
            report.push("hahn-recurrence", n, m, rec(&folded) && rec(&hahn));
            report.push("bateman-identity", n, m, bl[n] == br[n]);
            let brec = |u: &[BigInt]| -> bool {
                let a = BigInt::from(((n + 2) * (n + 2)) as i64);
                let b = BigInt::from(((2 * m + 1) * (2 * n + 3)) as i64);
                let c = BigInt::from(((n + 1) * (n + 1)) as i64);
                (a * &u[n + 2] + b * &u[n + 1] - c * &u[n]).is_zero()
            };
            report.push("bateman-recurrence", n, m, brec(&bl) && brec(&br));
            // Prudnikov entry at a = n+1, b = (m+1)/2: the 3F2 side equals
            // (2b-a+1)_n / (1-a)_n * 2F1(-n, 2b; 2b-a+1; -1), i.e. the
            // folded sum divided by (-1)^n n!.
            let prud_lhs = {
                let mut v = hahn[n].clone();
                if n % 2 == 1 {
                    v = -v;
                }
                v
            };
            let prud_rhs = {
                let mut v = folded[n].clone();
                if n % 2 == 1 {
                    v = -v;
                }
                v
            };
            report.push("prudnikov", n, m, prud_lhs == prud_rhs);
            let c1 = c_sum_first(n, m);
            let c2 = c_sum_second(n, m);
            report.push(
                "c-forms",
                n,
                m,
                c1 == c2 && BigRat::from_integer(c1) == folded[n],
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn int(v: i64) -> GaussRat {
        GaussRat::from_int(v)
    }

    #[test]
    fn pfq_two_term_sum() {
        // 3F2(-1, 2, 1; 1, 1; 1) = 1 - 2 = -1
        let spec =
            HypSpec::new(vec![int(-1), int(2), int(1)], vec![int(1), int(1)], int(1)).unwrap();
        assert_eq!(pfq(&spec), int(-1));
    }

    #[test]
    fn pfq_binomial_theorem() {
        // 2F1(-n, b; b; -1) = 2^n at n = 3
        let spec = HypSpec::new(
            vec![int(-3), GaussRat::frac(5, 7)],
            vec![GaussRat::frac(5, 7)],
            int(-1),
        )
        .unwrap();
        assert_eq!(pfq(&spec), int(8));
    }

    #[test]
    fn pfq_weyl_value_at_zero() {
        // 3F2(-2, 3, 1/4; 1/2, 1; 1) = 1/2, consistent with Weyl P2(0) = -1/4
        let spec = HypSpec::new(
            vec![int(-2), int(3), GaussRat::frac(1, 4)],
            vec![GaussRat::frac(1, 2), int(1)],
            int(1),
        )
        .unwrap();
        let v = pfq(&spec);
        assert_eq!(v, GaussRat::frac(1, 2));
        // (2!/(2i)^2) v = -1/4
        let scaled = GaussRat::from_int(2)
            .checked_div(&GaussRat::frac_i(2, 1).pow(2).unwrap())
            .unwrap()
            * v;
        assert_eq!(scaled, GaussRat::frac(-1, 4));
    }

    #[test]
    fn pfq_requires_termination_and_good_lower() {
        assert_eq!(
            HypSpec::new(vec![int(1)], vec![int(1)], int(1)),
            Err(HypError::NoTermination)
        );
        assert_eq!(
            HypSpec::new(vec![int(-3)], vec![int(-1)], int(1)),
            Err(HypError::BadLowerParam { index: 0 })
        );
        // a lower nonpositive integer beyond the termination index is fine
        assert!(HypSpec::new(vec![int(-2)], vec![int(-5)], int(1)).is_ok());
    }

    #[test]
    fn pfq_trailing_zero_terms_do_not_matter() {
        // adding an extra upper/lower pair (k+1)/(k+1) shifts nothing
        let a = HypSpec::new(vec![int(-4), int(2)], vec![int(3)], int(-1)).unwrap();
        let b = HypSpec::new(vec![int(-4), int(2), int(1)], vec![int(3), int(1)], int(-1)).unwrap();
        assert_eq!(pfq(&a), pfq(&b));
    }

    #[test]
    fn bateman_small_values() {
        assert_eq!(bateman_f(0, &int(7)), int(1));
        // (1+z)/2 = 0 kills every k >= 1 term
        assert_eq!(bateman_f(1, &int(-1)), int(1));
        // F_1(z) = 1 - (1 + z)
        assert_eq!(bateman_f(1, &int(3)), int(-3));
    }

    #[test]
    fn continuous_hahn_degree_one() {
        let (a, b) = (GaussRat::frac(1, 4), GaussRat::frac(3, 4));
        // p_1(z) = i[(a+c)(a+d) - (a+b+c+d)(a+iz)] = 2z at these parameters
        let at_zero = continuous_hahn(1, &int(0), &a, &b, &a, &b);
        assert_eq!(at_zero, int(0));
        let at_one = continuous_hahn(1, &int(1), &a, &b, &a, &b);
        assert_eq!(at_one, int(2));
        // polynomial route agrees with pointwise route
        let p = continuous_hahn_poly(1, &a, &b, &a, &b);
        assert_eq!(p.eval(&int(1)), at_one);
        assert_eq!(p, ZPoly::from_coeffs(vec![GaussRat::zero(), int(2)]));
    }

    #[test]
    fn weyl_hyp_poly_small() {
        assert_eq!(weyl_hyp_poly(0), ZPoly::one());
        assert_eq!(weyl_hyp_poly(1), ZPoly::z());
        assert_eq!(
            weyl_hyp_poly(2),
            ZPoly::from_coeffs(vec![
                GaussRat::frac(-1, 4),
                GaussRat::zero(),
                GaussRat::one()
            ])
        );
    }

    #[test]
    fn identity_suite_small_rectangle() {
        let report = identity_suite(6, 6);
        assert!(report.all_pass(), "failures: {:?}", report.failures());
    }

    #[test]
    fn c_values() {
        assert_eq!(c_sum_first(1, 1), BigInt::from(3));
        assert_eq!(c_sum_second(1, 1), BigInt::from(3));
        assert_eq!(c_sum_first(2, 1), BigInt::from(5));
    }

    #[test]
    fn binomial_sum_identity_base_cases() {
        // n = 0: both sides are 1 (empty products)
        for m in 0..5 {
            assert_eq!(binomial_shift_sum(0, m), BigInt::one());
            assert_eq!(folded_2f1_sum(0, m), BigInt::one());
        }
    }

    #[test]
    fn pfq_poly_matches_scalar_specialization() {
        // evaluate the polynomial route at z = i(m + 1/2) against pfq
        for n in 0..=4usize {
            let p = weyl_hyp_poly(n);
            for m in 0..=4usize {
                let z = GaussRat::frac_i(2 * m as i64 + 1, 2);
                let spec = HypSpec::new(
                    vec![
                        int(-(n as i64)),
                        int(n as i64 + 1),
                        // 1/4 - iz/2 at z = i(m+1/2) is (m+1)/2... times 1: real
                        &GaussRat::frac(1, 4) - &(&GaussRat::frac_i(1, 2) * &z),
                    ],
                    vec![GaussRat::frac(1, 2), int(1)],
                    int(1),
                )
                .unwrap();
                let scale = GaussRat::from_rat(BigRat::from_integer(factorial(n)))
                    .checked_div(&GaussRat::frac_i(2, 1).pow(n as i64).unwrap())
                    .unwrap();
                assert_eq!(p.eval(&z), &scale * &pfq(&spec), "n={n} m={m}");
            }
        }
    }
}
