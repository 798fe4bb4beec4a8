//! Orthogonality screening for monic, parity-consistent polynomial
//! families: the two determinant conditions on low-order coefficients, a
//! three-term-recurrence (Favard) screen, and exact moment functionals.
//!
//! The built-in moment sequence realizes the `sech(pi z)` weight of the
//! Weyl family exactly: `mu_{2k} = |E_{2k}| / 4^k`, odd moments zero. The
//! sequence is validated by the forced vanishings `<P0, P2> = <P0, P4> = 0`
//! before use (see the acceptance suite).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::comb::euler_numbers;
use crate::exact::{BigRat, GaussRat, ZPoly};
use crate::families::{ordering_row, OrderingFamily};
use crate::transforms::pyramid_to_poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrthoError {
    #[error("P_{n} is not monic of degree {n}")]
    NonMonic { n: usize },
    #[error("P_{n} does not have the parity of {n}")]
    WrongParity { n: usize },
    #[error("moment sequence too short: need index {needed}, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("mu_0 must be positive")]
    NonPositiveMu0,
    #[error("moment sequence is degenerate at degree {0}")]
    DegenerateMoments(usize),
}

/// A sequence of real moments `mu_0, mu_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq {
    moments: Vec<BigRat>,
}

impl MomentSeq {
    pub fn new(moments: Vec<BigRat>) -> Result<Self, OrthoError> {
        if moments.first().is_none_or(|m| !m.is_positive()) {
            return Err(OrthoError::NonPositiveMu0);
        }
        Ok(MomentSeq { moments })
    }

    /// The exact `sech(pi z)` moments up to index `max_degree`:
    /// `mu_{2k} = |E_{2k}| / 4^k`, odd moments zero.
    pub fn sech(max_degree: usize) -> Self {
        let euler = euler_numbers(max_degree);
        let moments = (0..=max_degree)
            .map(|k| {
                if k % 2 == 1 {
                    BigRat::zero()
                } else {
                    BigRat::new(euler[k].abs(), BigInt::one() << k)
                }
            })
            .collect();
        MomentSeq { moments }
    }

    pub fn moments(&self) -> &[BigRat] {
        &self.moments
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }
}

fn require_monic_parity(p: &ZPoly, n: usize) -> Result<(), OrthoError> {
    if !p.is_monic_of_degree(n) {
        return Err(OrthoError::NonMonic { n });
    }
    if !p.has_parity_of(n) {
        return Err(OrthoError::WrongParity { n });
    }
    Ok(())
}

/// First determinant condition on a monic parity family:
/// `c_{4,0} + c_{2,0} c_{3,1} - c_{2,0} c_{4,2}`; zero is necessary for
/// orthogonality.
pub fn condition1(p2: &ZPoly, p3: &ZPoly, p4: &ZPoly) -> Result<GaussRat, OrthoError> {
    require_monic_parity(p2, 2)?;
    require_monic_parity(p3, 3)?;
    require_monic_parity(p4, 4)?;
    let c20 = p2.coeff(0);
    let c31 = p3.coeff(1);
    let c40 = p4.coeff(0);
    let c42 = p4.coeff(2);
    Ok(&(&c40 + &(&c20 * &c31)) - &(&c20 * &c42))
}

/// Second determinant condition, on `P_2..P_6`:
/// `c20 c51 + c40 c53 - c20 c42 c53 + c60 - c20 c62 - c40 c64 + c20 c42 c64`.
pub fn condition2(
    p2: &ZPoly,
    p3: &ZPoly,
    p4: &ZPoly,
    p5: &ZPoly,
    p6: &ZPoly,
) -> Result<GaussRat, OrthoError> {
    require_monic_parity(p2, 2)?;
    require_monic_parity(p3, 3)?;
    require_monic_parity(p4, 4)?;
    require_monic_parity(p5, 5)?;
    require_monic_parity(p6, 6)?;
    let c20 = p2.coeff(0);
    let c40 = p4.coeff(0);
    let c42 = p4.coeff(2);
    let c51 = p5.coeff(1);
    let c53 = p5.coeff(3);
    let c60 = p6.coeff(0);
    let c62 = p6.coeff(2);
    let c64 = p6.coeff(4);
    let mut acc = &c20 * &c51;
    acc = &acc + &(&c40 * &c53);
    acc = &acc - &(&(&c20 * &c42) * &c53);
    acc = &acc + &c60;
    acc = &acc - &(&c20 * &c62);
    acc = &acc - &(&c40 * &c64);
    acc = &acc + &(&(&c20 * &c42) * &c64);
    Ok(acc)
}

/// Outcome of the three-term-recurrence screen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeTermOutcome {
    /// `z P_n = P_{n+1} + beta_n P_{n-1}` held with `beta_n > 0` for every
    /// `1 <= n < N`; the betas are returned in order.
    Success { betas: Vec<GaussRat> },
    /// First failure: either a nonvanishing remainder or a nonpositive
    /// `beta_n`.
    Failure {
        n: usize,
        beta: Option<GaussRat>,
        remainder: ZPoly,
    },
}

impl ThreeTermOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, ThreeTermOutcome::Success { .. })
    }
}

/// Attempts the recurrence `z P_n = P_{n+1} + beta_n P_{n-1}` (the `alpha`
/// term vanishes by parity) on `polys[0..=N]`, requiring every `beta_n`
/// strictly positive.
pub fn three_term_screen(polys: &[ZPoly]) -> Result<ThreeTermOutcome, OrthoError> {
    for (n, p) in polys.iter().enumerate() {
        require_monic_parity(p, n)?;
    }
    let capacity = polys.len().saturating_sub(2);
    let mut betas = Vec::with_capacity(capacity);
    for n in 1..polys.len().saturating_sub(1) {
        let shifted = &ZPoly::z() * &polys[n];
        let r = &shifted - &polys[n + 1];
        // r must be beta_n * P_{n-1}; both sides have degree n - 1 when
        // beta_n is nonzero, and P_{n-1} is monic.
        let beta = r.coeff(n - 1);
        let remainder = &r - &polys[n - 1].scale(&beta);
        let positive = beta.is_real() && beta.re().is_positive();
        if !remainder.is_zero() || !positive {
            return Ok(ThreeTermOutcome::Failure {
                n,
                beta: Some(beta),
                remainder,
            });
        }
        betas.push(beta);
    }
    Ok(ThreeTermOutcome::Success { betas })
}

/// `<P, Q> = sum_{r,s} p_r q_s mu_{r+s}`, exact.
pub fn moment_inner_product(p: &ZPoly, q: &ZPoly, mu: &MomentSeq) -> Result<GaussRat, OrthoError> {
    let needed = p.degree().unwrap_or(0) + q.degree().unwrap_or(0);
    if mu.len() <= needed {
        return Err(OrthoError::InsufficientMoments {
            needed,
            have: mu.len(),
        });
    }
    let mut acc = GaussRat::zero();
    for (r, pc) in p.coeffs().iter().enumerate() {
        if pc.is_zero() {
            continue;
        }
        for (s, qc) in q.coeffs().iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            acc = &acc + &(pc * qc).mul_rat(&mu.moments[r + s]);
        }
    }
    Ok(acc)
}

/// Monic orthogonal polynomials of a symmetric positive-definite moment
/// sequence, by the recurrence `P_{n+1} = z P_n - beta_n P_{n-1}` with
/// `beta_n = <P_n, P_n> / <P_{n-1}, P_{n-1}>`.
pub fn gram_schmidt_from_moments(mu: &MomentSeq, n_max: usize) -> Result<Vec<ZPoly>, OrthoError> {
    let mut polys = vec![ZPoly::one()];
    let mut norms = vec![moment_inner_product(&polys[0], &polys[0], mu)?];
    for n in 0..n_max {
        let next = if n == 0 {
            ZPoly::z()
        } else {
            let beta = norms[n]
                .checked_div(&norms[n - 1])
                .map_err(|_| OrthoError::DegenerateMoments(n))?;
            &(&ZPoly::z() * &polys[n]) - &polys[n - 1].scale(&beta)
        };
        let norm = moment_inner_product(&next, &next, mu)?;
        if norm.is_zero() {
            return Err(OrthoError::DegenerateMoments(n + 1));
        }
        polys.push(next);
        norms.push(norm);
    }
    Ok(polys)
}

/// Per-exponent outcome of the binomial-power scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanEntry {
    pub r: u32,
    /// `condition1` in canonical text form.
    pub cond1: String,
    /// `condition2` when the depth reaches 6.
    pub cond2: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ScanReport {
    pub depth: usize,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    /// Exponents that pass every computed condition.
    pub fn passing(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| e.pass)
            .map(|e| e.r)
            .collect()
    }
}

/// Screens the normalized families `a_{n,k} = C(n,k)^r / sum_j C(n,j)^r`
/// for `r = 1..=r_max` against `condition1` (and `condition2` when
/// `depth >= 6`).
pub fn binom_power_scan(r_max: u32, depth: usize) -> ScanReport {
    let mut report = ScanReport {
        depth,
        entries: Vec::new(),
    };
    for r in 1..=r_max {
        let family = OrderingFamily::BinomPower(r);
        let poly = |n: usize| -> ZPoly {
            pyramid_to_poly(&ordering_row(&family, n).expect("built-in family"))
        };
        let p2 = poly(2);
        let p3 = poly(3);
        let p4 = poly(4);
        let c1 = condition1(&p2, &p3, &p4).expect("normalized rows give monic parity families");
        let mut pass = c1.is_zero();
        let c2 = if depth >= 6 {
            let p5 = poly(5);
            let p6 = poly(6);
            let v = condition2(&p2, &p3, &p4, &p5, &p6)
                .expect("normalized rows give monic parity families");
            pass = pass && v.is_zero();
            Some(v.to_string())
        } else {
            None
        };
        report.entries.push(ScanEntry {
            r,
            cond1: c1.to_string(),
            cond2: c2,
            pass,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::big_rat;
    use crate::families::ordering_poly;

    fn family_polys(f: &OrderingFamily, n_max: usize) -> Vec<ZPoly> {
        (0..=n_max)
            .map(|n| ordering_poly(f, n).expect("built-in"))
            .collect()
    }

    #[test]
    fn condition1_on_named_families() {
        let w = family_polys(&OrderingFamily::Weyl, 4);
        assert!(condition1(&w[2], &w[3], &w[4]).unwrap().is_zero());

        let bj = family_polys(&OrderingFamily::BornJordan, 4);
        assert_eq!(
            condition1(&bj[2], &bj[3], &bj[4]).unwrap(),
            GaussRat::frac(-9, 20)
        );

        // The printed symmetric-family table (z^2-3/4, z^3-23/4 z,
        // z^4-43/4 z^2+105/16) evaluates to 45/16 under the formula...
        let p2 = ZPoly::from_coeff_strings(&["-3/4".into(), "0".into(), "1".into()]).unwrap();
        let p3 = ZPoly::from_coeff_strings(&["0".into(), "-23/4".into(), "0".into(), "1".into()])
            .unwrap();
        let p4_printed = ZPoly::from_coeff_strings(&[
            "105/16".into(),
            "0".into(),
            "-43/4".into(),
            "0".into(),
            "1".into(),
        ])
        .unwrap();
        assert_eq!(
            condition1(&p2, &p3, &p4_printed).unwrap(),
            GaussRat::frac(45, 16)
        );
        // ... while the family itself (true c_{4,2} = -43/2) gives -21/4;
        // either way the condition is nonzero.
        let sym = family_polys(&OrderingFamily::Symmetric, 4);
        assert_eq!(
            condition1(&sym[2], &sym[3], &sym[4]).unwrap(),
            GaussRat::frac(-21, 4)
        );
    }

    #[test]
    fn condition2_on_named_families() {
        let w = family_polys(&OrderingFamily::Weyl, 6);
        assert!(condition2(&w[2], &w[3], &w[4], &w[5], &w[6])
            .unwrap()
            .is_zero());
        let bp = family_polys(&OrderingFamily::BinomPower(2), 6);
        assert!(condition2(&bp[2], &bp[3], &bp[4], &bp[5], &bp[6])
            .unwrap()
            .is_zero());
        let sym = family_polys(&OrderingFamily::Symmetric, 6);
        assert!(!condition2(&sym[2], &sym[3], &sym[4], &sym[5], &sym[6])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn condition_preconditions_enforced() {
        let bad = ZPoly::from_coeffs(vec![GaussRat::one(), GaussRat::one()]); // degree 1
        let w = family_polys(&OrderingFamily::Weyl, 4);
        assert!(matches!(
            condition1(&bad, &w[3], &w[4]),
            Err(OrthoError::NonMonic { n: 2 })
        ));
        // monic degree 2 but with an odd coefficient: wrong parity
        let skew = ZPoly::from_coeffs(vec![GaussRat::zero(), GaussRat::one(), GaussRat::one()]);
        assert!(matches!(
            condition1(&skew, &w[3], &w[4]),
            Err(OrthoError::WrongParity { n: 2 })
        ));
    }

    #[test]
    fn weyl_three_term_screen_betas() {
        let w = family_polys(&OrderingFamily::Weyl, 5);
        match three_term_screen(&w).unwrap() {
            ThreeTermOutcome::Success { betas } => {
                // beta_n = n^2 / 4
                assert_eq!(betas[0], GaussRat::frac(1, 4));
                assert_eq!(betas[1], GaussRat::frac(1, 1));
                assert_eq!(betas[2], GaussRat::frac(9, 4));
            }
            other => panic!("expected success, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_family_fails_three_term() {
        let sym = family_polys(&OrderingFamily::Symmetric, 5);
        assert!(!three_term_screen(&sym).unwrap().is_success());
    }

    #[test]
    fn monomials_fail_at_zero_beta() {
        let polys: Vec<ZPoly> = (0..=3)
            .map(|n| ZPoly::monomial(n, GaussRat::one()))
            .collect();
        match three_term_screen(&polys).unwrap() {
            ThreeTermOutcome::Failure { n, beta, remainder } => {
                assert_eq!(n, 1);
                assert_eq!(beta, Some(GaussRat::zero()));
                assert!(remainder.is_zero());
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn sech_moments_validated_by_forced_vanishings() {
        let mu = MomentSeq::sech(8);
        assert_eq!(mu.moments()[0], big_rat(1, 1));
        assert_eq!(mu.moments()[2], big_rat(1, 4));
        assert_eq!(mu.moments()[4], big_rat(5, 16));
        // against the printed Weyl P2 and P4
        let p0 = ZPoly::one();
        let p2 = ZPoly::from_coeff_strings(&["-1/4".into(), "0".into(), "1".into()]).unwrap();
        let p4 = ZPoly::from_coeff_strings(&[
            "9/16".into(),
            "0".into(),
            "-7/2".into(),
            "0".into(),
            "1".into(),
        ])
        .unwrap();
        assert!(moment_inner_product(&p0, &p2, &mu).unwrap().is_zero());
        assert!(moment_inner_product(&p0, &p4, &mu).unwrap().is_zero());
        assert_eq!(
            moment_inner_product(&p2, &p2, &mu).unwrap(),
            GaussRat::frac(1, 4)
        );
    }

    #[test]
    fn insufficient_moments_is_an_error() {
        let mu = MomentSeq::sech(2);
        let p2 = ZPoly::monomial(2, GaussRat::one());
        assert!(matches!(
            moment_inner_product(&p2, &p2, &mu),
            Err(OrthoError::InsufficientMoments { needed: 4, have: 3 })
        ));
    }

    #[test]
    fn gram_schmidt_families_satisfy_conditions() {
        // discrete symmetric measure: nodes +-1, +-2, +-3, +-4, +-5 with
        // positive weights
        let nodes: Vec<i64> = vec![1, 2, 3, 4, 5];
        let weights: Vec<i64> = vec![3, 1, 4, 1, 5];
        let mut moments = Vec::new();
        for k in 0..=14usize {
            let mut acc = BigRat::zero();
            if k % 2 == 0 {
                for (x, w) in nodes.iter().zip(&weights) {
                    acc += big_rat(2 * w * x.pow(k as u32), 1);
                }
            }
            moments.push(acc);
        }
        let mu = MomentSeq::new(moments).unwrap();
        let polys = gram_schmidt_from_moments(&mu, 6).unwrap();
        assert!(condition1(&polys[2], &polys[3], &polys[4])
            .unwrap()
            .is_zero());
        assert!(
            condition2(&polys[2], &polys[3], &polys[4], &polys[5], &polys[6])
                .unwrap()
                .is_zero()
        );
        // and orthogonality holds under the same functional
        for n in 0..=6 {
            for m in 0..n {
                assert!(moment_inner_product(&polys[n], &polys[m], &mu)
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn scan_small_range() {
        let report = binom_power_scan(6, 6);
        assert_eq!(report.passing(), vec![1, 2]);
    }
}
