//! The one-dimensional Weyl algebra on generators `R`, `D` with
//! `RD - DR = 1`, represented on the commutative polynomial ring `C[x, y]`
//! by
//!
//! ```text
//! R(x^j y^k) = x^{j+1} y^k
//! D(x^j y^k) = -j x^{j-1} y^k + x^j y^{k+1}
//! ```
//!
//! The sign on the degree-lowering term is forced by the relation: under
//! `R = p = x` and `D = iq = -d/dx` one has `RD - DR = x(-d/dx) - (-d/dx)x
//! = +1`, and the same holds for the bivariate extension above.
//!
//! Applying an operator expression to the constant `1` recovers its normal
//! coordinates: `R^j D^k (1) = x^j y^k`, which makes linear independence of
//! the `R^j D^k` (and operator identities such as
//! `D^k R^k = prod_j (DR - j + 1)`) checkable by direct evaluation.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::GaussRat;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RdLetter {
    R,
    D,
}

/// A word in the free monoid on `{R, D}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct RdWord(pub Vec<RdLetter>);

impl RdWord {
    /// `R^j D^k`.
    pub fn normal(j: usize, k: usize) -> Self {
        let mut letters = vec![RdLetter::R; j];
        letters.extend(std::iter::repeat_n(RdLetter::D, k));
        RdWord(letters)
    }
}

/// Linear combination of `{R, D}` words.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct RdExpr {
    terms: BTreeMap<RdWord, GaussRat>,
}

impl RdExpr {
    pub fn zero() -> Self {
        RdExpr::default()
    }

    pub fn one() -> Self {
        RdExpr::from_word(RdWord::default())
    }

    pub fn from_word(w: RdWord) -> Self {
        RdExpr::term(w, GaussRat::one())
    }

    pub fn term(w: RdWord, c: GaussRat) -> Self {
        let mut e = RdExpr::zero();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: RdWord, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(GaussRat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            let dead: Vec<RdWord> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &RdExpr) -> RdExpr {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &RdExpr) -> RdExpr {
        self.add(&other.scale(&-GaussRat::one()))
    }

    pub fn scale(&self, c: &GaussRat) -> RdExpr {
        if c.is_zero() {
            return RdExpr::zero();
        }
        RdExpr {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Operator composition: concatenation of words.
    pub fn mul(&self, other: &RdExpr) -> RdExpr {
        let mut out = RdExpr::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut letters = u.0.clone();
                letters.extend_from_slice(&v.0);
                out.add_term(RdWord(letters), a * b);
            }
        }
        out
    }
}

/// Element of `C[x, y]`, keyed by `(j, k)` for `x^j y^k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(usize, usize), GaussRat>,
}

impl BivarPoly {
    pub fn one() -> Self {
        BivarPoly::monomial(0, 0, GaussRat::one())
    }

    pub fn monomial(j: usize, k: usize, c: GaussRat) -> Self {
        let mut p = BivarPoly::default();
        p.add_term(j, k, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: usize, k: usize) -> GaussRat {
        self.terms
            .get(&(j, k))
            .cloned()
            .unwrap_or_else(GaussRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GaussRat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, j: usize, k: usize, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((j, k)).or_insert_with(GaussRat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(j, k));
        }
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((j, k), c)| format!("({c}) x^{j} y^{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn apply_letter(letter: RdLetter, p: &BivarPoly) -> BivarPoly {
    let mut out = BivarPoly::default();
    for (&(j, k), c) in p.terms() {
        match letter {
            RdLetter::R => out.add_term(j + 1, k, c.clone()),
            RdLetter::D => {
                if j > 0 {
                    out.add_term(j - 1, k, c.mul_rat(&crate::exact::big_rat(-(j as i64), 1)));
                }
                out.add_term(j, k + 1, c.clone());
            }
        }
    }
    out
}

/// Applies an operator expression to a polynomial (letters act right to
/// left).
pub fn apply(e: &RdExpr, p: &BivarPoly) -> BivarPoly {
    let mut out = BivarPoly::default();
    for (word, c) in &e.terms {
        let mut acc = p.clone();
        for &letter in word.0.iter().rev() {
            acc = apply_letter(letter, &acc);
        }
        for (&(j, k), a) in acc.terms() {
            out.add_term(j, k, a * c);
        }
    }
    out
}

/// The image of the constant `1` under the operator expression.
pub fn apply_to_one(e: &RdExpr) -> BivarPoly {
    apply(e, &BivarPoly::one())
}

/// Checks that `e` annihilates every monomial of total degree `<= max_degree`;
/// returns the first non-annihilated monomial and its image otherwise.
pub fn zero_operator_witness(e: &RdExpr, max_degree: usize) -> Option<((usize, usize), BivarPoly)> {
    for d in 0..=max_degree {
        for j in 0..=d {
            let k = d - j;
            let image = apply(e, &BivarPoly::monomial(j, k, GaussRat::one()));
            if !image.is_zero() {
                return Some(((j, k), image));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::rising_factorial;

    fn rd() -> RdExpr {
        RdExpr::from_word(RdWord(vec![RdLetter::R, RdLetter::D]))
    }

    fn dr() -> RdExpr {
        RdExpr::from_word(RdWord(vec![RdLetter::D, RdLetter::R]))
    }

    #[test]
    fn normal_words_hit_monomials() {
        for j in 0..=4usize {
            for k in 0..=4usize {
                let image = apply_to_one(&RdExpr::from_word(RdWord::normal(j, k)));
                assert_eq!(image, BivarPoly::monomial(j, k, GaussRat::one()));
            }
        }
    }

    #[test]
    fn commutation_relation_on_monomials() {
        // (RD - DR)(x^j y^k) = x^j y^k
        let comm = rd().sub(&dr()).sub(&RdExpr::one());
        assert_eq!(zero_operator_witness(&comm, 5), None);
    }

    #[test]
    fn dk_rk_product_identity() {
        // D^k R^k = prod_{j=1..k} (DR - j + 1), checked as operators for k <= 3
        for k in 1..=3usize {
            let mut lhs_letters = vec![RdLetter::D; k];
            lhs_letters.extend(std::iter::repeat_n(RdLetter::R, k));
            let lhs = RdExpr::from_word(RdWord(lhs_letters));
            let mut rhs = RdExpr::one();
            for j in 1..=k {
                let factor = dr().add(&RdExpr::one().scale(&GaussRat::from_int(1 - j as i64)));
                rhs = rhs.mul(&factor);
            }
            assert_eq!(zero_operator_witness(&lhs.sub(&rhs), 4), None, "k={k}");
        }
    }

    #[test]
    fn rk_dn_expansion() {
        // R^k D^n = sum_j C(k,j) (n-j+1)_j D^{n-j} R^{k-j}
        for k in 1..=3usize {
            for n in 1..=3usize {
                let mut lhs_letters = vec![RdLetter::R; k];
                lhs_letters.extend(std::iter::repeat_n(RdLetter::D, n));
                let lhs = RdExpr::from_word(RdWord(lhs_letters));
                let mut rhs = RdExpr::zero();
                for j in 0..=k.min(n) {
                    let mut letters = vec![RdLetter::D; n - j];
                    letters.extend(std::iter::repeat_n(RdLetter::R, k - j));
                    let coeff = GaussRat::from_rat(crate::exact::BigRat::from_integer(
                        crate::comb::binomial(k as i64, j as i64),
                    )) * rising_factorial(&GaussRat::from_int((n - j) as i64 + 1), j);
                    rhs.add_term(RdWord(letters), coeff);
                }
                assert_eq!(
                    zero_operator_witness(&lhs.sub(&rhs), 4),
                    None,
                    "k={k} n={n}"
                );
            }
        }
    }
}
