//! Finite linear combinations of words with Gaussian-rational coefficients
//! (elements of the free algebra on `{p, q}`).

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::GaussRat;

use super::word::Word;

/// An element of the free algebra: a map from words to nonzero
/// coefficients. Addition merges terms; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylExpr {
    terms: BTreeMap<Word, GaussRat>,
}

impl WeylExpr {
    pub fn zero() -> Self {
        WeylExpr::default()
    }

    pub fn from_word(w: Word) -> Self {
        WeylExpr::term(w, GaussRat::one())
    }

    pub fn term(w: Word, coeff: GaussRat) -> Self {
        let mut e = WeylExpr::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn scalar(c: GaussRat) -> Self {
        WeylExpr::term(Word::empty(), c)
    }

    pub fn add_term(&mut self, w: Word, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &GaussRat)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &WeylExpr) -> WeylExpr {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> WeylExpr {
        if c.is_zero() {
            return WeylExpr::zero();
        }
        WeylExpr {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn sub(&self, other: &WeylExpr) -> WeylExpr {
        self.add(&other.scale(&-GaussRat::one()))
    }

    /// Product in the free algebra: concatenation of words, distributed.
    pub fn mul(&self, other: &WeylExpr) -> WeylExpr {
        let mut out = WeylExpr::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// All words balanced?
    pub fn is_balanced(&self) -> bool {
        self.terms.keys().all(Word::is_balanced)
    }

    /// First unbalanced word, if any.
    pub fn unbalanced_word(&self) -> Option<&Word> {
        self.terms.keys().find(|w| !w.is_balanced())
    }

    /// Maximum weight over (balanced) words; zero for the zero element.
    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    /// The adjoint: each word reversed, each coefficient conjugated.
    pub fn adjoint(&self) -> WeylExpr {
        WeylExpr {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.conj()))
                .collect(),
        }
    }
}

impl fmt::Display for WeylExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if c.is_one() && !w.is_empty() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::word::Letter;

    #[test]
    fn terms_merge_and_cancel() {
        let w = Word::qp_monomial(1, 1);
        let mut e = WeylExpr::term(w.clone(), GaussRat::from_int(2));
        e.add_term(w.clone(), GaussRat::from_int(-2));
        assert!(e.is_zero());
    }

    #[test]
    fn adjoint_reverses_and_conjugates() {
        // (pq)* = qp
        let pq = Word::new(vec![Letter::P, Letter::Q]);
        let e = WeylExpr::from_word(pq);
        let adj = e.adjoint();
        let expect = WeylExpr::from_word(Word::qp_monomial(1, 1));
        assert_eq!(adj, expect);

        let f = WeylExpr::term(Word::qp_monomial(0, 1), GaussRat::frac_i(1, 2));
        assert_eq!(
            f.adjoint(),
            WeylExpr::term(Word::qp_monomial(0, 1), GaussRat::frac_i(-1, 2))
        );
    }

    #[test]
    fn product_concatenates() {
        let a = WeylExpr::from_word(Word::qp_monomial(1, 0));
        let b = WeylExpr::from_word(Word::qp_monomial(0, 2));
        let ab = a.mul(&b);
        assert_eq!(ab, WeylExpr::from_word(Word::qp_monomial(1, 2)));
    }
}
