//! Words over the two-letter alphabet `{p, q}`.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    P,
    Q,
}

/// A word in the free monoid on `{p, q}`. Multiplication is concatenation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Balanced: equally many `p`'s and `q`'s.
    pub fn is_balanced(&self) -> bool {
        self.count(Letter::P) == self.count(Letter::Q)
    }

    /// Weight of a balanced word: the number of `p`'s.
    pub fn weight(&self) -> usize {
        self.count(Letter::P)
    }

    /// Palindrome: reads the same in both directions.
    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|k| self.letters[k] == self.letters[n - 1 - k])
    }

    pub fn reversed(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, times: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// `q^a p^b` (normal-ordered monomial).
    pub fn qp_monomial(a: usize, b: usize) -> Self {
        let mut letters = vec![Letter::Q; a];
        letters.extend(std::iter::repeat_n(Letter::P, b));
        Word { letters }
    }

    /// The basis word `q^k p^n q^{n-k}`.
    pub fn basis_word(n: usize, k: usize) -> Self {
        let mut letters = vec![Letter::Q; k];
        letters.extend(std::iter::repeat_n(Letter::P, n));
        letters.extend(std::iter::repeat_n(Letter::Q, n - k));
        Word { letters }
    }

    /// The mirrored basis word `p^{n-k} q^n p^k`.
    pub fn basis_word_mirror(n: usize, k: usize) -> Self {
        let mut letters = vec![Letter::P; n - k];
        letters.extend(std::iter::repeat_n(Letter::Q, n));
        letters.extend(std::iter::repeat_n(Letter::P, k));
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // run-length form, e.g. q^2 p^3 q
        let mut run: Option<(Letter, usize)> = None;
        let mut pieces = Vec::new();
        for &l in &self.letters {
            match run {
                Some((r, c)) if r == l => run = Some((r, c + 1)),
                Some((r, c)) => {
                    pieces.push((r, c));
                    run = Some((l, 1));
                }
                None => run = Some((l, 1)),
            }
        }
        if let Some(rc) = run {
            pieces.push(rc);
        }
        let text: Vec<String> = pieces
            .into_iter()
            .map(|(l, c)| {
                let ch = match l {
                    Letter::P => "p",
                    Letter::Q => "q",
                };
                if c == 1 {
                    ch.to_string()
                } else {
                    format!("{ch}^{c}")
                }
            })
            .collect();
        write!(f, "{}", text.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
