//! Permutations in one-line notation, their statistics, and the classes the
//! enumerators sum over.

mod enumerate;
mod stats;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub(crate) use enumerate::check_cap;
pub use enumerate::{enumerate, max_n, set_max_n, Enumeration, PermClass, DEFAULT_MAX_N};
pub use stats::{has_interior_double_descent, is_down_up, letter_kinds, minima, stats, LetterKind, StatProfile};

/// A permutation of `1..=n` stored as its one-line word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation(word))
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    /// 0-based index of the value `v`.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    /// Membership in PRW: the letters up to and including `1` form a strictly
    /// decreasing prefix. This is the same as asking that the first ascent, if
    /// any, starts at the letter `1`.
    pub fn is_prw(&self) -> bool {
        let w = &self.0;
        let k = match self.position_of(1) {
            Some(k) => k,
            None => return false,
        };
        w[..=k].windows(2).all(|p| p[0] > p[1])
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(w: Vec<usize>) -> Result<Self> {
        Permutation::new(w)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses space- or comma-separated values, e.g. `"5 4 1 2 7 3 6 10 9 8"`.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("`{t}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

#[cfg(test)]
pub(crate) fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}
