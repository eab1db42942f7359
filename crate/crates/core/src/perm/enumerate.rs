use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use super::{has_interior_double_descent, is_down_up, Permutation};
use crate::{Error, Result};

pub const DEFAULT_MAX_N: usize = 10;

// 0 = not yet initialised from the environment.
static MAX_N: AtomicUsize = AtomicUsize::new(0);

/// Current enumeration cap: `EULAB_MAX_N` if set, otherwise [`DEFAULT_MAX_N`],
/// unless overridden with [`set_max_n`].
pub fn max_n() -> usize {
    match MAX_N.load(Ordering::Relaxed) {
        0 => {
            let cap = std::env::var("EULAB_MAX_N")
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .filter(|&v: &usize| v > 0)
                .unwrap_or(DEFAULT_MAX_N);
            let _ = MAX_N.compare_exchange(0, cap, Ordering::Relaxed, Ordering::Relaxed);
            MAX_N.load(Ordering::Relaxed)
        }
        cap => cap,
    }
}

pub fn set_max_n(cap: usize) {
    MAX_N.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    let cap = max_n();
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PermClass {
    /// All of `S_n`.
    #[serde(rename = "SYM")]
    Sym,
    /// Letters before `1` strictly decreasing.
    #[serde(rename = "PRW")]
    Prw,
    /// No unpadded double descent `σ_{i-1} > σ_i > σ_{i+1}`, `1 < i < n`.
    #[serde(rename = "NDD_INTERIOR")]
    NddInterior,
    /// Down-up alternating.
    #[serde(rename = "ALT_DOWN_UP")]
    AltDownUp,
}

impl PermClass {
    pub const ALL: [PermClass; 4] = [
        PermClass::Sym,
        PermClass::Prw,
        PermClass::NddInterior,
        PermClass::AltDownUp,
    ];

    pub fn contains(self, p: &Permutation) -> bool {
        match self {
            PermClass::Sym => true,
            PermClass::Prw => p.is_prw(),
            PermClass::NddInterior => !has_interior_double_descent(p),
            PermClass::AltDownUp => is_down_up(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PermClass::Sym => "SYM",
            PermClass::Prw => "PRW",
            PermClass::NddInterior => "NDD_INTERIOR",
            PermClass::AltDownUp => "ALT_DOWN_UP",
        }
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PermClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "SYM" | "S" => Ok(PermClass::Sym),
            "PRW" => Ok(PermClass::Prw),
            "NDD_INTERIOR" | "NDD" => Ok(PermClass::NddInterior),
            "ALT_DOWN_UP" | "ALT" => Ok(PermClass::AltDownUp),
            _ => Err(Error::InvalidParameter(format!("unknown permutation class `{s}`"))),
        }
    }
}

/// Lexicographic stream over the members of a class.
#[derive(Clone, Debug)]
pub struct Enumeration {
    class: PermClass,
    word: Vec<usize>,
    done: bool,
}

impl Enumeration {
    fn advance(&mut self) {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            self.done = true;
            return;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] > w[i] {
            i -= 1;
        }
        if i == 0 {
            self.done = true;
            return;
        }
        let mut j = n - 1;
        while w[j] < w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

impl Iterator for Enumeration {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        while !self.done {
            let p = Permutation::from_word_unchecked(self.word.clone());
            self.advance();
            if self.class.contains(&p) {
                return Some(p);
            }
        }
        None
    }
}

/// Every member of `class` of length `n`, each once, in lexicographic order.
pub fn enumerate(class: PermClass, n: usize) -> Result<Enumeration> {
    if n == 0 && class != PermClass::Sym {
        return Err(Error::InvalidParameter(format!("{class} needs n >= 1")));
    }
    check_cap(n)?;
    Ok(Enumeration {
        class,
        word: (1..=n).collect(),
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{perm, stats};
    use crate::poly::MultiPoly;

    fn words(class: PermClass, n: usize) -> Vec<String> {
        enumerate(class, n)
            .unwrap()
            .map(|p| p.word().iter().map(|v| v.to_string()).collect())
            .collect()
    }

    #[test]
    fn prw_small_listings() {
        assert_eq!(words(PermClass::Prw, 3), ["123", "132", "213", "312", "321"]);
        let mut listed: Vec<&str> = "1234 1243 1324 1342 2134 2143 3124 3142 3214 4123 4132 4213 4312 4321 1423 1432"
            .split(' ')
            .collect();
        listed.sort();
        assert_eq!(words(PermClass::Prw, 4), listed);
    }

    #[test]
    fn alternating_four() {
        assert_eq!(words(PermClass::AltDownUp, 4), ["2143", "3142", "3241", "4132", "4231"]);
    }

    #[test]
    fn empty_symmetric_group() {
        let all: Vec<_> = enumerate(PermClass::Sym, 0).unwrap().collect();
        assert_eq!(all, vec![perm("")]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate(PermClass::Sym, 11).err(),
            Some(Error::CapExceeded { n: 11, cap: 10 })
        );
        assert!(enumerate(PermClass::Prw, 0).is_err());
    }

    #[test]
    fn lexicographic_and_distinct() {
        let all: Vec<_> = enumerate(PermClass::Sym, 5).unwrap().collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn prw_counts_match_binomial_eulerian_at_one() {
        for n in 0..=8u64 {
            let expected = 1 + (1..=n).map(|m| binom(n, m) * (1..=m).product::<u64>()).sum::<u64>();
            assert_eq!(
                enumerate(PermClass::Prw, n as usize + 1).unwrap().count() as u64,
                expected
            );
        }
    }

    #[test]
    fn lrmin_gives_rising_factorial() {
        for n in 1..=8 {
            let mut counts = vec![0i64; n + 1];
            for p in enumerate(PermClass::Sym, n).unwrap() {
                counts[stats(&p).lrmin] += 1;
            }
            let gf = MultiPoly::from_terms(counts.iter().enumerate().map(|(k, &c)| {
                (
                    crate::poly::rational(c, 1),
                    crate::Monomial::from_pairs([("al", k as i64)]),
                )
            }));
            let mut rising = MultiPoly::one();
            for i in 0..n {
                rising = &rising * &(&MultiPoly::alpha() + &MultiPoly::int(i as i64));
            }
            assert_eq!(gf, rising, "n = {n}");
        }
    }
}
