use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Name used internally for the weight variable alpha.
pub const ALPHA: &str = "al";

/// A Laurent monomial: variable names with nonzero integer exponents, sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    from = "std::collections::BTreeMap<String, i64>",
    into = "std::collections::BTreeMap<String, i64>"
)]
pub struct Monomial(Vec<(String, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names add up.
    pub fn from_pairs<S: AsRef<str>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Self {
        let mut m = Monomial::one();
        for (name, e) in pairs {
            m.mul_var(name.as_ref(), e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, name: &str) -> i64 {
        match self.0.binary_search_by(|(v, _)| v.as_str().cmp(name)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.0.iter().any(|(_, e)| *e < 0)
    }

    /// Multiplies in `name^e` in place.
    pub fn mul_var(&mut self, name: &str, e: i64) {
        if e == 0 {
            return;
        }
        match self.0.binary_search_by(|(v, _)| v.as_str().cmp(name)) {
            Ok(i) => {
                self.0[i].1 += e;
                if self.0[i].1 == 0 {
                    self.0.remove(i);
                }
            }
            Err(i) => self.0.insert(i, (name.to_string(), e)),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a.1 + b.1;
                    if e != 0 {
                        out.push((a.0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * k)).collect())
    }

    /// Drops the listed variables.
    pub fn without(&self, names: &[&str]) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|(v, _)| !names.contains(&v.as_str()))
                .cloned()
                .collect(),
        )
    }

    /// Exchanges the exponents of two variables.
    pub fn swap(&self, a: &str, b: &str) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(v, e)| {
            let v = if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            };
            (v, e)
        }))
    }

    /// Graded lexicographic order: higher total degree first, then by exponents of
    /// variables in name order, larger exponent first.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        other.total_degree().cmp(&self.total_degree()).then_with(|| {
            let mut names: Vec<&str> = self.0.iter().chain(&other.0).map(|(v, _)| v.as_str()).collect();
            names.sort_unstable();
            names.dedup();
            for v in names {
                match other.exponent(v).cmp(&self.exponent(v)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl From<std::collections::BTreeMap<String, i64>> for Monomial {
    fn from(map: std::collections::BTreeMap<String, i64>) -> Self {
        Monomial::from_pairs(map)
    }
}

impl From<Monomial> for std::collections::BTreeMap<String, i64> {
    fn from(m: Monomial) -> Self {
        m.0.into_iter().collect()
    }
}

pub(crate) fn display_name(v: &str) -> &str {
    if v == ALPHA {
        "α"
    } else {
        v
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", display_name(v))?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zero_exponents() {
        let m = Monomial::from_pairs([("x", 1), ("t", -1), ("t", 1), ("y", 0)]);
        assert_eq!(m, Monomial::var("x"));
        assert_eq!(m.mul(&Monomial::var("x").pow(-1)), Monomial::one());
    }

    #[test]
    fn grlex_puts_higher_degree_first() {
        let x2 = Monomial::from_pairs([("x", 2)]);
        let xy = Monomial::from_pairs([("x", 1), ("y", 1)]);
        let y2 = Monomial::from_pairs([("y", 2)]);
        let x = Monomial::var("x");
        assert_eq!(x2.grlex_cmp(&xy), Ordering::Less);
        assert_eq!(xy.grlex_cmp(&y2), Ordering::Less);
        assert_eq!(y2.grlex_cmp(&x), Ordering::Less);
    }
}
