//! Enumerator polynomials and the registry of identity checks.
//!
//! Every enumerator is an exact sum over a class of permutations. Sums are
//! accumulated as integer counts keyed by exponent vectors and only turned
//! into a [`MultiPoly`] at the end.

mod checks;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::perm::{enumerate, stats, PermClass, Permutation, StatProfile};
use crate::poly::{Monomial, MultiPoly, Rational, ALPHA};
use crate::{Error, Result};

pub use checks::{registry, run_all, verify, CheckReport, CheckSpec, Params, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumeratorKind {
    /// `Ã_n(x,y|α)`: PRW_{n+1}, `x^des y^asc α^st`.
    #[serde(rename = "BSE")]
    Bse,
    /// `Ã_n(x,y,z|α)`: PRW_{n+1}, `x^(des-lrmin+1) y^asc z^(lrmin-1) α^st`.
    #[serde(rename = "BSE_Z")]
    BseZ,
    /// `P̃_n(u1..u5|α)`: PRW_{n+1}, `(u1u2)^M u3^da u4^internal_dd u5^lrmin_dd α^st`.
    #[serde(rename = "PTILDE")]
    Ptilde,
    /// `A_m(x,y|α)`: S_m, `x^des y^asc α^st`.
    #[serde(rename = "SE")]
    Se,
    /// `(u1u2)^M u3^da u4^dd α^st` over permutations of length `index` in the class.
    #[serde(rename = "REFINED")]
    Refined(PermClass),
    /// `A(Π;x,y|α)`: `x^des y^asc α^st` over permutations of length `index` in the class.
    #[serde(rename = "GENERAL")]
    General(PermClass),
}

impl FromStr for EnumeratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "bse" => Ok(EnumeratorKind::Bse),
            "bse-z" => Ok(EnumeratorKind::BseZ),
            "ptilde" => Ok(EnumeratorKind::Ptilde),
            "se" => Ok(EnumeratorKind::Se),
            _ => Err(Error::InvalidParameter(format!("unknown enumerator `{s}`"))),
        }
    }
}

impl fmt::Display for EnumeratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumeratorKind::Bse => write!(f, "BSE"),
            EnumeratorKind::BseZ => write!(f, "BSE_Z"),
            EnumeratorKind::Ptilde => write!(f, "PTILDE"),
            EnumeratorKind::Se => write!(f, "SE"),
            EnumeratorKind::Refined(c) => write!(f, "REFINED[{c}]"),
            EnumeratorKind::General(c) => write!(f, "GENERAL[{c}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumerator {
    pub kind: EnumeratorKind,
    pub index: usize,
    pub value: MultiPoly,
}

/// Sums `Π vars[i]^exps[i]` over a stream of permutations.
pub(crate) fn accumulate<'a>(
    vars: &[&str],
    perms: impl Iterator<Item = Permutation>,
    mut exps: impl FnMut(&StatProfile) -> Vec<i64> + 'a,
) -> MultiPoly {
    let mut counts: HashMap<Vec<i64>, i64> = HashMap::new();
    for p in perms {
        *counts.entry(exps(&stats(&p))).or_default() += 1;
    }
    MultiPoly::from_terms(counts.into_iter().map(|(e, c)| {
        (
            Rational::from_integer(c.into()),
            Monomial::from_pairs(vars.iter().copied().zip(e)),
        )
    }))
}

fn st(s: &StatProfile) -> i64 {
    s.st() as i64
}

pub fn build(kind: EnumeratorKind, index: usize) -> Result<Enumerator> {
    let value = match kind {
        EnumeratorKind::Bse => accumulate(&["x", "y", ALPHA], enumerate(PermClass::Prw, index + 1)?, |s| {
            vec![s.des as i64, s.asc as i64, st(s)]
        }),
        EnumeratorKind::BseZ => accumulate(&["x", "y", "z", ALPHA], enumerate(PermClass::Prw, index + 1)?, |s| {
            vec![
                s.des as i64 - s.lrmin as i64 + 1,
                s.asc as i64,
                s.lrmin as i64 - 1,
                st(s),
            ]
        }),
        EnumeratorKind::Ptilde => accumulate(
            &["u1", "u2", "u3", "u4", "u5", ALPHA],
            enumerate(PermClass::Prw, index + 1)?,
            |s| {
                let m = s.peaks as i64;
                vec![
                    m,
                    m,
                    s.double_asc as i64,
                    s.internal_dd as i64,
                    s.lrmin_dd as i64,
                    st(s),
                ]
            },
        ),
        EnumeratorKind::Se => {
            if index == 0 {
                return Err(Error::InvalidParameter("SE needs m >= 1".into()));
            }
            accumulate(&["x", "y", ALPHA], enumerate(PermClass::Sym, index)?, |s| {
                vec![s.des as i64, s.asc as i64, st(s)]
            })
        }
        EnumeratorKind::Refined(class) => accumulate(&["u1", "u2", "u3", "u4", ALPHA], enumerate(class, index)?, |s| {
            let m = s.peaks as i64;
            vec![m, m, s.double_asc as i64, s.double_desc as i64, st(s)]
        }),
        EnumeratorKind::General(class) => accumulate(&["x", "y", ALPHA], enumerate(class, index)?, |s| {
            vec![s.des as i64, s.asc as i64, st(s)]
        }),
    };
    Ok(Enumerator { kind, index, value })
}

/// `Ã_n(x,y|α)`.
pub fn bse(n: usize) -> Result<MultiPoly> {
    Ok(build(EnumeratorKind::Bse, n)?.value)
}

/// Row `⟨m, k⟩_α` for `k = 0..=m`: sums of `α^rlmin` over `S_m` by number of ascents.
pub fn stirling_eulerian_row(m: usize) -> Result<Vec<MultiPoly>> {
    let mut counts = vec![vec![0i64; m + 1]; m + 1];
    for p in enumerate(PermClass::Sym, m)? {
        let s = stats(&p);
        counts[s.asc][s.rlmin] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|row| {
            MultiPoly::from_terms(row.into_iter().enumerate().map(|(e, c)| {
                (
                    Rational::from_integer(c.into()),
                    Monomial::from_pairs([(ALPHA, e as i64)]),
                )
            }))
        })
        .collect())
}

/// Stirling-Eulerian number `⟨m, k⟩_α`; `⟨0, 0⟩_α = 1` and empty sums are zero.
pub fn stirling_eulerian_number(m: usize, k: usize) -> Result<MultiPoly> {
    let row = stirling_eulerian_row(m)?;
    Ok(row.get(k).cloned().unwrap_or_else(MultiPoly::zero))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Euler (zigzag) numbers from `2E_{n+1} = Σ_k C(n,k) E_k E_{n-k}`, `E_0 = E_1 = 1`.
pub fn euler_number(n: usize) -> BigInt {
    let mut e: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for m in 1..n {
        let s: BigInt = (0..=m).map(|k| binomial(m, k) * &e[k] * &e[m - k]).sum();
        e.push(s / 2);
    }
    e.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_enumerators() {
        assert_eq!(bse(1).unwrap(), p("al*(x+y)"));
        assert_eq!(bse(2).unwrap(), p("al^2*(x+y)^2 + al*x*y"));
        assert_eq!(bse(3).unwrap(), p("al^3*(x+y)^3 + (al+3*al^2)*x*y*(x+y)"));
        assert_eq!(bse(0).unwrap(), p("1"));
        assert_eq!(build(EnumeratorKind::BseZ, 1).unwrap().value, p("al*(y+z)"));
    }

    #[test]
    fn se_three_at_minus_one_one() {
        let se3 = build(EnumeratorKind::Se, 3).unwrap().value;
        assert_eq!(se3, p("al^2*(x+y)^2 + 2*al*x*y"));
        let at = se3
            .specialize(&[("x", rational(-1, 1)), ("y", rational(1, 1))])
            .unwrap();
        assert_eq!(at, p("-2*al"));
    }

    #[test]
    fn ptilde_uses_refined_minima_counts() {
        for n in 0..=6 {
            let expected = accumulate(
                &["u1", "u2", "u3", "u4", "u5", ALPHA],
                enumerate(PermClass::Prw, n + 1).unwrap(),
                |s| {
                    let m = s.peaks as i64;
                    let l = s.lrmin as i64;
                    vec![m, m, s.double_asc as i64, s.double_desc as i64 - l + 1, l - 1, st(s)]
                },
            );
            assert_eq!(build(EnumeratorKind::Ptilde, n).unwrap().value, expected);
        }
    }

    #[test]
    fn bse_at_one_counts_prw() {
        for n in 0..=8 {
            let v = bse(n).unwrap();
            assert!(v.is_homogeneous_in(&["x", "y"]));
            let expected: BigInt = BigInt::one()
                + (1..=n)
                    .map(|m| binomial(n, m) * (1..=m).product::<usize>())
                    .sum::<BigInt>();
            assert_eq!(v.coefficient_sum(), Rational::from_integer(expected));
        }
    }

    #[test]
    fn stirling_eulerian_examples() {
        assert_eq!(stirling_eulerian_number(0, 0).unwrap(), p("1"));
        assert_eq!(stirling_eulerian_number(2, 1).unwrap(), p("al^2"));
        assert_eq!(stirling_eulerian_number(3, 1).unwrap(), p("3*al^2 + al"));
        assert!(stirling_eulerian_number(3, 5).unwrap().is_zero());
    }

    #[test]
    fn stirling_eulerian_at_one_is_eulerian() {
        for m in 1..=8 {
            // classical Eulerian numbers by counting descents
            let mut eulerian = vec![0i64; m];
            for q in enumerate(PermClass::Sym, m).unwrap() {
                eulerian[stats(&q).des] += 1;
            }
            let row = stirling_eulerian_row(m).unwrap();
            for k in 0..m {
                let at_one = row[k].specialize(&[(ALPHA, rational(1, 1))]).unwrap();
                assert_eq!(at_one, MultiPoly::int(eulerian[k]), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn euler_numbers() {
        let expected = [1, 1, 1, 2, 5, 16, 61, 272, 1385];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(euler_number(n), BigInt::from(e));
        }
        for n in 1..=8 {
            assert_eq!(
                BigInt::from(enumerate(PermClass::AltDownUp, n).unwrap().count()),
                euler_number(n)
            );
        }
    }
}
