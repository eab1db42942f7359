//! Gamma-expansions of symmetric homogeneous polynomials in `x, y`.
//!
//! A polynomial `p(x, y)` that is homogeneous of degree `n` and symmetric under
//! `x <-> y` has a unique expansion `Σ_k γ_k (xy)^k (x+y)^(n-2k)`, with the
//! `γ_k` polynomials in the remaining variables (here α).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::perm::{enumerate, has_interior_double_descent, stats, PermClass};
use crate::poly::{Monomial, MultiPoly, Rational, ALPHA};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaExpansion {
    pub n: usize,
    /// Dense list `γ_0..=γ_{⌊n/2⌋}`.
    pub gamma: Vec<MultiPoly>,
}

impl GammaExpansion {
    /// `Σ_k γ_k (xy)^k (x+y)^(n-2k)`.
    pub fn reconstruct(&self) -> MultiPoly {
        self.reconstruct_with(&"x*y".parse().unwrap(), &"x+y".parse().unwrap())
    }

    /// `Σ_k γ_k · prod^k · sum^(n-2k)` for arbitrary replacements of `xy` and `x+y`.
    pub fn reconstruct_with(&self, prod: &MultiPoly, sum: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, g) in self.gamma.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let basis = &prod.pow(k as i64).expect("k >= 0") * &sum.pow((self.n - 2 * k) as i64).expect("n >= 2k");
            out += g * &basis;
        }
        out
    }

    /// Every γ_k has nonnegative integer coefficients.
    pub fn is_positive(&self) -> bool {
        self.gamma.iter().all(|g| g.has_nonneg_integer_coefficients())
    }

    /// Specializes α to a value in every γ_k.
    pub fn at_alpha(&self, value: Rational) -> Result<Vec<Rational>> {
        self.gamma
            .iter()
            .map(|g| {
                g.specialize(&[(ALPHA, value.clone())])?
                    .as_constant()
                    .ok_or_else(|| Error::InvalidParameter(format!("γ coefficient {g} depends on more than α")))
            })
            .collect()
    }
}

impl fmt::Display for GammaExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gamma.iter().map(|g| g.to_string()).collect();
        write!(f, "n={} gamma=[{}]", self.n, parts.join(", "))
    }
}

/// Peels off `γ_k (xy)^k (x+y)^(n-2k)` for `k = 0, 1, ...`, reading each `γ_k`
/// from the coefficient of `x^k y^(n-k)` in the residual. The residual must
/// vanish at the end.
pub fn gamma_expand(p: &MultiPoly) -> Result<GammaExpansion> {
    gamma_expand_in(p, "x", "y")
}

/// [`gamma_expand`] with respect to an arbitrary pair of variables.
pub fn gamma_expand_in(p: &MultiPoly, x: &str, y: &str) -> Result<GammaExpansion> {
    let pair = format!("{{{x}, {y}}}");
    let degree = if p.is_zero() {
        0
    } else {
        p.homogeneous_degree(&[x, y])
            .ok_or_else(|| Error::NotHomogeneous(pair.clone()))?
    };
    if degree < 0 || p.min_degree_in(x).unwrap_or(0) < 0 || p.min_degree_in(y).unwrap_or(0) < 0 {
        return Err(Error::NotHomogeneous(pair));
    }
    if !p.is_symmetric_in(x, y) {
        return Err(Error::NotSymmetric(x.into(), y.into()));
    }
    let n = degree as usize;
    let prod = MultiPoly::from(Monomial::from_pairs([(x, 1), (y, 1)]));
    let sum = &MultiPoly::var(x) + &MultiPoly::var(y);
    let mut residual = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let g = residual.coefficient(&[(x, k as i64), (y, (n - k) as i64)]);
        if !g.is_zero() {
            let basis = &prod.pow(k as i64)? * &sum.pow((n - 2 * k) as i64)?;
            residual -= &(&g * &basis);
        }
        gamma.push(g);
    }
    if !residual.is_zero() {
        return Err(Error::NonzeroResidual(residual.to_string()));
    }
    Ok(GammaExpansion { n, gamma })
}

/// The three combinatorial descriptions of the γ-coefficients of `Ã_n(x,y|α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaInterp {
    /// PRW_{n+1}, `k` ascents, no (padded) double ascents; weight `α^(lrmin+rlmin-2)`.
    Gamma1,
    /// PRW_{n+1}, `k` peaks, weight `α^(lrmin+rlmin-2)`, scaled by `2^(2k-n)`.
    Gamma2,
    /// S_n, `k` descents, no interior double descent; weight `α^rlmin`.
    Gamma3,
}

impl FromStr for GammaInterp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "GAMMA1" => Ok(GammaInterp::Gamma1),
            "2" | "GAMMA2" => Ok(GammaInterp::Gamma2),
            "3" | "GAMMA3" => Ok(GammaInterp::Gamma3),
            _ => Err(Error::InvalidParameter(format!("unknown interpretation `{s}`"))),
        }
    }
}

fn alpha_poly(counts: &[i64]) -> MultiPoly {
    MultiPoly::from_terms(counts.iter().enumerate().map(|(e, &c)| {
        (
            Rational::from_integer(c.into()),
            Monomial::from_pairs([(ALPHA, e as i64)]),
        )
    }))
}

/// Unscaled Γ⁽²⁾ sums: for each `k`, Σ over PRW_{n+1} with `k` peaks of `α^st`.
pub fn gamma2_raw(n: usize) -> Result<Vec<MultiPoly>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut counts = vec![vec![0i64; 2 * n + 3]; n / 2 + 1];
    for p in enumerate(PermClass::Prw, n + 1)? {
        let s = stats(&p);
        counts[s.peaks][s.st()] += 1;
    }
    Ok(counts.iter().map(|c| alpha_poly(c)).collect())
}

/// γ_0..γ_{⌊n/2⌋} of `Ã_n(x,y|α)` computed from the chosen class of permutations.
pub fn gamma_from_class(interp: GammaInterp, n: usize) -> Result<Vec<MultiPoly>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let half = n / 2;
    let mut counts = vec![vec![0i64; 2 * n + 3]; half + 1];
    match interp {
        GammaInterp::Gamma1 => {
            for p in enumerate(PermClass::Prw, n + 1)? {
                let s = stats(&p);
                if s.double_asc == 0 {
                    counts[s.asc][s.st()] += 1;
                }
            }
        }
        GammaInterp::Gamma2 => {
            return Ok(gamma2_raw(n)?
                .into_iter()
                .enumerate()
                .map(|(k, g)| {
                    let scale = Rational::new(BigInt::one(), BigInt::from(2).pow((n - 2 * k) as u32));
                    g.scale(&scale)
                })
                .collect());
        }
        GammaInterp::Gamma3 => {
            for p in enumerate(PermClass::Sym, n)? {
                if has_interior_double_descent(&p) {
                    continue;
                }
                let s = stats(&p);
                counts[s.des][s.rlmin] += 1;
            }
        }
    }
    Ok(counts.iter().map(|c| alpha_poly(c)).collect())
}

/// Whether every coefficient of `p` is an integer divisible by `d`.
pub fn divisible_by(p: &MultiPoly, d: &BigInt) -> bool {
    p.terms().all(|(_, c)| c.is_integer() && (c.numer() % d).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    fn ps(v: &[&str]) -> Vec<MultiPoly> {
        v.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn expands_intro_displays() {
        let a4 = p("al^4*(x+y)^4 + (6*al^3+4*al^2+al)*x*y*(x+y)^2 + (3*al^2+2*al)*x^2*y^2");
        let g = gamma_expand(&a4).unwrap();
        assert_eq!(g.n, 4);
        assert_eq!(g.gamma, ps(&["al^4", "6*al^3+4*al^2+al", "3*al^2+2*al"]));
        assert_eq!(g.reconstruct(), a4);

        assert_eq!(gamma_expand(&p("(x+y)^2")).unwrap().gamma, ps(&["1", "0"]));
        assert_eq!(
            gamma_expand(&p("al^2*x^2 + (2*al^2+al)*x*y + al^2*y^2")).unwrap().gamma,
            ps(&["al^2", "al"])
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(gamma_expand(&p("x^2 + y")), Err(Error::NotHomogeneous(_))));
        assert!(matches!(gamma_expand(&p("x^2 + x*y")), Err(Error::NotSymmetric(..))));
        assert!(matches!(gamma_expand(&p("x^-1 + y^-1")), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn class_examples() {
        assert_eq!(gamma_from_class(GammaInterp::Gamma3, 4).unwrap()[2], p("3*al^2+2*al"));
        assert_eq!(gamma_from_class(GammaInterp::Gamma1, 2).unwrap()[1], p("al"));
        assert_eq!(gamma2_raw(2).unwrap()[0], p("4*al^2"));
        assert_eq!(gamma_from_class(GammaInterp::Gamma2, 2).unwrap()[0], p("al^2"));
    }

    #[test]
    fn gamma2_sums_are_divisible() {
        for n in 1..=7 {
            for (k, g) in gamma2_raw(n).unwrap().iter().enumerate() {
                assert!(divisible_by(g, &BigInt::from(2).pow((n - 2 * k) as u32)), "n={n} k={k}");
            }
        }
    }
}
