//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] is a finite map from [`Monomial`] to a nonzero [`Rational`].
//! Zero coefficients are never stored and monomials never carry zero exponents,
//! so structural equality is polynomial equality.

mod json;
mod monomial;
pub(crate) mod parse;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub(crate) use monomial::display_name;
pub use monomial::{Monomial, ALPHA};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::constant(Rational::from_integer(c.into()))
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(name))
    }

    pub fn alpha() -> Self {
        MultiPoly::var(ALPHA)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, combining like terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut p = MultiPoly::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order, the order used for printing and JSON.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.grlex_cmp(b.0));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// The single `(coefficient, monomial)` pair, if this polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<(&Rational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k * c)).collect(),
        }
    }

    /// `self^k`; negative `k` is only defined for single-term polynomials.
    pub fn pow(&self, k: i64) -> Result<MultiPoly> {
        if k < 0 {
            let (c, m) = self.as_monomial().ok_or(Error::NegativePowerOfNonmonomial)?;
            let inv = c.recip().pow(-k as i32);
            return Ok(MultiPoly::term(inv, m.pow(k)));
        }
        if let Some((c, m)) = self.as_monomial() {
            return Ok(MultiPoly::term(c.pow(k as i32), m.pow(k)));
        }
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.to_string()))
            .collect()
    }

    /// Simultaneous substitution of one variable.
    pub fn substitute(&self, var: &str, q: &MultiPoly) -> Result<MultiPoly> {
        let mut map = BTreeMap::new();
        map.insert(var.to_string(), q.clone());
        self.substitute_all(&map)
    }

    /// Simultaneous substitution `v -> q_v` for every entry of `map`.
    pub fn substitute_all(&self, map: &BTreeMap<String, MultiPoly>) -> Result<MultiPoly> {
        let mut powers: HashMap<(&str, i64), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = MultiPoly::constant(c.clone());
            for (v, e) in m.iter() {
                match map.get_key_value(v) {
                    Some((key, q)) => {
                        let pw = match powers.get(&(key.as_str(), e)) {
                            Some(pw) => pw.clone(),
                            None => {
                                let pw = q.pow(e)?;
                                powers.insert((key.as_str(), e), pw.clone());
                                pw
                            }
                        };
                        factor = &factor * &pw;
                    }
                    None => kept.mul_var(v, e),
                }
            }
            for (fm, fc) in factor.terms {
                out.add_term(fm.mul(&kept), fc);
            }
        }
        Ok(out)
    }

    /// Evaluates at a point assigning every variable of the polynomial.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.iter() {
                let x = point.get(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                if e < 0 {
                    if x.is_zero() {
                        return Err(Error::ZeroAtNegativePower(v.to_string()));
                    }
                    value *= x.recip().pow(-e as i32);
                } else {
                    value *= x.pow(e as i32);
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Replaces the listed variables by constants, leaving the rest symbolic.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<MultiPoly> {
        for (v, x) in values {
            if x.is_zero() && self.terms.keys().any(|m| m.exponent(v) < 0) {
                return Err(Error::ZeroAtNegativePower(v.to_string()));
            }
        }
        let map = values
            .iter()
            .map(|(v, x)| (v.to_string(), MultiPoly::constant(x.clone())))
            .collect();
        self.substitute_all(&map)
    }

    /// Coefficient of a partial exponent pattern: the polynomial in the remaining
    /// variables multiplying `Π v^e` over the pattern. Pattern variables absent from
    /// the pattern's support are matched at exponent zero only if listed.
    pub fn coefficient(&self, pattern: &[(&str, i64)]) -> MultiPoly {
        let names: Vec<&str> = pattern.iter().map(|(v, _)| *v).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if pattern.iter().all(|(v, e)| m.exponent(v) == *e) {
                out.add_term(m.without(&names), c.clone());
            }
        }
        out
    }

    /// Largest exponent of `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Smallest exponent of `var`; `None` for the zero polynomial.
    pub fn min_degree_in(&self, var: &str) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }

    pub fn swap_vars(&self, a: &str, b: &str) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (c.clone(), m.swap(a, b))))
    }

    pub fn is_symmetric_in(&self, a: &str, b: &str) -> bool {
        self.swap_vars(a, b) == *self
    }

    /// Common total degree in `vars` of all terms, if there is one.
    /// The zero polynomial has no degree.
    pub fn homogeneous_degree(&self, vars: &[&str]) -> Option<i64> {
        let mut degrees = self
            .terms
            .keys()
            .map(|m| vars.iter().map(|v| m.exponent(v)).sum::<i64>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_in(&self, vars: &[&str]) -> bool {
        self.is_zero() || self.homogeneous_degree(vars).is_some()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonneg_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sum of coefficients, i.e. the evaluation at all ones.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl From<Monomial> for MultiPoly {
    fn from(m: Monomial) -> Self {
        MultiPoly::term(Rational::one(), m)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::int(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_square() {
        assert_eq!(p("(x+y)^2"), p("x^2 + 2*x*y + y^2"));
    }

    #[test]
    fn bse_two_assembles_from_products() {
        let a = p("al*(x+y)");
        let got = &(&a * &a) + &p("al*x*y");
        assert_eq!(got, p("al^2*x^2 + (2*al^2 + al)*x*y + al^2*y^2"));
    }

    #[test]
    fn unit_cancellation() {
        assert_eq!(&p("x*y*t^-1") * &p("t"), p("x*y"));
    }

    #[test]
    fn negative_power_needs_a_monomial() {
        assert_eq!(p("x+y").pow(-1), Err(Error::NegativePowerOfNonmonomial));
        assert_eq!(p("2*x").pow(-2).unwrap(), p("1/4*x^-2"));
    }

    #[test]
    fn substitution_examples() {
        let a2 = p("al^2*(x+y)^2 + al*x*y");
        let one = MultiPoly::one();
        assert_eq!(a2.substitute("al", &one).unwrap(), p("(x+y)^2 + x*y"));
        assert_eq!(p("-2*al").substitute("al", &p("al/2")).unwrap(), p("-al"));

        let mut map = BTreeMap::new();
        map.insert("u1".to_string(), p("t"));
        map.insert("u2".to_string(), p("x*y*t^-1"));
        assert_eq!(p("u1*u2").substitute_all(&map).unwrap(), p("x*y"));
    }

    #[test]
    fn substitution_rejects_negative_power_of_sum() {
        assert_eq!(
            p("x^-1*y").substitute("x", &p("a+b")),
            Err(Error::NegativePowerOfNonmonomial)
        );
    }

    #[test]
    fn eval_errors() {
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), rational(-1, 1));
        pt.insert("y".to_string(), rational(1, 1));
        assert_eq!(p("(x+y)^3").eval(&pt).unwrap(), rational(0, 1));
        assert_eq!(p("x + z").eval(&pt), Err(Error::UnboundVariable("z".into())));
        pt.insert("z".to_string(), rational(0, 1));
        assert_eq!(p("x*z^-1").eval(&pt), Err(Error::ZeroAtNegativePower("z".into())));
    }

    #[test]
    fn coefficient_of_partial_pattern() {
        let a3 = p("al^3*(x+y)^3 + (al + 3*al^2)*x*y*(x+y)");
        assert_eq!(a3.coefficient(&[("x", 1), ("y", 2)]), p("3*al^3 + 3*al^2 + al"));
        assert_eq!(a3.degree_in("x"), Some(3));
        assert!(a3.is_symmetric_in("x", "y"));
        assert!(a3.is_homogeneous_in(&["x", "y"]));
        assert!(!p("x^2 + y").is_homogeneous_in(&["x", "y"]));
    }

    #[test]
    fn display_renders_alpha_and_parses_back() {
        let q = p("3/2*al^2*x - x*y^-1 + 7");
        let shown = q.to_string();
        assert!(shown.contains('α'));
        assert_eq!(p(&shown), q);
    }
}
