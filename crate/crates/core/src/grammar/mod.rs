//! Formal derivatives with respect to a context-free grammar.
//!
//! A grammar maps variables to polynomials. The induced operator `D` is linear,
//! satisfies Leibniz's rule, and sends every variable without a rule to zero.
//! Rule files look like
//!
//! ```text
//! # grammar G
//! a -> a*al*(z+y);
//! x -> x*y;
//! y -> x*y;
//! ```
//!
//! where `al` spells the weight variable α.

mod labeling;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::poly::parse::{Parser, Tok};
use crate::poly::{display_name, MultiPoly, Rational};
use crate::{Error, Result};

pub use labeling::{prw_labeling, Label, LabelWord};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grammar {
    rules: Vec<(String, MultiPoly)>,
}

impl Grammar {
    pub fn new(rules: impl IntoIterator<Item = (String, MultiPoly)>) -> Result<Self> {
        let mut g = Grammar::default();
        for (head, body) in rules {
            if g.rule(&head).is_some() {
                return Err(Error::DuplicateRuleHead(head));
            }
            g.rules.push((head, body));
        }
        Ok(g)
    }

    /// Rules in definition order.
    pub fn rules(&self) -> &[(String, MultiPoly)] {
        &self.rules
    }

    pub fn rule(&self, var: &str) -> Option<&MultiPoly> {
        self.rules.iter().find(|(h, _)| h == var).map(|(_, b)| b)
    }

    /// Parses the rule file format; see the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text)?;
        let mut rules: Vec<(String, MultiPoly)> = Vec::new();
        while !p.at_eof() {
            let (head, _) = p.expect_ident()?;
            if rules.iter().any(|(h, _)| *h == head) {
                return Err(Error::DuplicateRuleHead(head));
            }
            p.expect(Tok::Arrow)?;
            let body = p.expr()?;
            p.expect(Tok::Semi)?;
            rules.push((head, body));
        }
        Ok(Grammar { rules })
    }

    /// The built-in grammars: `"G"` generates `a·Ã_n(x,y,z|α)` and `"Gtilde"`
    /// generates `a·P̃_n(u1,..,u5|α)`.
    pub fn builtin(name: &str) -> Result<Self> {
        let text = match name {
            "G" => "a -> a*al*(z+y); x -> x*y; y -> x*y;",
            "Gtilde" => "a -> a*al*(u3+u5); u4 -> u1*u2; u3 -> u1*u2; u1 -> u1*u3; u2 -> u2*u4;",
            other => return Err(Error::UnknownName(other.to_string())),
        };
        Grammar::parse(text)
    }

    /// One application of `D`.
    pub fn derive_once(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            for (v, e) in m.iter() {
                let Some(rule) = self.rule(v) else { continue };
                // D(v^e) = e·v^(e-1)·D(v), valid for every integer e
                let mut rest = m.clone();
                rest.mul_var(v, -1);
                let k = c * Rational::from_integer(e.into());
                if k.is_zero() {
                    continue;
                }
                out += rule.mul_monomial(&k, &rest);
            }
        }
        out
    }

    /// `D^steps(p)`, by repeated single steps.
    pub fn derive(&self, p: &MultiPoly, steps: usize) -> MultiPoly {
        let mut cur = p.clone();
        for _ in 0..steps {
            cur = self.derive_once(&cur);
        }
        cur
    }

    /// Every intermediate `D^k(p)` for `k = 0..=steps`.
    pub fn derivatives(&self, p: &MultiPoly, steps: usize) -> Vec<MultiPoly> {
        let mut out = Vec::with_capacity(steps + 1);
        out.push(p.clone());
        for k in 0..steps {
            let next = self.derive_once(&out[k]);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, b) in &self.rules {
            writeln!(f, "{} -> {};", display_name(h), b)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Grammar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Grammar::parse(s)
    }
}

/// The variables among `vars` that carry no rule in `g`.
pub fn constants_of(g: &Grammar, vars: impl IntoIterator<Item = String>) -> Vec<String> {
    vars.into_iter().filter(|v| g.rule(v).is_none()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parses_builtin_text_forms() {
        let g = Grammar::parse("a -> a*al*(z+y); x -> x*y; y -> x*y;").unwrap();
        assert_eq!(g, Grammar::builtin("G").unwrap());
        let heads: Vec<&str> = g.rules().iter().map(|(h, _)| h.as_str()).collect();
        assert_eq!(heads, ["a", "x", "y"]);
        assert_eq!(g.rule("a"), Some(&p("a*al*z + a*al*y")));

        let gt = Grammar::builtin("Gtilde").unwrap();
        let heads: Vec<&str> = gt.rules().iter().map(|(h, _)| h.as_str()).collect();
        assert_eq!(heads, ["a", "u4", "u3", "u1", "u2"]);
        assert_eq!(gt.rule("u2"), Some(&p("u2*u4")));
    }

    #[test]
    fn builtin_constants() {
        let g = Grammar::builtin("G").unwrap();
        let vars: BTreeSet<String> = g.rules().iter().flat_map(|(_, b)| b.variables()).collect();
        assert_eq!(constants_of(&g, vars), ["al", "z"]);
        let gt = Grammar::builtin("Gtilde").unwrap();
        let vars: BTreeSet<String> = gt.rules().iter().flat_map(|(_, b)| b.variables()).collect();
        assert_eq!(constants_of(&gt, vars), ["al", "u5"]);
        assert_eq!(Grammar::builtin("Gx"), Err(Error::UnknownName("Gx".into())));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            Grammar::parse("x -> x^2 y"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(Grammar::parse("x -> x*y"), Err(Error::Syntax { .. })));
        assert!(matches!(
            Grammar::parse("x -> y;\n# comment\n  -> z;"),
            Err(Error::Syntax { line: 3, column: 3, .. })
        ));
        assert_eq!(
            Grammar::parse("x -> y; x -> z;"),
            Err(Error::DuplicateRuleHead("x".into()))
        );
    }

    #[test]
    fn derivative_examples() {
        let g = Grammar::builtin("G").unwrap();
        assert_eq!(g.derive(&p("a"), 1), p("a*al*(z+y)"));
        assert_eq!(g.derive(&p("x*y"), 1), p("x*y*(x+y)"));
        let d2 = g.derive(&p("a"), 2);
        assert_eq!(d2, p("a*(al^2*(z+y)^2 + al*x*y)"));
        let at_z_eq_x = d2.substitute("z", &p("x")).unwrap();
        assert_eq!(at_z_eq_x, p("a*(al^2*(x+y)^2 + al*x*y)"));
    }

    #[test]
    fn constants_have_zero_derivative() {
        let g = Grammar::builtin("G").unwrap();
        assert!(g.derive(&p("3*al^2*z"), 1).is_zero());
        assert_eq!(g.derive(&p("a"), 0), p("a"));
    }

    #[test]
    fn power_rule_with_negative_exponents() {
        let g = Grammar::parse("x -> x*y;").unwrap();
        // D(x^-1) = -x^-2 · x y = -y/x
        assert_eq!(g.derive(&p("x^-1"), 1), p("-y*x^-1"));
    }
}
