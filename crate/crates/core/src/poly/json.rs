//! JSON form: `{"terms":[{"exp":{"x":2,"y":1},"coef":"3/1"}]}` with terms in
//! graded lexicographic order.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, MultiPoly, Rational};

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: BTreeMap<String, i64>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

fn format_coef(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn parse_coef(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(Rational::new(n.trim().parse().ok()?, d))
        }
        None => Some(Rational::from_integer(s.trim().parse().ok()?)),
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| JsonTerm {
                    exp: m.clone().into(),
                    coef: format_coef(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut p = MultiPoly::zero();
        for t in raw.terms {
            let c = parse_coef(&t.coef).ok_or_else(|| D::Error::custom(format!("bad coefficient `{}`", t.coef)))?;
            p.add_term(Monomial::from(t.exp), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let p: MultiPoly = "3*x^2*y + 1/2".parse().unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"exp":{"x":2,"y":1},"coef":"3/1"},{"exp":{},"coef":"1/2"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
