//! Randomized algebraic laws. The seed is fixed; set `EULAB_SEED` to vary it.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use eulab::bijection::phi;
use eulab::poly::rational;
use eulab::{Grammar, Monomial, MultiPoly, Permutation};

fn config() -> Config {
    let seed = std::env::var("EULAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_240_601);
    Config {
        cases: 96,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

const VARS: [&str; 5] = ["x", "y", "z", "a", "al"];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0..VARS.len(), -2i64..4), 0..3)
        .prop_map(|v| Monomial::from_pairs(v.into_iter().map(|(i, e)| (VARS[i], e))))
}

fn laurent() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), -6i64..7, 1i64..4), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(terms.into_iter().map(|(m, n, d)| (rational(n, d), m))))
}

/// Polynomials without negative exponents.
fn polynomial() -> impl Strategy<Value = MultiPoly> {
    laurent().prop_map(|p| {
        MultiPoly::from_terms(
            p.terms()
                .filter(|(m, _)| !m.has_negative_exponent())
                .map(|(m, c)| (c.clone(), m.clone())),
        )
    })
}

fn prw_word() -> impl Strategy<Value = Permutation> {
    (1usize..9)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|mut w| {
            // force the prefix up to 1 to be decreasing
            let k = w.iter().position(|&v| v == 1).unwrap();
            w[..k].sort_unstable_by(|a, b| b.cmp(a));
            Permutation::new(w).unwrap()
        })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_laws(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn leibniz(p in laurent(), q in laurent()) {
        for name in ["G", "Gtilde"] {
            let g = Grammar::builtin(name).unwrap();
            let lhs = g.derive_once(&(&p * &q));
            let rhs = &(&g.derive_once(&p) * &q) + &(&p * &g.derive_once(&q));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn derivative_is_linear(p in polynomial(), q in polynomial(), c in -5i64..6) {
        let g = Grammar::builtin("G").unwrap();
        let lhs = g.derive_once(&(&p + &q.scale(&rational(c, 1))));
        let rhs = &g.derive_once(&p) + &g.derive_once(&q).scale(&rational(c, 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(p in laurent()) {
        let back: MultiPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip(p in laurent()) {
        let s = serde_json::to_string(&p).unwrap();
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn phi_is_an_involution(p in prw_word()) {
        prop_assert!(p.is_prw());
        let q = phi(&p).unwrap();
        prop_assert!(q.is_prw());
        prop_assert_eq!(phi(&q).unwrap(), p);
    }
}
