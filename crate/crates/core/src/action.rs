//! A `Z_2^n` action on permutations built from the Foata-Strehl move `φ_x` and a
//! minima-moving involution `ψ_x`.
//!
//! `Φ_x` fixes `σ` when `x` is a peak or valley, applies `φ_x` when `x` is an
//! internal double ascent or descent, and applies `ψ_x` when `x` is a
//! rlmin-double ascent or lrmin-double descent. Orbits have size
//! `2^(da + dd)` and contain exactly one member without double descents.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::perm::{check_cap, letter_kinds, minima, stats, LetterKind, Permutation};
use crate::{Error, Result};

/// `σ = w1 w2 x w3 w4`, with `w2`, `w3` the maximal runs of letters greater
/// than `x` directly left and right of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub pivot: usize,
    pub w3: Vec<usize>,
    pub w4: Vec<usize>,
}

impl Factorization {
    pub fn concat(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.w1.len() + self.w2.len() + self.w3.len() + self.w4.len() + 1);
        v.extend(&self.w1);
        v.extend(&self.w2);
        v.push(self.pivot);
        v.extend(&self.w3);
        v.extend(&self.w4);
        v
    }
}

fn locate(p: &Permutation, x: usize) -> Result<usize> {
    if x == 0 || x > p.len() {
        return Err(Error::ValueOutOfRange { value: x, n: p.len() });
    }
    Ok(p.position_of(x).expect("1..=n present"))
}

pub fn x_factorization(p: &Permutation, x: usize) -> Result<Factorization> {
    let i = locate(p, x)?;
    let w = p.word();
    let mut left = i;
    while left > 0 && w[left - 1] > x {
        left -= 1;
    }
    let mut right = i + 1;
    while right < w.len() && w[right] > x {
        right += 1;
    }
    Ok(Factorization {
        w1: w[..left].to_vec(),
        w2: w[left..i].to_vec(),
        pivot: x,
        w3: w[i + 1..right].to_vec(),
        w4: w[right..].to_vec(),
    })
}

/// Foata-Strehl move: `w1 w2 x w3 w4 -> w1 w3 x w2 w4`.
pub fn phi_x(p: &Permutation, x: usize) -> Result<Permutation> {
    let f = x_factorization(p, x)?;
    let swapped = Factorization {
        w2: f.w3.clone(),
        w3: f.w2.clone(),
        ..f
    };
    Ok(Permutation::from_word_unchecked(swapped.concat()))
}

/// Role of a letter for the action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    Peak,
    Valley,
    InternalDoubleAscent,
    InternalDoubleDescent,
    RlminDoubleAscent,
    LrminDoubleDescent,
}

pub fn action_kind(p: &Permutation, x: usize) -> Result<ActionKind> {
    let i = locate(p, x)?;
    let (lr, rl) = minima(p);
    Ok(match letter_kinds(p)[i] {
        LetterKind::Peak => ActionKind::Peak,
        LetterKind::Valley => ActionKind::Valley,
        LetterKind::DoubleAscent if rl.contains(&(i + 1)) => ActionKind::RlminDoubleAscent,
        LetterKind::DoubleAscent => ActionKind::InternalDoubleAscent,
        LetterKind::DoubleDescent if lr.contains(&(i + 1)) => ActionKind::LrminDoubleDescent,
        LetterKind::DoubleDescent => ActionKind::InternalDoubleDescent,
    })
}

/// Moves a rlmin-double ascent `x` to just before the greatest left-to-right
/// minimum smaller than `x`, or a lrmin-double descent `x` to just after the
/// greatest right-to-left minimum smaller than `x`; otherwise the identity.
pub fn psi_x(p: &Permutation, x: usize) -> Result<Permutation> {
    let kind = action_kind(p, x)?;
    let before = match kind {
        ActionKind::RlminDoubleAscent => true,
        ActionKind::LrminDoubleDescent => false,
        _ => return Ok(p.clone()),
    };
    let (lr, rl) = minima(p);
    let w = p.word();
    let anchors = if before { lr } else { rl };
    let anchor = anchors
        .iter()
        .map(|&i| w[i - 1])
        .filter(|&v| v < x)
        .max()
        .expect("a double ascent is not a lrmin, a double descent is not a rlmin");
    let mut out: Vec<usize> = w.iter().copied().filter(|&v| v != x).collect();
    let j = out.iter().position(|&v| v == anchor).expect("anchor present");
    out.insert(if before { j } else { j + 1 }, x);
    Ok(Permutation::from_word_unchecked(out))
}

/// The generator `Φ_x`.
pub fn big_phi_x(p: &Permutation, x: usize) -> Result<Permutation> {
    match action_kind(p, x)? {
        ActionKind::Peak | ActionKind::Valley => Ok(p.clone()),
        ActionKind::InternalDoubleAscent | ActionKind::InternalDoubleDescent => phi_x(p, x),
        ActionKind::RlminDoubleAscent | ActionKind::LrminDoubleDescent => psi_x(p, x),
    }
}

/// `Φ_S`, applying `Φ_x` for `x ∈ S` in increasing order.
pub fn big_phi(p: &Permutation, set: &BTreeSet<usize>) -> Result<Permutation> {
    let mut cur = p.clone();
    for &x in set {
        cur = big_phi_x(&cur, x)?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub members: BTreeSet<Permutation>,
    /// The member with no double descents.
    pub representative: Permutation,
}

/// Breadth-first closure of `p` under all generators `Φ_x`.
pub fn orbit_members(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    check_cap(p.len())?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(q) = queue.pop_front() {
        for x in 1..=q.len() {
            let r = big_phi_x(&q, x)?;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    Ok(seen)
}

pub fn orbit(p: &Permutation) -> Result<Orbit> {
    let members = orbit_members(p)?;
    let reps: Vec<&Permutation> = members.iter().filter(|q| stats(q).double_desc == 0).collect();
    match reps.as_slice() {
        [rep] => {
            let representative = (*rep).clone();
            Ok(Orbit {
                members,
                representative,
            })
        }
        _ => Err(Error::InvalidParameter(format!(
            "orbit of {p} has {} members without double descents",
            reps.len()
        ))),
    }
}

/// Graphviz rendering: one node per member, one edge per nontrivial `Φ_x`.
pub fn orbit_dot(orbit: &Orbit) -> Result<String> {
    let mut out = String::from("graph orbit {\n");
    for m in &orbit.members {
        let shape = if *m == orbit.representative {
            "doublecircle"
        } else {
            "ellipse"
        };
        writeln!(out, "  \"{m}\" [shape={shape}];").unwrap();
    }
    for m in &orbit.members {
        for x in 1..=m.len() {
            let image = big_phi_x(m, x)?;
            if image > *m {
                writeln!(out, "  \"{m}\" -- \"{image}\" [label=\"{x}\"];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, perm, PermClass};

    fn digits(s: &str) -> Permutation {
        Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = x_factorization(&digits("217685439"), 5).unwrap();
        assert_eq!(
            (f.w1, f.w2, f.w3, f.w4),
            (vec![2, 1], vec![7, 6, 8], vec![], vec![4, 3, 9])
        );

        let f = x_factorization(&Permutation::identity(5), 5).unwrap();
        assert_eq!(f.w1, vec![1, 2, 3, 4]);
        assert!(f.w2.is_empty() && f.w3.is_empty() && f.w4.is_empty());

        let f = x_factorization(&perm("2 1"), 1).unwrap();
        assert_eq!((f.w1, f.w2, f.w3, f.w4), (vec![], vec![2], vec![], vec![]));

        assert_eq!(
            x_factorization(&perm("2 1"), 3),
            Err(Error::ValueOutOfRange { value: 3, n: 2 })
        );
    }

    #[test]
    fn phi_x_examples() {
        let p = digits("217685439");
        assert_eq!(phi_x(&p, 5).unwrap(), digits("215768439"));
        assert_eq!(phi_x(&phi_x(&p, 5).unwrap(), 5).unwrap(), p);
        assert_eq!(phi_x(&digits("132"), 3).unwrap(), digits("132"));
    }

    #[test]
    fn psi_x_examples() {
        let p = perm("6 10 8 3 1 4 9 2 5 11 7");
        assert_eq!(action_kind(&p, 5).unwrap(), ActionKind::RlminDoubleAscent);
        let q = psi_x(&p, 5).unwrap();
        assert_eq!(q, perm("6 10 8 5 3 1 4 9 2 11 7"));
        assert_eq!(psi_x(&q, 5).unwrap(), p);
        assert_eq!(psi_x(&perm("1 2"), 2).unwrap(), perm("2 1"));
        assert_eq!(psi_x(&perm("2 1"), 2).unwrap(), perm("1 2"));
    }

    #[test]
    fn figure_permutation_moves() {
        let p = perm("12 7 1 3 13 15 2 4 9 16 14 6 11 8 5 10");
        use ActionKind::*;
        assert_eq!(action_kind(&p, 12).unwrap(), LrminDoubleDescent);
        assert_eq!(action_kind(&p, 7).unwrap(), LrminDoubleDescent);
        assert_eq!(action_kind(&p, 4).unwrap(), RlminDoubleAscent);
        assert_eq!(action_kind(&p, 10).unwrap(), RlminDoubleAscent);
        assert_eq!(action_kind(&p, 5).unwrap(), Valley);
        // lrmin-double descents jump right, behind the greatest smaller rlmin
        assert_eq!(
            big_phi_x(&p, 7).unwrap(),
            perm("12 1 3 13 15 2 4 9 16 14 6 11 8 5 7 10")
        );
        assert_eq!(
            big_phi_x(&p, 12).unwrap(),
            perm("7 1 3 13 15 2 4 9 16 14 6 11 8 5 10 12")
        );
        // rlmin-double ascents jump left, in front of the greatest smaller lrmin
        assert_eq!(
            big_phi_x(&p, 4).unwrap(),
            perm("12 7 4 1 3 13 15 2 9 16 14 6 11 8 5 10")
        );
        assert_eq!(
            big_phi_x(&p, 10).unwrap(),
            perm("12 10 7 1 3 13 15 2 4 9 16 14 6 11 8 5")
        );
        assert_eq!(big_phi_x(&p, 5).unwrap(), p);
        let s: BTreeSet<usize> = (1..=16).collect();
        assert_eq!(big_phi(&big_phi(&p, &s).unwrap(), &s).unwrap(), p);
    }

    #[test]
    fn peaks_are_fixed() {
        let p = perm("1 3 2");
        assert_eq!(big_phi_x(&p, 3).unwrap(), p);
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&perm("2 1")).unwrap();
        assert_eq!(o.members, [perm("1 2"), perm("2 1")].into_iter().collect());
        assert_eq!(o.representative, perm("1 2"));
        // with infinite padding only words with da = dd = 0 are fixed; a
        // down-up word starts with a double descent
        for p in enumerate(PermClass::Sym, 5).unwrap() {
            let s = stats(&p);
            let size = orbit(&p).unwrap().members.len();
            assert_eq!(size == 1, s.double_asc + s.double_desc == 0, "{p}");
        }
        assert_eq!(orbit(&perm("1 3 2 5 4")).unwrap().members.len(), 1);
        assert_eq!(orbit(&perm("2 1 4 3 5")).unwrap().members.len(), 4);
        assert_eq!(orbit(&perm("2 1 3")).unwrap().members.len(), 4);
    }

    #[test]
    fn involution_exhaustive() {
        for n in 1..=7 {
            for p in enumerate(PermClass::Sym, n).unwrap() {
                for x in 1..=n {
                    let q = big_phi_x(&p, x).unwrap();
                    assert_eq!(big_phi_x(&q, x).unwrap(), p, "Φ_{x} on {p}");
                }
            }
        }
    }

    #[test]
    fn dot_output_lists_edges() {
        let dot = orbit_dot(&orbit(&perm("2 1")).unwrap()).unwrap();
        assert!(dot.contains("\"1 2\" -- \"2 1\" [label=\"2\"]"));
    }
}
