use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{letter_kinds, minima, LetterKind, Permutation};
use crate::poly::{Monomial, MultiPoly, ALPHA};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    U1,
    U2,
    U3,
    U4,
    U5,
    A,
}

impl Label {
    pub fn var(self) -> &'static str {
        match self {
            Label::U1 => "u1",
            Label::U2 => "u2",
            Label::U3 => "u3",
            Label::U4 => "u4",
            Label::U5 => "u5",
            Label::A => "a",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.var())
    }
}

/// Labels of the gap positions `2..=n+1` of a PRW permutation, plus the number
/// of α marks under its letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelWord {
    pub labels: Vec<Label>,
    pub alpha_count: usize,
}

impl LabelWord {
    /// Product of all labels except `a`, times `α^alpha_count`.
    pub fn monomial(&self) -> Monomial {
        let mut m = Monomial::from_pairs(self.labels.iter().filter(|&&l| l != Label::A).map(|l| (l.var(), 1)));
        m.mul_var(ALPHA, self.alpha_count as i64);
        m
    }

    /// The full weight, `a` included.
    pub fn weight(&self) -> MultiPoly {
        let mut m = self.monomial();
        m.mul_var("a", 1);
        MultiPoly::from(m)
    }
}

impl fmt::Display for LabelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{} (α^{})", labels.join(","), self.alpha_count)
    }
}

/// Grammatical labeling of a PRW permutation for the grammar `Gtilde`.
///
/// With `σ_0 = σ_{n+1} = +∞` and `σ_k = 1`, position `i` (the gap before `σ_i`)
/// gets `u2` when `σ_i` is a peak (and then `i+1` gets `u1`), `u3` when `σ_i` is
/// a double ascent, `u5`/`u4` when `σ_{i-1}` is a double descent and `i <= k` /
/// `i > k`, and the last position gets `a`. Every left-to-right or right-to-left
/// minimum other than `1` carries an α mark.
pub fn prw_labeling(p: &Permutation) -> Result<LabelWord> {
    if p.is_empty() || !p.is_prw() {
        return Err(Error::NotPrw(p.to_string()));
    }
    let n = p.len();
    let kinds = letter_kinds(p);
    let k = p.position_of(1).expect("nonempty") + 1;
    // slot[i] holds the label of position i, 1-based; positions 2..=n+1 are labeled
    let mut slot: Vec<Option<Label>> = vec![None; n + 2];
    let mut set = |i: usize, l: Label| {
        assert!(slot[i].replace(l).is_none(), "position {i} labeled twice in {p}");
    };
    for i in 2..=n + 1 {
        if i <= n {
            match kinds[i - 1] {
                LetterKind::Peak => {
                    set(i, Label::U2);
                    set(i + 1, Label::U1);
                }
                LetterKind::DoubleAscent => set(i, Label::U3),
                _ => {}
            }
        }
        if kinds[i - 2] == LetterKind::DoubleDescent {
            set(i, if i <= k { Label::U5 } else { Label::U4 });
        }
        if i == n + 1 {
            set(i, Label::A);
        }
    }
    let labels = slot[2..=n + 1]
        .iter()
        .enumerate()
        .map(|(j, l)| l.unwrap_or_else(|| panic!("position {} unlabeled in {p}", j + 2)))
        .collect();
    let (lr, rl) = minima(p);
    let mut marked = vec![false; n + 1];
    for i in lr.into_iter().chain(rl) {
        marked[i] = i != k;
    }
    Ok(LabelWord {
        labels,
        alpha_count: marked.iter().filter(|&&b| b).count(),
    })
}
