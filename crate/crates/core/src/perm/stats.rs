use serde::{Deserialize, Serialize};

use super::Permutation;

/// Classification of a letter against both neighbours, with `+∞` padding at both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LetterKind {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatProfile {
    pub n: usize,
    pub des: usize,
    pub asc: usize,
    pub peaks: usize,
    pub valleys: usize,
    pub double_asc: usize,
    pub double_desc: usize,
    pub lrmin: usize,
    pub rlmin: usize,
    pub internal_da: usize,
    pub internal_dd: usize,
    pub rlmin_da: usize,
    pub lrmin_dd: usize,
}

impl StatProfile {
    /// The Stirling weight exponent `lrmin + rlmin - 2`.
    pub fn st(&self) -> usize {
        (self.lrmin + self.rlmin).saturating_sub(2)
    }
}

/// Letter kinds by position, using `σ_0 = σ_{n+1} = +∞`.
pub fn letter_kinds(p: &Permutation) -> Vec<LetterKind> {
    let w = p.word();
    let n = w.len();
    (0..n)
        .map(|i| {
            let left_smaller = i > 0 && w[i - 1] < w[i];
            let right_larger = i + 1 == n || w[i + 1] > w[i];
            match (left_smaller, right_larger) {
                (true, false) => LetterKind::Peak,
                (false, true) => LetterKind::Valley,
                (true, true) => LetterKind::DoubleAscent,
                (false, false) => LetterKind::DoubleDescent,
            }
        })
        .collect()
}

fn minima_flags(w: &[usize]) -> (Vec<bool>, Vec<bool>) {
    let n = w.len();
    let mut lr = vec![false; n];
    let mut rl = vec![false; n];
    let mut low = usize::MAX;
    for i in 0..n {
        if w[i] < low {
            low = w[i];
            lr[i] = true;
        }
    }
    low = usize::MAX;
    for i in (0..n).rev() {
        if w[i] < low {
            low = w[i];
            rl[i] = true;
        }
    }
    (lr, rl)
}

/// 1-based positions of left-to-right minima and of right-to-left minima, both increasing.
pub fn minima(p: &Permutation) -> (Vec<usize>, Vec<usize>) {
    let (lr, rl) = minima_flags(p.word());
    let pos = |f: Vec<bool>| f.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect();
    (pos(lr), pos(rl))
}

pub fn stats(p: &Permutation) -> StatProfile {
    let w = p.word();
    let n = w.len();
    let mut s = StatProfile {
        n,
        ..StatProfile::default()
    };
    for pair in w.windows(2) {
        if pair[0] > pair[1] {
            s.des += 1;
        } else {
            s.asc += 1;
        }
    }
    let (lr, rl) = minima_flags(w);
    s.lrmin = lr.iter().filter(|&&b| b).count();
    s.rlmin = rl.iter().filter(|&&b| b).count();
    for (i, kind) in letter_kinds(p).into_iter().enumerate() {
        match kind {
            LetterKind::Peak => s.peaks += 1,
            LetterKind::Valley => s.valleys += 1,
            LetterKind::DoubleAscent => {
                s.double_asc += 1;
                if rl[i] {
                    s.rlmin_da += 1;
                } else {
                    s.internal_da += 1;
                }
            }
            LetterKind::DoubleDescent => {
                s.double_desc += 1;
                if lr[i] {
                    s.lrmin_dd += 1;
                } else {
                    s.internal_dd += 1;
                }
            }
        }
    }
    s
}

/// Unpadded double descent: some `1 < i < n` with `σ_{i-1} > σ_i > σ_{i+1}`.
/// Distinct from `double_desc`, which pads with `+∞`.
pub fn has_interior_double_descent(p: &Permutation) -> bool {
    p.word().windows(3).any(|t| t[0] > t[1] && t[1] > t[2])
}

/// `σ_1 > σ_2 < σ_3 > σ_4 < ...`
pub fn is_down_up(p: &Permutation) -> bool {
    p.word()
        .windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, perm, PermClass};
    use LetterKind::*;

    #[test]
    fn two_one_three() {
        let s = stats(&perm("2 1 3"));
        assert_eq!(
            s,
            StatProfile {
                n: 3,
                des: 1,
                asc: 1,
                peaks: 0,
                valleys: 1,
                double_asc: 1,
                double_desc: 1,
                lrmin: 2,
                rlmin: 2,
                internal_da: 0,
                internal_dd: 0,
                rlmin_da: 1,
                lrmin_dd: 1,
            }
        );
    }

    #[test]
    fn identity_is_monotone() {
        for n in 1..7 {
            let s = stats(&Permutation::identity(n));
            assert_eq!((s.des, s.asc, s.peaks, s.valleys), (0, n - 1, 0, 1));
            assert_eq!((s.double_asc, s.double_desc, s.lrmin, s.rlmin), (n - 1, 0, 1, n));
        }
    }

    #[test]
    fn labelled_example_kinds() {
        let kinds = letter_kinds(&perm("7 5 4 1 2 3 9 8 6"));
        assert_eq!(
            kinds,
            vec![
                DoubleDescent,
                DoubleDescent,
                DoubleDescent,
                Valley,
                DoubleAscent,
                DoubleAscent,
                Peak,
                DoubleDescent,
                Valley
            ]
        );
    }

    #[test]
    fn empty_permutation() {
        assert_eq!(stats(&perm("")), StatProfile::default());
    }

    #[test]
    fn minima_examples() {
        let p = perm("5 4 1 2 7 3 6 10 9 8");
        let (_, rl) = minima(&p);
        let values: Vec<usize> = rl.iter().map(|&i| p.word()[i - 1]).collect();
        assert_eq!(values, vec![1, 2, 3, 6, 8]);

        let (lr, rl) = minima(&Permutation::decreasing(5));
        assert_eq!(lr, vec![1, 2, 3, 4, 5]);
        assert_eq!(rl, vec![5]);

        assert_eq!(minima(&perm("2 1")), (vec![1, 2], vec![2]));
    }

    #[test]
    fn profile_identities_exhaustive() {
        for n in 1..=8 {
            for p in enumerate(PermClass::Sym, n).unwrap() {
                let s = stats(&p);
                assert_eq!(s.des + s.asc, n - 1);
                assert_eq!(s.peaks + s.double_desc, s.des);
                assert_eq!(s.peaks + s.double_asc, s.asc);
                assert_eq!(s.double_asc + s.double_desc, n - 1 - 2 * s.peaks);
                assert_eq!(s.valleys, s.peaks + 1);
                assert_eq!(s.internal_da + s.rlmin_da, s.double_asc);
                assert_eq!(s.internal_dd + s.lrmin_dd, s.double_desc);
                assert_eq!(s.peaks + s.valleys + s.double_asc + s.double_desc, n);
            }
        }
    }

    #[test]
    fn prw_minima_structure() {
        for n in 1..=8 {
            for p in enumerate(PermClass::Prw, n).unwrap() {
                let s = stats(&p);
                assert_eq!(s.lrmin_dd, s.lrmin - 1, "{p}");
                let k = p.position_of(1).unwrap();
                assert_eq!(letter_kinds(&p)[k], Valley, "{p}");
            }
        }
    }

    #[test]
    fn padded_and_interior_double_descents_differ() {
        let p = perm("2 1");
        assert_eq!(stats(&p).double_desc, 1);
        assert!(!has_interior_double_descent(&p));
    }
}
