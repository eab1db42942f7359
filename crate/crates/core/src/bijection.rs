//! An involution on PRW_n exchanging `des` with `asc` and `dd` with `da` while
//! keeping `lrmin + rlmin` fixed.
//!
//! The permutation is cut into blocks, each ending at a right-to-left minimum.
//! Every non-isolated block other than the one holding `1` has its non-final
//! letters reversed. Then the isolated right-to-left minima (other than `1`)
//! and the left-to-right minima (other than `1`) trade roles: the former move,
//! in decreasing order, directly in front of `1`; the latter become isolated
//! right-to-left minima, each placed after the last block whose final value is
//! smaller.

use serde::{Deserialize, Serialize};

use crate::perm::{enumerate, minima, stats, PermClass, Permutation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub letters: Vec<usize>,
    pub isolated: bool,
    pub contains_one: bool,
}

impl Block {
    /// The right-to-left minimum ending the block.
    pub fn last(&self) -> usize {
        *self.letters.last().expect("blocks are nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn word(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.letters.iter().copied()).collect()
    }

    pub fn isolated_values(&self) -> Vec<usize> {
        self.blocks.iter().filter(|b| b.isolated).map(Block::last).collect()
    }
}

/// Puts a bar after every right-to-left minimum.
pub fn decompose(p: &Permutation) -> BlockDecomposition {
    blocks_of(p.word())
}

/// Same as [`decompose`] for any word of distinct values; the insertion step
/// works on words that are not yet permutations of `1..=n`.
fn blocks_of(word: &[usize]) -> BlockDecomposition {
    let mut ends = Vec::new();
    let mut min = usize::MAX;
    for (i, &v) in word.iter().enumerate().rev() {
        if v < min {
            min = v;
            ends.push(i + 1);
        }
    }
    ends.reverse();
    let mut blocks = Vec::with_capacity(ends.len());
    let mut start = 0;
    for end in ends {
        let letters = word[start..end].to_vec();
        blocks.push(Block {
            isolated: letters.len() == 1,
            contains_one: letters.contains(&1),
            letters,
        });
        start = end;
    }
    BlockDecomposition { blocks }
}

pub fn phi(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() || !p.is_prw() {
        return Err(Error::NotPrw(p.to_string()));
    }
    let dec = decompose(p);

    let mut tau: Vec<usize> = Vec::with_capacity(p.len());
    for b in &dec.blocks {
        if b.isolated || b.contains_one {
            tau.extend(&b.letters);
        } else {
            let (last, body) = b.letters.split_last().expect("nonempty");
            tau.extend(body.iter().rev());
            tau.push(*last);
        }
    }

    let mut isolated: Vec<usize> = dec.isolated_values().into_iter().filter(|&v| v != 1).collect();
    let (lr, _) = minima(p);
    let lrmins: Vec<usize> = lr.iter().map(|&i| p.word()[i - 1]).filter(|&v| v != 1).collect();

    let mut word: Vec<usize> = tau
        .into_iter()
        .filter(|v| !isolated.contains(v) && !lrmins.contains(v))
        .collect();
    isolated.sort_unstable_by(|a, b| b.cmp(a));
    let one = word.iter().position(|&v| v == 1).expect("1 stays");
    word.splice(one..one, isolated);

    let mut to_insert = lrmins;
    to_insert.sort_unstable();
    for v in to_insert {
        let dec = blocks_of(&word);
        let mut at = 0;
        let mut offset = 0;
        for b in &dec.blocks {
            offset += b.letters.len();
            if b.last() < v {
                at = offset;
            }
        }
        word.insert(at, v);
    }
    Ok(Permutation::from_word_unchecked(word))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub input: Permutation,
    pub image: Permutation,
    pub fixed: bool,
}

/// The full correspondence on PRW_n in lexicographic order.
pub fn table(n: usize) -> Result<Vec<TableRow>> {
    enumerate(PermClass::Prw, n)?
        .map(|p| {
            let image = phi(&p)?;
            Ok(TableRow {
                fixed: image == p,
                input: p,
                image,
            })
        })
        .collect()
}

/// Checks that φ maps `p` to a PRW permutation `π` with `φ(π) = p`, swapping
/// des/asc and dd/da and preserving `lrmin + rlmin`. Returns a description of
/// the first violated property.
pub fn check_properties(p: &Permutation) -> Result<Option<String>> {
    let q = phi(p)?;
    if !q.is_prw() {
        return Ok(Some(format!("φ({p}) = {q} is not PRW")));
    }
    let back = phi(&q)?;
    if back != *p {
        return Ok(Some(format!("φ(φ({p})) = {back}")));
    }
    let (s, t) = (stats(p), stats(&q));
    if (s.des, s.asc, s.double_desc, s.double_asc) != (t.asc, t.des, t.double_asc, t.double_desc) {
        return Ok(Some(format!("des/asc/dd/da not exchanged for {p} -> {q}")));
    }
    if s.lrmin + s.rlmin != t.lrmin + t.rlmin {
        return Ok(Some(format!("lrmin+rlmin changed for {p} -> {q}")));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;

    #[test]
    fn decomposition_example() {
        let d = decompose(&perm("5 4 1 2 7 3 6 10 9 8"));
        let blocks: Vec<Vec<usize>> = d.blocks.iter().map(|b| b.letters.clone()).collect();
        assert_eq!(
            blocks,
            vec![vec![5, 4, 1], vec![2], vec![7, 3], vec![6], vec![10, 9, 8]]
        );
        assert_eq!(d.isolated_values(), vec![2, 6]);
        assert!(d.blocks[0].contains_one);
        assert_eq!(decompose(&Permutation::identity(4)).blocks.len(), 4);
        assert!(decompose(&Permutation::identity(4)).blocks.iter().all(|b| b.isolated));
        assert_eq!(decompose(&Permutation::decreasing(4)).blocks.len(), 1);
    }

    #[test]
    fn worked_example() {
        assert_eq!(
            phi(&perm("5 4 1 2 7 3 6 10 9 8")).unwrap(),
            perm("6 2 1 7 3 4 5 9 10 8")
        );
    }

    #[test]
    fn prw4_table() {
        let pairs = [
            ("1234", "4321"),
            ("1243", "2143"),
            ("1324", "4132"),
            ("1342", "1432"),
            ("1423", "3142"),
            ("2134", "4312"),
            ("3124", "4213"),
            ("4123", "3214"),
        ];
        let w = |s: &str| Permutation::new(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap();
        for (a, b) in pairs {
            assert_eq!(phi(&w(a)).unwrap(), w(b), "{a}");
            assert_eq!(phi(&w(b)).unwrap(), w(a), "{b}");
        }
    }

    #[test]
    fn rejects_non_prw() {
        assert!(matches!(phi(&perm("2 3 1")), Err(Error::NotPrw(_))));
    }

    #[test]
    fn involution_exhaustive() {
        for n in 1..=8 {
            for p in enumerate(PermClass::Prw, n).unwrap() {
                assert_eq!(check_properties(&p).unwrap(), None);
            }
        }
    }
}
