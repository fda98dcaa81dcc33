//! Ordered set partitions and their bijection with permutations of bounded
//! descent set.

use serde_json::{json, Value};

use crate::combinat::{Permutation, SubsetI};
use crate::error::{Error, Result};

/// An ordered partition of `{1..n}` into non-empty blocks, each stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut total = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::invalid("blocks must be non-empty"));
            }
            for &e in block {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::invalid("blocks must partition 1..n"));
                }
                seen[e] = true;
                total += 1;
            }
        }
        if total != n {
            return Err(Error::invalid("blocks must cover 1..n"));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(OrderedSetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The subset whose composition records the block sizes.
    pub fn subset(&self) -> SubsetI {
        let mut elems = Vec::new();
        let mut acc = 0;
        for b in &self.blocks[..self.blocks.len() - 1] {
            acc += b.len();
            elems.push(acc);
        }
        SubsetI::new(self.n, elems).expect("cumulative block sizes stay below n")
    }

    /// Sort each block increasingly and concatenate.
    pub fn to_permutation(&self) -> Permutation {
        let word = self.blocks.iter().flatten().copied().collect();
        Permutation::from_word(word).expect("blocks partition 1..n")
    }

    /// Cut the one-line word after the positions in `I`; requires
    /// `Dsl(w)` contained in `I`.
    pub fn from_permutation(w: &Permutation, i: &SubsetI) -> Result<Self> {
        let dsl = w.dsl();
        if !dsl.is_subset_of(i) {
            return Err(Error::DescentsNotContained {
                found: dsl.elems().to_vec(),
                required: i.elems().to_vec(),
            });
        }
        if i.n() != w.n() {
            return Err(Error::invalid("ambient sizes disagree"));
        }
        let mut blocks = Vec::with_capacity(i.k());
        let mut prev = 0;
        for &cut in i.elems().iter().chain(std::iter::once(&w.n())) {
            blocks.push(w.word()[prev..cut].to_vec());
            prev = cut;
        }
        OrderedSetPartition::new(w.n(), blocks)
    }

    /// Star insertion at the last position: add `n+1` to the final block.
    pub fn star_insert(&self) -> OrderedSetPartition {
        let mut blocks = self.blocks.clone();
        blocks.last_mut().expect("non-empty").push(self.n + 1);
        OrderedSetPartition {
            n: self.n + 1,
            blocks,
        }
    }

    /// Bar insertion at the last position: append the singleton `{n+1}`.
    pub fn bar_insert(&self) -> OrderedSetPartition {
        let mut blocks = self.blocks.clone();
        blocks.push(vec![self.n + 1]);
        OrderedSetPartition {
            n: self.n + 1,
            blocks,
        }
    }

    /// Apply a permutation elementwise, keeping block order.
    pub fn act(&self, sigma: &Permutation) -> OrderedSetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut img: Vec<usize> = b.iter().map(|&e| sigma.image(e)).collect();
                img.sort_unstable();
                img
            })
            .collect();
        OrderedSetPartition {
            n: self.n,
            blocks,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "blocks": self.blocks })
    }
}

impl std::fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|e| e.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        write!(f, "({})", blocks.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osp(n: usize, blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn bijection_with_small_descent_words() {
        let i = SubsetI::new(3, vec![1]).unwrap();
        let pairs = [
            (osp(3, &[&[1], &[2, 3]]), vec![1, 2, 3]),
            (osp(3, &[&[2], &[1, 3]]), vec![2, 1, 3]),
            (osp(3, &[&[3], &[1, 2]]), vec![3, 1, 2]),
        ];
        for (p, word) in pairs {
            let w = Permutation::from_word(word).unwrap();
            assert_eq!(p.to_permutation(), w);
            assert_eq!(OrderedSetPartition::from_permutation(&w, &i).unwrap(), p);
        }
        let empty = SubsetI::empty(4);
        let id = Permutation::identity(4);
        let single = OrderedSetPartition::from_permutation(&id, &empty).unwrap();
        assert_eq!(single.blocks(), &[vec![1, 2, 3, 4]]);
        // descent outside I is rejected
        let w = Permutation::from_word(vec![2, 1, 3]).unwrap();
        assert!(OrderedSetPartition::from_permutation(&w, &SubsetI::empty(3)).is_err());
    }

    #[test]
    fn insertions() {
        let p = osp(6, &[&[2, 5], &[1, 3, 6], &[4]]);
        assert_eq!(p.subset().elems(), &[2, 5]);
        let starred = p.star_insert();
        assert_eq!(starred.blocks(), &[vec![2, 5], vec![1, 3, 6], vec![4, 7]]);
        assert_eq!(starred.subset().elems(), &[2, 5]);
        let barred = p.bar_insert();
        assert_eq!(
            barred.blocks(),
            &[vec![2, 5], vec![1, 3, 6], vec![4], vec![7]]
        );
        assert_eq!(barred.subset().elems(), &[2, 5, 6]);
        let whole = osp(3, &[&[1, 2, 3]]);
        assert_eq!(whole.bar_insert().subset().elems(), &[3]);
    }
}
