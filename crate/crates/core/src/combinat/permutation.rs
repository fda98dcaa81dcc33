//! Permutations in one-line notation, with ascent/descent locations.

use serde_json::{json, Value};

use crate::combinat::SubsetI;
use crate::error::{Error, Result};

/// An element of `S_n` as a word `w_1 .. w_n` rearranging `1..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return Err(Error::invalid(format!(
                    "word {word:?} is not a permutation of 1..{n}"
                )));
            }
            seen[w] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element, sending `i` to `n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// The adjacent transposition `(i, i+1)` inside `S_n`.
    pub fn adjacent_transposition(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// The transposition `(a, b)` inside `S_n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n);
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(a - 1, b - 1);
        Permutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `1 <= i <= n`; indices above `n` are fixed.
    pub fn image(&self, i: usize) -> usize {
        if i >= 1 && i <= self.word.len() {
            self.word[i - 1]
        } else {
            i
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &w) in self.word.iter().enumerate() {
            word[w - 1] = i + 1;
        }
        Permutation { word }
    }

    /// `self . other` acting as `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.n().max(other.n());
        let word = (1..=n).map(|i| self.image(other.image(i))).collect();
        Permutation { word }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &w)| w == i + 1)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.word.len()];
        let mut sign = 1i64;
        for start in 0..self.word.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.word[cur] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// View inside `S_m` for `m >= n`, fixing the new points.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut word = self.word.clone();
        word.extend(self.n() + 1..=m);
        Permutation { word }
    }

    /// `w_+`: the same element inside `S_{n+1}`.
    pub fn iota(&self) -> Permutation {
        self.extend(self.n() + 1)
    }

    /// The conjugate `w0 . w . w0` by the longest element.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let n = self.n();
        let word = (1..=n).map(|i| n + 1 - self.image(n + 1 - i)).collect();
        Permutation { word }
    }

    /// Ascending and descending locations `(Asl, Dsl)`; their disjoint union
    /// is `{1..n-1}`.
    pub fn asl_dsl(&self) -> (SubsetI, SubsetI) {
        let n = self.n();
        let mut asl = Vec::new();
        let mut dsl = Vec::new();
        for i in 1..n {
            if self.word[i] > self.word[i - 1] {
                asl.push(i);
            } else {
                dsl.push(i);
            }
        }
        (
            SubsetI::new(n, asl).expect("in range"),
            SubsetI::new(n, dsl).expect("in range"),
        )
    }

    pub fn dsl(&self) -> SubsetI {
        self.asl_dsl().1
    }

    /// All of `S_n` in lexicographic word order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { word: word.clone() }];
        while next_permutation(&mut word) {
            out.push(Permutation { word: word.clone() });
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.word)
    }

    pub fn from_json(v: &Value) -> Result<Permutation> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::invalid("permutation json must be an array"))?;
        let word = arr
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid("permutation entries must be integers"))?;
        Permutation::from_word(word)
    }
}

fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() <= 9 {
            for w in &self.word {
                write!(f, "{w}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.word.iter().map(|w| w.to_string()).collect();
            write!(f, "[{}]", strs.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    #[test]
    fn descent_locations() {
        let w = perm(&[3, 5, 2, 7, 1, 4, 8, 6]);
        assert_eq!(w.dsl().elems(), &[2, 4, 7]);
        assert!(Permutation::identity(6).dsl().is_empty());
        assert_eq!(perm(&[2, 4, 1, 5, 3]).dsl().elems(), &[2, 4]);
    }

    #[test]
    fn group_structure() {
        let w = perm(&[2, 4, 1, 5, 3]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.sign(), w.inverse().sign());
        assert_eq!(Permutation::longest(4).sign(), 1);
        assert_eq!(Permutation::longest(3).sign(), -1);
        let conj = perm(&[3, 5, 2, 7, 1, 4, 8, 6]).conjugate_by_longest();
        assert_eq!(conj.word(), &[3, 1, 5, 8, 2, 7, 4, 6]);
    }

    #[test]
    fn enumeration_and_extension() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(1).len(), 1);
        let w = perm(&[2, 1, 3]);
        assert_eq!(w.iota().word(), &[2, 1, 3, 4]);
        assert_eq!(w.image(17), 17);
    }

    #[test]
    fn rejects_bad_words() {
        assert!(Permutation::from_word(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_word(vec![0, 1]).is_err());
        assert!(Permutation::from_word(vec![3, 1]).is_err());
    }
}
