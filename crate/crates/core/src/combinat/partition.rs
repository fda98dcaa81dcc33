//! Partitions and compositions of an integer.

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::invalid("partition parts must be weakly decreasing"));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }

    /// Sort the given positive parts decreasingly.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Lengths of the columns, left to right (the transpose's parts).
    pub fn column_lengths(&self) -> Vec<usize> {
        self.transpose().parts
    }

    /// For each column length `a`: `(a, q_a, t_a)` where the columns of length
    /// `a` are exactly those with index in `q_a+1 ..= q_a+t_a`.
    pub fn column_length_blocks(&self) -> Vec<(usize, usize, usize)> {
        let cols = self.column_lengths();
        let mut out = Vec::new();
        let mut j = 0;
        while j < cols.len() {
            let a = cols[j];
            let start = j;
            while j < cols.len() && cols[j] == a {
                j += 1;
            }
            out.push((a, start, j - start));
        }
        out
    }

    /// Addable boxes `(row, col)` (1-based), listed top row to bottom row.
    pub fn external_corners(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(1, self.part(0) + 1)];
        for r in 1..self.parts.len() {
            if self.parts[r] < self.parts[r - 1] {
                out.push((r + 1, self.parts[r] + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// Shape with the box `v` added; errors unless `v` is an external corner.
    pub fn add_corner(&self, v: (usize, usize)) -> Result<Partition> {
        if !self.external_corners().contains(&v) {
            return Err(Error::NotExternalCorner(v.0, v.1));
        }
        let mut parts = self.parts.clone();
        if v.0 == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[v.0 - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Partition with one more box in the first row.
    pub fn grow_first_row(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }

    /// Cumulative sums, used as a dominance-refining total order key.
    pub fn dominance_key(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n.max(1), &mut cur, &mut out);
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.parts)
    }

    pub fn from_json(v: &Value) -> Result<Partition> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::invalid("partition json must be an array"))?;
        let parts = arr
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid("partition entries must be integers"))?;
        Partition::new(parts)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Sequence of positive parts with a prescribed order (indexed from 0).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("composition parts must be positive"));
        }
        if parts.is_empty() {
            return Err(Error::invalid("composition must have at least one part"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multiset of part values as a partition (forgets the order).
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone()).expect("parts are positive")
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn to_json(&self) -> Value {
        json!(self.parts)
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_and_blocks() {
        let lam = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(lam.transpose().parts(), &[3, 2, 2, 1]);
        // columns: lengths 3,2,2,1 -> blocks (3, q=0, t=1), (2, q=1, t=2), (1, q=3, t=1)
        assert_eq!(
            lam.column_length_blocks(),
            vec![(3, 0, 1), (2, 1, 2), (1, 3, 1)]
        );
    }

    #[test]
    fn corners() {
        let lam = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(
            lam.external_corners(),
            vec![(1, 5), (2, 4), (3, 2), (4, 1)]
        );
        let row = Partition::new(vec![5]).unwrap();
        assert_eq!(row.external_corners().len(), 2);
        let square = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(square.external_corners().len(), 2);
        assert!(lam.add_corner((2, 4)).is_ok());
        assert_eq!(
            lam.add_corner((2, 2)),
            Err(Error::NotExternalCorner(2, 2))
        );
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::all(0).len(), 1);
        let sixes = Partition::all(6);
        assert_eq!(sixes[0].parts(), &[6]);
        assert_eq!(sixes[10].parts(), &[1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }
}
