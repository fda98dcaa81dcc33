//! Subsets of `{1..n-1}` and the stars-and-bars bijection with compositions.

use serde_json::{json, Value};

use crate::combinat::Composition;
use crate::error::{Error, Result};

/// A subset of `{1, ..., n-1}` carrying its ambient `n` explicitly.
///
/// Complementation and the `i -> n - i` reflection depend on the ambient
/// size, so the pair is kept together to avoid off-by-`n` mistakes.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SubsetI {
    n: usize,
    elems: Vec<usize>,
}

impl SubsetI {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&last) = elems.last() {
            if last >= n || elems[0] == 0 {
                return Err(Error::SetOutOfRange {
                    set: elems,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(SubsetI { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        SubsetI { n, elems: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        SubsetI {
            n,
            elems: (1..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// `k = |I| + 1`, the number of blocks of the associated composition.
    pub fn k(&self) -> usize {
        self.elems.len() + 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubsetI) -> bool {
        self.elems.iter().all(|&i| other.contains(i))
    }

    pub fn max(&self) -> usize {
        self.elems.last().copied().unwrap_or(0)
    }

    /// Insert a new element; errors when already present or out of range.
    pub fn with(&self, ell: usize) -> Result<SubsetI> {
        if self.contains(ell) {
            return Err(Error::AlreadyInSet(ell));
        }
        let mut elems = self.elems.clone();
        elems.push(ell);
        SubsetI::new(self.n, elems)
    }

    /// The complement inside `{1..n-1}`.
    pub fn complement(&self) -> SubsetI {
        let elems = (1..self.n).filter(|i| !self.contains(*i)).collect();
        SubsetI { n: self.n, elems }
    }

    /// `{n - i | i in self}`.
    pub fn reflect(&self) -> SubsetI {
        let mut elems: Vec<usize> = self.elems.iter().map(|&i| self.n - i).collect();
        elems.sort_unstable();
        SubsetI { n: self.n, elems }
    }

    /// Same elements viewed inside `{1..m-1}` for a larger ambient `m`.
    pub fn with_ambient(&self, m: usize) -> Result<SubsetI> {
        SubsetI::new(m, self.elems.clone())
    }

    /// `comp_n`: the composition of `n` whose cumulative sums are this subset.
    pub fn composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.k());
        let mut prev = 0;
        for &j in &self.elems {
            parts.push(j - prev);
            prev = j;
        }
        parts.push(self.n - prev);
        Composition::new(parts).expect("cumulative gaps are positive")
    }

    /// Inverse of [`composition`](Self::composition): cumulative sums
    /// intersected with `{1..n-1}`.
    pub fn from_composition(alpha: &Composition) -> SubsetI {
        let n = alpha.n();
        let mut elems = Vec::new();
        let mut acc = 0;
        for &a in alpha.parts() {
            acc += a;
            if acc < n {
                elems.push(acc);
            }
        }
        SubsetI { n, elems }
    }

    /// Count of complement elements strictly below `i` (the multiplier index
    /// `r_i` used in the non-homogeneous constructions).
    pub fn r_value(&self, i: usize) -> usize {
        (1..i).filter(|j| *j < self.n && !self.contains(*j)).count()
    }

    /// All subsets of `{1..n-1}`, ordered by size then lexicographically.
    pub fn all(n: usize) -> Vec<SubsetI> {
        let mut out: Vec<SubsetI> = Vec::new();
        let ground: Vec<usize> = (1..n).collect();
        let total = 1usize << ground.len();
        for mask in 0..total {
            let elems: Vec<usize> = ground
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(SubsetI { n, elems });
        }
        out.sort_by(|a, b| (a.len(), &a.elems).cmp(&(b.len(), &b.elems)));
        out
    }

    /// All subsets of `{1..n-1}` with exactly `size` elements.
    pub fn all_of_size(n: usize, size: usize) -> Vec<SubsetI> {
        SubsetI::all(n).into_iter().filter(|s| s.len() == size).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "elements": self.elems })
    }

    pub fn from_json(v: &Value) -> Result<SubsetI> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::invalid("subset json: missing n"))? as usize;
        let elems = v
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("subset json: missing elements"))?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::invalid("subset elements must be integers"))?;
        SubsetI::new(n, elems)
    }
}

impl std::fmt::Display for SubsetI {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", strs.join(","))
    }
}
