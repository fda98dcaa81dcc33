//! Independent brute-force ground truth: ordered-set-partition enumeration,
//! permutation-module characters, Kostka numbers, Murnaghan-Nakayama, and
//! exact rational linear algebra.
//!
//! Nothing here touches the Specht construction path; the point is that the
//! two sides can disagree only when one of them is wrong.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::combinat::{Composition, OrderedSetPartition, Partition, Permutation, SubsetI};
use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, Polynomial};

/// `n! / prod(parts!)` as an exact integer.
pub fn multinomial(parts: &[usize]) -> u64 {
    let n: usize = parts.iter().sum();
    let mut value = 1u64;
    let mut denom_parts: Vec<usize> = Vec::new();
    for &p in parts {
        for i in 1..=p {
            denom_parts.push(i);
        }
    }
    let mut di = 0;
    for i in 1..=n {
        value *= i as u64;
        while di < denom_parts.len() && value % denom_parts[di] as u64 == 0 {
            value /= denom_parts[di] as u64;
            di += 1;
        }
    }
    for &d in &denom_parts[di..] {
        value /= d as u64;
    }
    value
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn stirling2(n: usize, k: usize) -> u64 {
    if k == 0 {
        return (n == 0) as u64;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// All ordered set partitions of `{1..n}` with block sizes `comp_n(I)`,
/// in lexicographic block order.
pub fn enumerate_osp(n: usize, i: &SubsetI) -> Vec<OrderedSetPartition> {
    assert_eq!(i.n(), n, "subset carries a different ambient size");
    let sizes: Vec<usize> = i.composition().parts().to_vec();
    let mut out = Vec::with_capacity(multinomial(&sizes) as usize);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut free: Vec<usize> = (1..=n).collect();
    fn rec(
        sizes: &[usize],
        free: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<OrderedSetPartition>,
        n: usize,
    ) {
        if blocks.len() == sizes.len() {
            out.push(
                OrderedSetPartition::new(n, blocks.clone()).expect("constructed as a partition"),
            );
            return;
        }
        let size = sizes[blocks.len()];
        let mut choice = vec![0usize; size];
        fn choose(
            start: usize,
            depth: usize,
            size: usize,
            choice: &mut Vec<usize>,
            sizes: &[usize],
            free: &mut Vec<usize>,
            blocks: &mut Vec<Vec<usize>>,
            out: &mut Vec<OrderedSetPartition>,
            n: usize,
        ) {
            if depth == size {
                let block: Vec<usize> = choice.iter().map(|&idx| free[idx]).collect();
                let rest: Vec<usize> = free
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| !choice.contains(idx))
                    .map(|(_, &v)| v)
                    .collect();
                let saved = std::mem::replace(free, rest);
                blocks.push(block);
                rec(sizes, free, blocks, out, n);
                blocks.pop();
                *free = saved;
                return;
            }
            for idx in start..free.len() {
                choice[depth] = idx;
                choose(idx + 1, depth + 1, size, choice, sizes, free, blocks, out, n);
            }
        }
        choose(0, 0, size, &mut choice, sizes, free, blocks, out, n);
    }
    rec(&sizes, &mut free, &mut blocks, &mut out, n);
    out
}

/// Cycle type of a permutation, as a partition of `n`.
pub fn cycle_type(w: &Permutation) -> Partition {
    let n = w.n();
    let mut seen = vec![false; n + 1];
    let mut lens = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = w.image(cur);
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_unsorted(lens).expect("cycle lengths are positive")
}

/// Canonical representative of the conjugacy class with the given cycle type.
pub fn class_representative(mu: &Partition) -> Permutation {
    let mut word = Vec::with_capacity(mu.n());
    let mut base = 0;
    for &part in mu.parts() {
        for i in 1..part {
            word.push(base + i + 1);
        }
        word.push(base + 1);
        base += part;
    }
    Permutation::from_word(word).expect("disjoint cycles")
}

/// Size of the centralizer `z_mu = prod i^{m_i} m_i!`.
pub fn centralizer_order(mu: &Partition) -> u64 {
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult.iter()
        .map(|(&i, &m)| (i as u64).pow(m as u32) * factorial(m as usize))
        .product()
}

/// Exact class-function values indexed by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterVector {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub values: Vec<i64>,
}

impl CharacterVector {
    pub fn new(n: usize, values: Vec<i64>) -> Self {
        let classes = Partition::all(n);
        assert_eq!(classes.len(), values.len());
        CharacterVector { n, classes, values }
    }

    pub fn value(&self, mu: &Partition) -> i64 {
        let idx = self
            .classes
            .iter()
            .position(|c| c == mu)
            .expect("cycle type of the right size");
        self.values[idx]
    }

    /// `<self, other> = sum over classes of self * other / z_mu`; errors when
    /// the result is not a non-negative integer.
    pub fn inner_product(&self, other: &CharacterVector) -> Result<i64> {
        assert_eq!(self.n, other.n);
        let mut acc = Coeff::zero();
        for ((mu, &a), &b) in self.classes.iter().zip(&self.values).zip(&other.values) {
            let z = Coeff::from_integer(num_bigint::BigInt::from(centralizer_order(mu)));
            acc += Coeff::from_integer(num_bigint::BigInt::from(a * b)) / z;
        }
        if !acc.is_integer() || acc.is_negative() {
            return Err(Error::invalid(format!(
                "character inner product {acc} is not a non-negative integer"
            )));
        }
        Ok(acc.to_integer().try_into().unwrap())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .classes
            .iter()
            .zip(&self.values)
            .map(|(mu, v)| json!({ "cycle_type": mu.to_json(), "value": v }))
            .collect();
        json!({ "n": self.n, "values": entries })
    }
}

/// Character of the permutation module `Q[OP_{n,I}]`: fixed-point counts per
/// conjugacy class.
pub fn perm_module_character(n: usize, i: &SubsetI) -> CharacterVector {
    let partitions = enumerate_osp(n, i);
    let values = Partition::all(n)
        .iter()
        .map(|mu| {
            let sigma = class_representative(mu);
            partitions
                .iter()
                .filter(|p| &p.act(&sigma) == *p)
                .count() as i64
        })
        .collect();
    CharacterVector::new(n, values)
}

/// Kostka number `K_{lambda,alpha}`: semi-standard tableaux of shape `lambda`
/// whose content is represented by `alpha` (entries `0..len(alpha)` with the
/// prescribed multiplicities), counted by direct enumeration.
pub fn kostka(lambda: &Partition, alpha: &Composition) -> u64 {
    assert_eq!(lambda.n(), alpha.n(), "sizes must agree");
    let shape: Vec<usize> = lambda.parts().to_vec();
    let mut remaining: Vec<usize> = alpha.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&p| Vec::with_capacity(p)).collect();
    fn rec(
        r: usize,
        c: usize,
        shape: &[usize],
        remaining: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        count: &mut u64,
    ) {
        if r == shape.len() {
            *count += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let lo = {
            let mut lo = 0usize;
            if c > 0 {
                lo = lo.max(rows[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(rows[r - 1][c] + 1);
            }
            lo
        };
        for v in lo..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            rows[r].push(v);
            rec(nr, nc, shape, remaining, rows, count);
            rows[r].pop();
            remaining[v] += 1;
        }
    }
    let mut count = 0;
    if shape.is_empty() {
        return 1;
    }
    rec(0, 0, &shape, &mut remaining, &mut rows, &mut count);
    count
}

/// Irreducible character value `chi^lambda(mu)` by the Murnaghan-Nakayama
/// rule, with memoization.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.n(), mu.n());
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), i64> = HashMap::new();
    mn(lambda.parts(), mu.parts(), &mut memo)
}

fn mn(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let strip = mu[0] as i64;
    let rest = &mu[1..];
    // beta numbers: strictly decreasing, border strip removal = lowering one
    // beta number by the strip length onto a free slot.
    let k = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        let nb = b - strip;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&e| nb < e && e < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = nb;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_lambda: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &e)| (e - (k - 1 - i) as i64) as usize)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The regular-representation character (`n!` at the identity, else 0).
pub fn regular_character(n: usize) -> CharacterVector {
    let values = Partition::all(n)
        .iter()
        .map(|mu| {
            if mu.parts().iter().all(|&p| p == 1) {
                factorial(n) as i64
            } else {
                0
            }
        })
        .collect();
    CharacterVector::new(n, values)
}

pub fn trivial_character(n: usize) -> CharacterVector {
    CharacterVector::new(n, vec![1; Partition::all(n).len()])
}

/// Multiplicity of the irreducible labelled by `lambda` inside `char`,
/// via Murnaghan-Nakayama characters.
pub fn specht_module_multiplicity(char: &CharacterVector, lambda: &Partition) -> Result<i64> {
    let chi = CharacterVector::new(
        char.n,
        Partition::all(char.n)
            .iter()
            .map(|mu| irreducible_character(lambda, mu))
            .collect(),
    );
    char.inner_product(&chi)
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra
// ---------------------------------------------------------------------------

/// Dense matrix of exact rationals with deterministic elimination.
#[derive(Clone, Debug, Default)]
pub struct RationalMatrix {
    pub rows: Vec<Vec<Coeff>>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Coeff>>) -> Self {
        RationalMatrix { rows }
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry in
    /// column order.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
        for r in &mut rows {
            r.resize(ncols, Coeff::zero());
        }
        let mut rank = 0;
        for col in 0..ncols {
            let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
            let Some(p) = pivot else { continue };
            rows.swap(rank, p);
            let inv = rows[rank][col].clone();
            for c in col..ncols {
                let v = rows[rank][c].clone() / &inv;
                rows[rank][c] = v;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in col..ncols {
                        let delta = &rows[rank][c] * &factor;
                        rows[r][c] = &rows[r][c] - delta;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

/// Incrementally built row space of polynomials, with monomials as columns.
///
/// Each stored pivot row is monic on its leading (graded-lex maximal)
/// monomial, and rows are reduced against existing pivots on insertion, so
/// rank queries and membership tests are immediate.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    pivots: BTreeMap<Monomial, Polynomial>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut r = p.clone();
        while let Some((m, c)) = r.leading() {
            match self.pivots.get(m) {
                Some(pivot) => {
                    let c = c.clone();
                    r = r.sub(&pivot.scalar_mul(&c));
                }
                None => break,
            }
        }
        r
    }

    /// Add a polynomial to the span; returns `true` when the rank grew.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        match r.leading() {
            None => false,
            Some((m, c)) => {
                let monic = r.scalar_mul(&(Coeff::one() / c));
                self.pivots.insert(m.clone(), monic);
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn contains_all<'a>(&self, polys: impl IntoIterator<Item = &'a Polynomial>) -> bool {
        polys.into_iter().all(|p| self.contains(p))
    }

    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut s = RowSpace::new();
        for p in polys {
            s.insert(p);
        }
        s
    }

    /// Spans are equal iff each side contains the other.
    pub fn equals_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
        let sa = RowSpace::from_polys(a);
        let sb = RowSpace::from_polys(b);
        sa.rank() == sb.rank() && b.iter().all(|p| sa.contains(p))
    }
}

/// Rank of the span of a list of polynomials.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    RowSpace::from_polys(polys).rank()
}

/// A basis prepared for coordinate queries.
pub struct SolvedBasis {
    // pivot monomial -> (reduced row, its expression in the original basis)
    pivots: BTreeMap<Monomial, (Polynomial, Vec<Coeff>)>,
    dim: usize,
}

impl SolvedBasis {
    /// Requires the polynomials to be linearly independent.
    pub fn new(basis: &[Polynomial]) -> Result<Self> {
        let dim = basis.len();
        let mut solved = SolvedBasis {
            pivots: BTreeMap::new(),
            dim,
        };
        for (j, p) in basis.iter().enumerate() {
            let mut combo = vec![Coeff::zero(); dim];
            combo[j] = Coeff::one();
            let mut r = p.clone();
            loop {
                let Some((m, c)) = r.leading() else {
                    return Err(Error::invalid("basis polynomials are dependent"));
                };
                let Some((pivot, pivot_combo)) = solved.pivots.get(m) else {
                    let inv = Coeff::one() / c;
                    let monic = r.scalar_mul(&inv);
                    for v in combo.iter_mut() {
                        *v = &*v * &inv;
                    }
                    solved.pivots.insert(m.clone(), (monic, combo));
                    break;
                };
                let c = c.clone();
                r = r.sub(&pivot.scalar_mul(&c));
                let pivot_combo = pivot_combo.clone();
                for (v, pc) in combo.iter_mut().zip(&pivot_combo) {
                    *v = &*v - &(pc * &c);
                }
            }
        }
        Ok(solved)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `p` in the original basis, or `NotInvariant` when `p`
    /// lies outside the span.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Coeff>> {
        let mut coords = vec![Coeff::zero(); self.dim];
        let mut r = p.clone();
        while let Some((m, c)) = r.leading() {
            let Some((pivot, combo)) = self.pivots.get(m) else {
                return Err(Error::NotInvariant);
            };
            let c = c.clone();
            r = r.sub(&pivot.scalar_mul(&c));
            for (v, pc) in coords.iter_mut().zip(combo) {
                *v = &*v + &(pc * &c);
            }
        }
        Ok(coords)
    }
}

/// Trace of `sigma` acting on the span of `basis`; errors with
/// `NotInvariant` when the action leaves the span.
pub fn trace_action(sigma: &Permutation, basis: &[Polynomial]) -> Result<Coeff> {
    let solved = SolvedBasis::new(basis)?;
    let mut trace = Coeff::zero();
    for (j, b) in basis.iter().enumerate() {
        let coords = solved.coordinates(&b.act(sigma))?;
        trace += &coords[j];
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::coeff_int;

    #[test]
    fn osp_counts() {
        assert_eq!(
            enumerate_osp(3, &SubsetI::new(3, vec![1]).unwrap()).len(),
            3
        );
        assert_eq!(
            enumerate_osp(4, &SubsetI::new(4, vec![2]).unwrap()).len(),
            6
        );
        assert_eq!(enumerate_osp(5, &SubsetI::empty(5)).len(), 1);
        assert_eq!(enumerate_osp(4, &SubsetI::full(4)).len(), 24);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[1, 1, 2]), 12);
        assert_eq!(stirling2(4, 3), 6);
        assert_eq!(stirling2(6, 1), 1);
        assert_eq!(
            (1..=4).map(|k| factorial(k) * stirling2(4, k)).sum::<u64>(),
            75 // ordered Bell number
        );
    }

    #[test]
    fn perm_module_character_examples() {
        let i = SubsetI::new(3, vec![1]).unwrap();
        let chi = perm_module_character(3, &i);
        assert_eq!(chi.value(&Partition::new(vec![1, 1, 1]).unwrap()), 3);
        assert_eq!(chi.value(&Partition::new(vec![2, 1]).unwrap()), 1);
        let chi = perm_module_character(4, &SubsetI::full(4));
        assert_eq!(chi.value(&Partition::new(vec![1, 1, 1, 1]).unwrap()), 24);
        assert_eq!(chi.value(&Partition::new(vec![2, 1, 1]).unwrap()), 0);
        assert_eq!(chi.value(&Partition::new(vec![4]).unwrap()), 0);
    }

    #[test]
    fn kostka_examples() {
        for lam in Partition::all(5) {
            let alpha = Composition::new(lam.parts().to_vec()).unwrap();
            assert_eq!(kostka(&lam, &alpha), 1);
        }
        let lam = Partition::new(vec![2, 2]).unwrap();
        let alpha = Composition::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(kostka(&lam, &alpha), 2);
        // dimension count: sum over lambda of K * f^lambda = multinomial
        for n in 1..=5usize {
            for i in SubsetI::all(n) {
                let alpha = i.composition();
                let total: u64 = Partition::all(n)
                    .iter()
                    .map(|lam| {
                        kostka(lam, &alpha)
                            * crate::combinat::StandardTableau::all(lam).len() as u64
                    })
                    .sum();
                assert_eq!(total, multinomial(alpha.parts()));
            }
        }
    }

    #[test]
    fn murnaghan_nakayama() {
        // regular character decomposition: multiplicity f^lambda
        for n in 1..=5usize {
            let reg = regular_character(n);
            for lam in Partition::all(n) {
                let f = crate::combinat::StandardTableau::all(&lam).len() as i64;
                assert_eq!(specht_module_multiplicity(&reg, &lam).unwrap(), f);
                // character at identity is the dimension
                let id = Partition::new(vec![1; n]).unwrap();
                assert_eq!(irreducible_character(&lam, &id), f);
            }
        }
        // trivial character
        for lam in Partition::all(4) {
            let expected = (lam.parts() == [4]) as i64;
            assert_eq!(
                specht_module_multiplicity(&trivial_character(4), &lam).unwrap(),
                expected
            );
        }
        // sign character values
        let lam = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(irreducible_character(&lam, &Partition::new(vec![2, 1]).unwrap()), -1);
        assert_eq!(irreducible_character(&lam, &Partition::new(vec![3]).unwrap()), 1);
        // orthogonality spot check: standard rep of S_4
        let lam = Partition::new(vec![3, 1]).unwrap();
        let mu = Partition::new(vec![2, 2]).unwrap();
        assert_eq!(irreducible_character(&lam, &mu), -1);
    }

    #[test]
    fn perm_module_multiplicity_is_kostka() {
        for n in 1..=5usize {
            for i in SubsetI::all(n) {
                let chi = perm_module_character(n, &i);
                let alpha = i.reflect().composition();
                for lam in Partition::all(n) {
                    assert_eq!(
                        specht_module_multiplicity(&chi, &lam).unwrap() as u64,
                        kostka(&lam, &alpha),
                        "n={n} I={i} lambda={lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn linear_algebra() {
        let p1 = Polynomial::parse("x1 + x2", 2).unwrap();
        let p2 = Polynomial::parse("x1 - x2", 2).unwrap();
        let p3 = Polynomial::parse("2*x1", 2).unwrap();
        assert_eq!(span_rank(&[p1.clone(), p2.clone(), p3.clone()]), 2);
        assert_eq!(span_rank(&[p1.clone(), p1.clone()]), 1);
        let space = RowSpace::from_polys([&p1, &p2]);
        assert!(space.contains(&p3));
        assert!(!space.contains(&Polynomial::one(2)));

        let m = RationalMatrix::new(vec![
            vec![coeff_int(1), coeff_int(2)],
            vec![coeff_int(2), coeff_int(4)],
            vec![coeff_int(0), coeff_int(1)],
        ]);
        assert_eq!(m.rank(), 2);

        let basis = [p1.clone(), p2.clone()];
        let id = Permutation::identity(2);
        assert_eq!(trace_action(&id, &basis).unwrap(), coeff_int(2));
        let swap = Permutation::from_word(vec![2, 1]).unwrap();
        // p1 fixed, p2 negated: trace 0
        assert_eq!(trace_action(&swap, &basis).unwrap(), coeff_int(0));
        // non-invariant span
        let bad = [Polynomial::var(1, 2)];
        assert_eq!(trace_action(&swap, &bad), Err(Error::NotInvariant));
    }
}
