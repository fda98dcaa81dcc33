//! Orbit decompositions of generalized coinvariant representations and the
//! corner-sum operators relating them.
//!
//! A decomposition is an ordered list of summand indices `(shape, S, hvec)`,
//! each naming the span of the higher Specht polynomials of `S` multiplied
//! by `prod e_r^{h_r}`. Identity checks run on the index lists first and on
//! realized polynomial spans when asked.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::combinat::{
    cocharge, ct, evacuation, rsk_inverse, CochargeTableau, OrderedSetPartition, Partition,
    Permutation, StandardTableau, SubsetI,
};
use crate::error::{Error, Result};
use crate::oracle::{self, RowSpace};
use crate::polyring::{elementary_e, Polynomial};
use crate::specht::{f_w, f_w_i, f_w_i_hom, higher_specht, symmetrize_pair, SpechtIndex};

/// Finitely supported exponent vector `r -> h_r` for elementary symmetric
/// multipliers; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct HVector {
    entries: BTreeMap<usize, usize>,
}

impl HVector {
    pub fn zero() -> Self {
        HVector::default()
    }

    /// Count the positive values of a multiplier index list.
    pub fn from_multipliers(rs: &[usize]) -> Self {
        let mut entries = BTreeMap::new();
        for &r in rs {
            if r > 0 {
                *entries.entry(r).or_insert(0) += 1;
            }
        }
        HVector { entries }
    }

    /// Characteristic vector of a set of indices.
    pub fn characteristic(set: &[usize]) -> Self {
        HVector::from_multipliers(set)
    }

    pub fn get(&self, r: usize) -> usize {
        self.entries.get(&r).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&r, &h)| (r, h))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `h_t += 1` for `t >= 1`; `t = 0` is the empty multiplier.
    pub fn bump(&self, t: usize) -> HVector {
        let mut out = self.clone();
        if t > 0 {
            *out.entries.entry(t).or_insert(0) += 1;
        }
        out
    }

    /// Total count of multipliers.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// `sum of r * h_r`: the degree the multipliers contribute.
    pub fn weighted_sum(&self) -> usize {
        self.entries.iter().map(|(&r, &h)| r * h).sum()
    }

    pub fn max_index(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    /// `prod e_r^{h_r}` in `nvars` variables (zero when some `r > nvars`).
    pub fn e_product(&self, nvars: usize) -> Polynomial {
        let mut out = Polynomial::one(nvars);
        for (&r, &h) in &self.entries {
            let e = elementary_e(r, nvars);
            for _ in 0..h {
                out = out.mul(&e);
            }
        }
        out
    }

    /// Membership in the vector set attached to `(k, d)` for ambient `n`:
    /// support inside `1..=n-k` and total strictly below `k - d`.
    pub fn in_h_set(&self, n: usize, k: usize, d: usize) -> bool {
        self.max_index() <= n.saturating_sub(k) && self.total() + d < k
    }

    /// All vectors with support in `1..=max_r` and total at most `max_total`.
    pub fn enumerate(max_r: usize, max_total: usize) -> Vec<HVector> {
        let mut out = vec![HVector::zero()];
        for r in 1..=max_r {
            let mut next = Vec::new();
            for h in &out {
                let budget = max_total - h.total();
                for add in 0..=budget {
                    let mut e = h.clone();
                    if add > 0 {
                        e.entries.insert(r, add);
                    }
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self.entries().map(|(r, h)| json!([r, h])).collect();
        json!(pairs)
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .entries()
            .map(|(r, h)| {
                if h == 1 {
                    format!("e{r}")
                } else {
                    format!("e{r}^{h}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Index of one irreducible summand: shape, standard index tableau, and the
/// elementary-symmetric multiplier vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompIndex {
    pub shape: Partition,
    pub index: StandardTableau,
    pub hvec: HVector,
}

impl DecompIndex {
    pub fn new(index: StandardTableau, hvec: HVector) -> Self {
        DecompIndex {
            shape: index.shape(),
            index,
            hvec,
        }
    }

    pub fn cocharge_index(&self) -> CochargeTableau {
        ct(&self.index)
    }

    /// Homogeneity degree of the realized span.
    pub fn degree(&self) -> usize {
        cocharge(&self.index) + self.hvec.weighted_sum()
    }

    /// `prod e_r^{h_r}`: the maximal symmetric divisor of every nonzero
    /// element of the realized span.
    pub fn max_symmetric_divisor(&self, nvars: usize) -> Polynomial {
        self.hvec.e_product(nvars)
    }

    /// Sort key: shape by the dominance-refining cumulative-sum order
    /// (descending), then index tableau by reading word, then the vector.
    fn sort_key(&self) -> (Vec<i64>, Vec<usize>, Vec<(usize, usize)>) {
        let dom: Vec<i64> = self.shape.dominance_key().iter().map(|&c| -(c as i64)).collect();
        (
            dom,
            self.index.reading_word(),
            self.hvec.entries().collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "shape": self.shape.to_json(),
            "S": self.index.to_json(),
            "C": self.cocharge_index().to_json(),
            "hvec": self.hvec.to_json(),
            "degree": self.degree(),
        })
    }
}

impl std::fmt::Display for DecompIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word: Vec<String> = self
            .index
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<String>())
            .collect();
        write!(f, "V^{{{}}}", word.join("/"))?;
        if !self.hvec.is_zero() {
            write!(f, " {}", self.hvec)?;
        }
        Ok(())
    }
}

/// How to treat an index set that overflows `{1..n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OverflowPolicy {
    /// Refuse (the default: the conventions below are a caller's choice).
    #[default]
    Reject,
    /// Intersect the set with `{1..n-1}` first.
    Intersect,
    /// Keep the set, letting `e_i = 0` for `i > n` kill summands.
    VanishingE,
}

/// An ordered list of summand indices over a fixed ambient `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub n: usize,
    /// The subset that built this decomposition, when one did.
    pub subset: Option<SubsetI>,
    pub hom: bool,
    pub summands: Vec<DecompIndex>,
}

impl Decomposition {
    pub fn dimension(&self) -> usize {
        self.summands
            .iter()
            .map(|s| StandardTableau::all(&s.shape).len())
            .sum()
    }

    /// Basis polynomials of one summand: the higher Specht polynomials of
    /// every standard filling, times the summand's symmetric multiplier.
    pub fn realize_summand(&self, idx: &DecompIndex) -> Vec<Polynomial> {
        v_basis(idx, self.n)
    }

    /// All basis polynomials, summand by summand.
    pub fn realize(&self) -> Vec<Polynomial> {
        self.summands
            .iter()
            .flat_map(|s| self.realize_summand(s))
            .collect()
    }

    pub fn sorted_summands(&self) -> Vec<DecompIndex> {
        let mut out = self.summands.clone();
        out.sort_by_key(|s| s.sort_key());
        out
    }

    /// Equality as multisets of summand indices.
    pub fn same_summands(&self, other: &Decomposition) -> bool {
        self.n == other.n && self.sorted_summands() == other.sorted_summands()
    }

    /// First summand present in exactly one of the two lists, for reports.
    pub fn first_mismatch(&self, other: &Decomposition) -> Option<String> {
        let a = self.sorted_summands();
        let b = other.sorted_summands();
        for (x, y) in a.iter().zip(&b) {
            if x != y {
                return Some(format!("{x} vs {y}"));
            }
        }
        match a.len().cmp(&b.len()) {
            std::cmp::Ordering::Less => Some(format!("missing {}", b[a.len()])),
            std::cmp::Ordering::Greater => Some(format!("extra {}", a[b.len()])),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Multiplicity of each shape among the summands.
    pub fn shape_multiplicities(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for s in &self.summands {
            *out.entry(s.shape.parts().to_vec()).or_insert(0) += 1;
        }
        out
    }

    pub fn to_json(&self, realize: bool) -> Value {
        let summands: Vec<Value> = self
            .summands
            .iter()
            .map(|s| {
                let mut v = s.to_json();
                if realize {
                    let basis: Vec<Value> = self
                        .realize_summand(s)
                        .iter()
                        .map(|p| p.to_json())
                        .collect();
                    v["basis"] = json!(basis);
                }
                v
            })
            .collect();
        json!({
            "n": self.n,
            "I": self.subset.as_ref().map(|s| s.elems().to_vec()),
            "hom": self.hom,
            "summands": summands,
            "dimension": self.dimension(),
        })
    }
}

/// Basis of the summand `V^S_h`: `{F_T^S * prod e_r^{h_r}}` over standard `T`.
pub fn v_basis(idx: &DecompIndex, nvars: usize) -> Vec<Polynomial> {
    let e = idx.hvec.e_product(nvars);
    StandardTableau::all(&idx.shape)
        .iter()
        .map(|t| {
            higher_specht(t.as_tableau(), &SpechtIndex::Standard(idx.index.clone()))
                .expect("matching shapes")
                .poly
                .with_nvars(nvars)
                .mul(&e)
        })
        .collect()
}

/// The multiplier vector of a summand `S` in the decomposition attached to
/// `I`: counts of `r_i` over `I minus Dsi^c(S)` (non-homogeneous flavor), or
/// the characteristic vector of that set (homogeneous flavor).
pub fn hvec_for(s: &StandardTableau, i: &SubsetI, hom: bool) -> HVector {
    let dsi_c = s.dsi_c();
    let a: Vec<usize> = i
        .elems()
        .iter()
        .filter(|&&x| !dsi_c.contains(x))
        .copied()
        .collect();
    if hom {
        HVector::characteristic(&a)
    } else {
        let rs: Vec<usize> = a.iter().map(|&x| i.r_value(x)).collect();
        HVector::from_multipliers(&rs)
    }
}

/// Partitions of `n` in the dominance-refining order used for summand lists.
fn ordered_shapes(n: usize) -> Vec<Partition> {
    let mut shapes = Partition::all(n);
    shapes.sort_by_key(|p| {
        p.dominance_key()
            .iter()
            .map(|&c| -(c as i64))
            .collect::<Vec<_>>()
    });
    shapes
}

/// The orbit representation `R_{n,I}` (or its homogeneous variant) as a
/// decomposition: summands over standard tableaux whose reflected descent
/// set lies inside `I`.
pub fn build_rni(n: usize, i: &SubsetI, hom: bool) -> Decomposition {
    assert_eq!(i.n(), n, "subset must carry ambient size n");
    let mut summands = Vec::new();
    for shape in ordered_shapes(n) {
        for s in StandardTableau::all(&shape) {
            if s.dsi_c().is_subset_of(i) {
                let hvec = hvec_for(&s, i, hom);
                summands.push(DecompIndex::new(s, hvec));
            }
        }
    }
    Decomposition {
        n,
        subset: Some(i.clone()),
        hom,
        summands,
    }
}

/// `build_rni` with a policy for sets that overflow `{1..n-1}`.
pub fn build_rni_policy(
    n: usize,
    elems: &[usize],
    hom: bool,
    policy: OverflowPolicy,
) -> Result<Decomposition> {
    let fits = elems.iter().all(|&x| x >= 1 && x < n);
    if fits {
        return Ok(build_rni(n, &SubsetI::new(n, elems.to_vec())?, hom));
    }
    match policy {
        OverflowPolicy::Reject => Err(Error::SetOutOfRange {
            set: elems.to_vec(),
            max: n.saturating_sub(1),
        }),
        OverflowPolicy::Intersect => {
            let kept: Vec<usize> = elems.iter().copied().filter(|&x| x >= 1 && x < n).collect();
            Ok(build_rni(n, &SubsetI::new(n, kept)?, hom))
        }
        OverflowPolicy::VanishingE => {
            let mut sorted: Vec<usize> = elems.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            let mut summands = Vec::new();
            for shape in ordered_shapes(n) {
                for s in StandardTableau::all(&shape) {
                    let dsi_c = s.dsi_c();
                    if !dsi_c.elems().iter().all(|x| sorted.contains(x)) {
                        continue;
                    }
                    let a: Vec<usize> = sorted
                        .iter()
                        .filter(|&&x| !dsi_c.contains(x))
                        .copied()
                        .collect();
                    let hvec = if hom {
                        if a.iter().any(|&x| x > n) {
                            continue; // e_i = 0 for i > n kills the summand
                        }
                        HVector::characteristic(&a)
                    } else {
                        let rs: Vec<usize> = a
                            .iter()
                            .map(|&x| (1..x.min(n)).filter(|j| !sorted.contains(j)).count())
                            .collect();
                        HVector::from_multipliers(&rs)
                    };
                    summands.push(DecompIndex::new(s, hvec));
                }
            }
            Ok(Decomposition {
                n,
                subset: None,
                hom,
                summands,
            })
        }
    }
}

/// `R_{n,k}`: concatenation of `R_{n,I}` over all `I` of size `k-1`.
pub fn build_rnk(n: usize, k: usize, hom: bool) -> Result<Decomposition> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!("need 1 <= k <= n, got k={k}")));
    }
    let mut summands = Vec::new();
    for i in SubsetI::all_of_size(n, k - 1) {
        summands.extend(build_rni(n, &i, hom).summands);
    }
    Ok(Decomposition {
        n,
        subset: None,
        hom,
        summands,
    })
}

/// The polynomials `F_{w,I}` over all `w` with `Dsl(w)` inside `I`: the
/// spanning set the representation is defined by, enumerated through the
/// ordered-set-partition bijection.
pub fn spanning_set(n: usize, i: &SubsetI, hom: bool) -> Vec<(Permutation, Polynomial)> {
    oracle::enumerate_osp(n, i)
        .iter()
        .map(|p| {
            let w = p.to_permutation();
            let f = if hom {
                f_w_i_hom(&w, i).expect("Dsl(w) inside I by the bijection")
            } else {
                f_w_i(&w, i).expect("Dsl(w) inside I by the bijection")
            };
            (w, f.poly)
        })
        .collect()
}

/// Forward direction of the subset/vector bijection: `I -> hvec` for a fixed
/// reflected descent set `D` contained in `I`.
pub fn hvec_from_subset(d: &SubsetI, i: &SubsetI) -> Result<HVector> {
    if !d.is_subset_of(i) {
        return Err(Error::DescentsNotContained {
            found: d.elems().to_vec(),
            required: i.elems().to_vec(),
        });
    }
    let a: Vec<usize> = i
        .elems()
        .iter()
        .filter(|&&x| !d.contains(x))
        .copied()
        .collect();
    let rs: Vec<usize> = a.iter().map(|&x| i.r_value(x)).collect();
    Ok(HVector::from_multipliers(&rs))
}

/// Inverse of [`hvec_from_subset`]: greedy reconstruction of `I` of size
/// `k-1` containing `D`, walking the complement of `D` and skipping one
/// element between multiplier groups.
pub fn subset_from_hvec(d: &SubsetI, hvec: &HVector, k: usize) -> Result<SubsetI> {
    let n = d.n();
    let need = k
        .checked_sub(1 + d.len())
        .ok_or_else(|| Error::invalid("k is too small for the descent set"))?;
    let total = hvec.total();
    if total > need {
        return Err(Error::invalid("vector total exceeds the available slots"));
    }
    let h0 = need - total;
    let pool: Vec<usize> = (1..n).filter(|x| !d.contains(*x)).collect();
    let mut a = Vec::with_capacity(need);
    let mut pos = 0usize;
    let max_r = hvec.max_index();
    for r in 0..=max_r {
        let take = if r == 0 { h0 } else { hvec.get(r) };
        if r > 0 {
            pos += 1; // skip one pool element between groups
        }
        for _ in 0..take {
            if pos >= pool.len() {
                return Err(Error::invalid("vector does not fit inside the ambient set"));
            }
            a.push(pool[pos]);
            pos += 1;
        }
    }
    let mut elems = d.elems().to_vec();
    elems.extend(a);
    SubsetI::new(n, elems)
}

/// Enlarge the index set by one element, transforming the summand list the
/// way the containment relation prescribes: homogeneous summands gain an
/// `e_ell` multiplier; non-homogeneous multipliers `e_{r_i}` with `i > ell`
/// drop to `e_{r_i - 1}` and the old part gains `e_r` with `r` counting the
/// complement below `ell`. New summands carry `ell` in their descent set.
pub fn enlarge_i(dec: &Decomposition, ell: usize) -> Result<Decomposition> {
    let i = dec
        .subset
        .as_ref()
        .ok_or_else(|| Error::invalid("decomposition does not carry its index set"))?;
    if i.contains(ell) {
        return Err(Error::AlreadyInSet(ell));
    }
    let enlarged = i.with(ell)?;
    let n = dec.n;
    let mut summands = Vec::new();
    for s in &dec.summands {
        let hvec = if dec.hom {
            s.hvec.bump(ell)
        } else {
            let dsi_c = s.index.dsi_c();
            let mut rs: Vec<usize> = i
                .elems()
                .iter()
                .filter(|&&x| !dsi_c.contains(x))
                .map(|&x| {
                    let r = i.r_value(x);
                    if x > ell {
                        r - 1
                    } else {
                        r
                    }
                })
                .collect();
            rs.push(i.r_value(ell));
            HVector::from_multipliers(&rs)
        };
        summands.push(DecompIndex::new(s.index.clone(), hvec));
    }
    for shape in ordered_shapes(n) {
        for s in StandardTableau::all(&shape) {
            let dsi_c = s.dsi_c();
            if dsi_c.contains(ell) && dsi_c.is_subset_of(&enlarged) {
                let hvec = hvec_for(&s, &enlarged, dec.hom);
                summands.push(DecompIndex::new(s, hvec));
            }
        }
    }
    summands.sort_by_key(|s| s.sort_key());
    let mut out = Decomposition {
        n,
        subset: Some(enlarged),
        hom: dec.hom,
        summands,
    };
    out.summands.sort_by_key(|s| s.sort_key());
    Ok(out)
}

/// Whether the corner `v` sits strictly below the row of `n` in `ev S`; the
/// complementary indicator is the `delta` of the induction operators.
pub fn delta(s: &StandardTableau, v: (usize, usize)) -> usize {
    let ev = evacuation(s);
    let (row_n, _) = ev.position_of(s.n());
    if v.0 > row_n {
        0
    } else {
        1
    }
}

/// Corner images of one summand: `(corner, delta, mapped index)` with the
/// vector bumped at `t` when `delta = 1`.
fn ind_images(idx: &DecompIndex, t: usize) -> Vec<((usize, usize), usize, DecompIndex)> {
    let ev = evacuation(&idx.index);
    let (row_n, _) = ev.position_of(idx.index.n());
    idx.shape
        .external_corners()
        .into_iter()
        .map(|v| {
            let d = if v.0 > row_n { 0 } else { 1 };
            let new_s = idx.index.add_corner_ev(v).expect("external corner");
            let hvec = if d == 1 { idx.hvec.bump(t) } else { idx.hvec.clone() };
            (v, d, DecompIndex::new(new_s, hvec))
        })
        .collect()
}

/// The induction operator `Ind_t`: every summand fans out over the external
/// corners of its shape, multiplier `e_t` attached exactly at the corners
/// not lying below `n` in the evacuated index tableau.
pub fn ind_t(dec: &Decomposition, t: usize) -> Decomposition {
    assert!(t <= dec.n + 1, "e_t must make sense in n+1 variables");
    let summands = dec
        .summands
        .iter()
        .flat_map(|s| ind_images(s, t).into_iter().map(|(_, _, idx)| idx))
        .collect();
    Decomposition {
        n: dec.n + 1,
        subset: None,
        hom: dec.hom,
        summands,
    }
}

/// The extension operator: keep only the `delta = 1` corners, vectors
/// unchanged. Never annihilates a nonzero decomposition.
pub fn ext(dec: &Decomposition) -> Decomposition {
    let summands = dec
        .summands
        .iter()
        .flat_map(|s| {
            ind_images(s, 0)
                .into_iter()
                .filter(|(_, d, _)| *d == 1)
                .map(|(_, _, idx)| idx)
        })
        .collect();
    Decomposition {
        n: dec.n + 1,
        subset: None,
        hom: dec.hom,
        summands,
    }
}

/// Verification outcome with the first counterexample when one exists.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub claim: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "cases": self.cases,
            "ok": self.ok(),
            "failures": self.failures,
        })
    }
}

fn check_pair(
    claim: &str,
    lhs: &Decomposition,
    rhs: &Decomposition,
    realized: bool,
    report: &mut CheckReport,
) {
    report.cases += 1;
    if !lhs.same_summands(rhs) {
        report.failures.push(format!(
            "{claim}: summand mismatch: {}",
            lhs.first_mismatch(rhs).unwrap_or_default()
        ));
        return;
    }
    if realized {
        let a = lhs.realize();
        let b = rhs.realize();
        if !RowSpace::equals_span(&a, &b) {
            report.failures.push(format!("{claim}: realized spans differ"));
        }
    }
}

/// Bar insertion lifts induction: `R_{n+1, I + {n}} = Ind_{n-k} R_{n,I}` and
/// its homogeneous counterpart with `t = n`.
pub fn verify_emb_ind(n: usize, i: &SubsetI, realized: bool) -> CheckReport {
    let mut report = CheckReport {
        claim: format!("bar insertion lifts induction at n={n}, I={i}"),
        cases: 0,
        failures: Vec::new(),
    };
    let k = i.k();
    let enlarged = i
        .with_ambient(n + 1)
        .and_then(|s| s.with(n))
        .expect("n is new for the larger ambient");
    for hom in [false, true] {
        let t = if hom { n } else { n - k };
        let lhs = build_rni(n + 1, &enlarged, hom);
        let rhs = ind_t(&build_rni(n, i, hom), t);
        check_pair(
            &format!("hom={hom} t={t}"),
            &lhs,
            &rhs,
            realized,
            &mut report,
        );
    }
    report
}

/// Star insertion stabilizes the index set: `R_{n+1,I} = Ext R_{n,I}`.
pub fn verify_emb_reps(n: usize, i: &SubsetI, realized: bool) -> CheckReport {
    let mut report = CheckReport {
        claim: format!("star insertion extends at n={n}, I={i}"),
        cases: 0,
        failures: Vec::new(),
    };
    let bigger = i.with_ambient(n + 1).expect("same elements fit");
    for hom in [false, true] {
        let lhs = build_rni(n + 1, &bigger, hom);
        let rhs = ext(&build_rni(n, i, hom));
        check_pair(&format!("hom={hom}"), &lhs, &rhs, realized, &mut report);
    }
    report
}

/// `R_{n+1,k+1} = Ind_{n-k} R_{n,k} + Ext R_{n,k+1}` (either part empty in
/// the extreme cases).
pub fn verify_rnk_ind(n: usize, k: usize, realized: bool) -> CheckReport {
    let mut report = CheckReport {
        claim: format!("R_{{n+1,k+1}} assembly at n={n}, k={k}"),
        cases: 0,
        failures: Vec::new(),
    };
    for hom in [false, true] {
        let lhs = build_rnk(n + 1, k + 1, hom).expect("k+1 <= n+1");
        let t = if hom { n } else { n - k };
        let mut summands = Vec::new();
        if k >= 1 {
            summands.extend(ind_t(&build_rnk(n, k, hom).expect("k <= n"), t).summands);
        }
        if k < n {
            summands.extend(ext(&build_rnk(n, k + 1, hom).expect("k+1 <= n")).summands);
        }
        let rhs = Decomposition {
            n: n + 1,
            subset: None,
            hom,
            summands,
        };
        check_pair(&format!("hom={hom}"), &lhs, &rhs, realized, &mut report);
    }
    report
}

/// Enlargement by one element agrees with building from scratch.
pub fn verify_enlarge(n: usize, i: &SubsetI, ell: usize, realized: bool) -> CheckReport {
    let mut report = CheckReport {
        claim: format!("index-set enlargement at n={n}, I={i}, ell={ell}"),
        cases: 0,
        failures: Vec::new(),
    };
    let enlarged = i.with(ell).expect("ell is new");
    for hom in [false, true] {
        let lhs = build_rni(n, &enlarged, hom);
        let rhs = enlarge_i(&build_rni(n, i, hom), ell).expect("carries its subset");
        check_pair(&format!("hom={hom}"), &lhs, &rhs, realized, &mut report);
    }
    report
}

/// The degree-based statistic on ordered set partitions with blocks cut by
/// `I`: the homogeneity degree of `F_{w,I}`.
pub fn genmaj_stat(w: &Permutation, i: &SubsetI) -> Result<usize> {
    let dsl = w.dsl();
    if !dsl.is_subset_of(i) {
        return Err(Error::DescentsNotContained {
            found: dsl.elems().to_vec(),
            required: i.elems().to_vec(),
        });
    }
    let descents: usize = dsl.elems().iter().sum();
    let multipliers: usize = i
        .elems()
        .iter()
        .filter(|&&x| !dsl.contains(x))
        .map(|&x| i.r_value(x))
        .sum();
    Ok(descents + multipliers)
}

/// Divide an element of a summand's span by the recorded maximal symmetric
/// divisor, confirming exact divisibility.
pub fn strip_symmetric_divisor(p: &Polynomial, idx: &DecompIndex, nvars: usize) -> Result<Polynomial> {
    p.exact_divide(&idx.max_symmetric_divisor(nvars))
}

/// A generator of the summand's realized span: `F_w * prod e_r^{h_r}` for a
/// permutation with recording data matching the index tableau.
pub fn summand_generator(idx: &DecompIndex, nvars: usize) -> (Permutation, Polynomial) {
    let t0 = StandardTableau::all(&idx.shape)
        .into_iter()
        .next()
        .expect("shape has standard tableaux");
    let w = rsk_inverse(&t0, &evacuation(&idx.index)).expect("same shape");
    let poly = f_w(&w)
        .poly
        .with_nvars(nvars)
        .mul(&idx.hvec.e_product(nvars));
    (w, poly)
}

/// One-step extension of a generator: strip the symmetric divisor,
/// symmetrize the variable in the box `(1, lambda_2 + 1)` of `P(w)` with the
/// fresh variable, and multiply the divisor back over `n+1` variables.
///
/// When `lambda_1 = lambda_2` the box is absent; in the stable range the
/// first row of the cocharge tableau is then all zeros and the polynomial
/// already equals its one-step extension, so nothing is symmetrized.
pub fn extension_generator(idx: &DecompIndex, n: usize) -> Result<Polynomial> {
    let (w, gen) = summand_generator(idx, n);
    let base = strip_symmetric_divisor(&gen, idx, n)?;
    let col = idx.shape.part(1) + 1;
    let symmetrized = if col <= idx.shape.part(0) {
        let t = crate::combinat::rsk(&w).0;
        symmetrize_pair(&base, t.entry(1, col), n + 1)
    } else {
        base.with_nvars(n + 1)
    };
    Ok(symmetrized.mul(&idx.hvec.e_product(n + 1)))
}

/// Close a set of polynomials under the action of `S_group_n`, reporting the
/// resulting span.
pub fn representation_closure(gens: &[Polynomial], group_n: usize) -> RowSpace {
    let mut space = RowSpace::new();
    let transpositions: Vec<Permutation> = (1..group_n)
        .map(|i| Permutation::adjacent_transposition(i, group_n))
        .collect();
    let mut queue: Vec<Polynomial> = gens.to_vec();
    while let Some(p) = queue.pop() {
        if space.insert(&p) {
            for s in &transpositions {
                queue.push(p.act(s));
            }
        }
    }
    space
}

/// Outcome of the stabilization analysis for one `(I, n)` pair.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub n: usize,
    pub subset: SubsetI,
    pub i_max: usize,
    /// `n > 2 i_max` (strict bound) or `n >= 2 i_max` (relaxed).
    pub bound_holds: bool,
    pub relaxed: bool,
    /// Corners with `delta = 1` per summand; stability needs all ones.
    pub ext_corner_counts: Vec<usize>,
    pub singleton_ext: bool,
    /// Whether the symmetrization recipe regenerates `R_{n+1,I}`; only
    /// attempted when the bound holds.
    pub recipe_spans: Option<bool>,
    pub hom_recipe_spans: Option<bool>,
}

/// Check the stable range: when `n` exceeds twice the largest element of
/// `I`, extension is summand-by-summand and the symmetrization recipe
/// produces generators of the next representation.
pub fn stability_check(i: &SubsetI, n: usize, relaxed: bool) -> StabilityReport {
    assert_eq!(i.n(), n);
    let i_max = i.max();
    let bound_holds = if relaxed { n >= 2 * i_max } else { n > 2 * i_max };
    let dec = build_rni(n, i, false);
    let ext_corner_counts: Vec<usize> = dec
        .summands
        .iter()
        .map(|s| {
            ind_images(s, 0)
                .iter()
                .filter(|(_, d, _)| *d == 1)
                .count()
        })
        .collect();
    let singleton_ext = ext_corner_counts.iter().all(|&c| c == 1);
    let mut recipe_spans = None;
    let mut hom_recipe_spans = None;
    if bound_holds {
        for hom in [false, true] {
            let dec = build_rni(n, i, hom);
            let gens: Vec<Polynomial> = dec
                .summands
                .iter()
                .map(|s| extension_generator(s, n).expect("divisor divides its own product"))
                .collect();
            let closure = representation_closure(&gens, n + 1);
            let target = build_rni(
                n + 1,
                &i.with_ambient(n + 1).expect("elements fit"),
                hom,
            );
            let basis = target.realize();
            let spans = closure.rank() == basis.len() && closure.contains_all(basis.iter());
            if hom {
                hom_recipe_spans = Some(spans);
            } else {
                recipe_spans = Some(spans);
            }
        }
    }
    StabilityReport {
        n,
        subset: i.clone(),
        i_max,
        bound_holds,
        relaxed,
        ext_corner_counts,
        singleton_ext,
        recipe_spans,
        hom_recipe_spans,
    }
}

impl StabilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "I": self.subset.elems(),
            "i_max": self.i_max,
            "relaxed": self.relaxed,
            "bound_holds": self.bound_holds,
            "ext_corner_counts": self.ext_corner_counts,
            "singleton_ext": self.singleton_ext,
            "recipe_spans": self.recipe_spans,
            "hom_recipe_spans": self.hom_recipe_spans,
        })
    }
}

/// The unique decomposition of a tableau of size `n+1` as `S +~ v`, used to
/// invert the corner maps.
pub fn peel_corner(s: &StandardTableau) -> (StandardTableau, (usize, usize)) {
    let ev = evacuation(s);
    let n = s.n();
    let v = ev.position_of(n);
    let mut rows = ev.rows().to_vec();
    if rows[v.0 - 1].len() == 1 {
        rows.pop();
    } else {
        rows[v.0 - 1].pop();
    }
    let smaller = StandardTableau::new(rows).expect("removing a corner keeps standardness");
    (evacuation(&smaller), v)
}

/// Fixed points of a permutation acting on the ordered set partitions
/// associated with `I`, as exact data for character comparisons.
pub fn osp_fixed_points(n: usize, i: &SubsetI, sigma: &Permutation) -> usize {
    oracle::enumerate_osp(n, i)
        .iter()
        .filter(|p| &p.act(sigma) == *p)
        .count()
}

/// The ordered set partition bijection image of a spanning permutation.
pub fn osp_of(w: &Permutation, i: &SubsetI) -> Result<OrderedSetPartition> {
    OrderedSetPartition::from_permutation(w, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::coeff_int;

    fn subset(n: usize, elems: &[usize]) -> SubsetI {
        SubsetI::new(n, elems.to_vec()).unwrap()
    }

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn v_basis_small() {
        let idx = DecompIndex::new(syt(&[&[1, 2], &[3]]), HVector::zero());
        let basis = v_basis(&idx, 3);
        assert_eq!(basis.len(), 2);
        let expected: Vec<Polynomial> = ["x3 - x1", "x2 - x1"]
            .iter()
            .map(|s| Polynomial::parse(s, 3).unwrap())
            .collect();
        assert!(expected.iter().all(|p| basis.contains(p)));
        let idx = DecompIndex::new(syt(&[&[1, 3], &[2]]), HVector::zero());
        let basis = v_basis(&idx, 3);
        let expected: Vec<Polynomial> = ["x2 x3 - x1 x2", "x2 x3 - x1 x3"]
            .iter()
            .map(|s| Polynomial::parse(s, 3).unwrap())
            .collect();
        assert!(expected.iter().all(|p| basis.contains(p)));
        let trivial = DecompIndex::new(StandardTableau::single_row(4), HVector::zero());
        assert_eq!(v_basis(&trivial, 4), vec![Polynomial::one(4)]);
    }

    #[test]
    fn rni_examples() {
        // W_{2,2}: three summands of dimensions 1, 3, 2
        let dec = build_rni(4, &subset(4, &[2]), false);
        assert_eq!(dec.summands.len(), 3);
        assert_eq!(dec.dimension(), 6);
        let hvecs: Vec<String> = dec.summands.iter().map(|s| s.hvec.to_string()).collect();
        assert_eq!(hvecs, vec!["e1", "1", "1"]);
        // trivial set
        let dec = build_rni(4, &SubsetI::empty(4), false);
        assert_eq!(dec.summands.len(), 1);
        assert_eq!(dec.realize(), vec![Polynomial::one(4)]);
        // homogeneous variant of I = {2,3}: five summands
        let dec = build_rni(4, &subset(4, &[2, 3]), true);
        let display: Vec<String> = dec.summands.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            display,
            vec![
                "V^{1234} e2 e3",
                "V^{124/3} e3",
                "V^{134/2} e2",
                "V^{12/34} e3",
                "V^{14/2/3}",
            ]
        );
    }

    #[test]
    fn rnk_counts() {
        // n = k: the regular representation
        let dec = build_rnk(4, 4, false).unwrap();
        assert_eq!(dec.dimension(), 24);
        assert!(dec.summands.iter().all(|s| s.hvec.is_zero()));
        // k = 1: trivial
        let dec = build_rnk(5, 1, false).unwrap();
        assert_eq!(dec.dimension(), 1);
        // dimensions match ordered set partition counts
        for k in 1..=4usize {
            let dec = build_rnk(4, k, false).unwrap();
            assert_eq!(
                dec.dimension() as u64,
                oracle::factorial(k) * oracle::stirling2(4, k)
            );
        }
    }

    #[test]
    fn hvec_bijection_worked_example() {
        let d = subset(9, &[3, 6]);
        let i = subset(9, &[1, 3, 4, 5, 6, 8]);
        let h = hvec_from_subset(&d, &i).unwrap();
        assert_eq!(h.get(1), 2);
        assert_eq!(h.get(2), 1);
        assert_eq!(h.total(), 3);
        assert_eq!(subset_from_hvec(&d, &h, 7).unwrap(), i);
        // I = D gives the zero vector
        let h0 = hvec_from_subset(&d, &d).unwrap();
        assert!(h0.is_zero());
        assert_eq!(subset_from_hvec(&d, &h0, 3).unwrap(), d);
        // small cases with D = {1}, n = 4, k = 3
        let d = subset(4, &[1]);
        assert_eq!(
            subset_from_hvec(&d, &HVector::zero(), 3).unwrap(),
            subset(4, &[1, 2])
        );
        assert_eq!(
            subset_from_hvec(&d, &HVector::from_multipliers(&[1]), 3).unwrap(),
            subset(4, &[1, 3])
        );
    }

    #[test]
    fn bijection_covers_h_set() {
        // over all (S, k): forward maps bijectively onto the admissible set
        for n in 2..=5usize {
            for shape in Partition::all(n) {
                for s in StandardTableau::all(&shape) {
                    let d = s.dsi_c();
                    for k in d.len() + 1..=n {
                        let supersets: Vec<SubsetI> = SubsetI::all_of_size(n, k - 1)
                            .into_iter()
                            .filter(|i| d.is_subset_of(i))
                            .collect();
                        let mut images = std::collections::BTreeSet::new();
                        for i in &supersets {
                            let h = hvec_from_subset(&d, i).unwrap();
                            assert!(h.in_h_set(n, k, d.len()), "image in the admissible set");
                            assert!(images.insert(h.clone()), "forward map is injective");
                            assert_eq!(&subset_from_hvec(&d, &h, k).unwrap(), i);
                        }
                        let admissible = HVector::enumerate(n - k, k - 1 - d.len())
                            .into_iter()
                            .filter(|h| h.in_h_set(n, k, d.len()))
                            .count();
                        assert_eq!(images.len(), admissible);
                    }
                }
            }
        }
    }

    #[test]
    fn enlarge_matches_fresh_build() {
        let rep = verify_enlarge(4, &subset(4, &[1]), 2, true);
        assert!(rep.ok(), "{:?}", rep.failures);
        let rep = verify_enlarge(4, &subset(4, &[3]), 1, true);
        assert!(rep.ok(), "{:?}", rep.failures);
        let rep = verify_enlarge(4, &subset(4, &[1]), 3, true);
        assert!(rep.ok(), "{:?}", rep.failures);
        // empty set: constants gain e_{ell-1} (plain) and e_ell (hom)
        let dec = build_rni(5, &SubsetI::empty(5), false);
        let out = enlarge_i(&dec, 3).unwrap();
        let trivial = out
            .summands
            .iter()
            .find(|s| s.shape.parts() == [5])
            .unwrap();
        assert_eq!(trivial.hvec, HVector::from_multipliers(&[2]));
        let dec = build_rni(5, &SubsetI::empty(5), true);
        let out = enlarge_i(&dec, 3).unwrap();
        let trivial = out
            .summands
            .iter()
            .find(|s| s.shape.parts() == [5])
            .unwrap();
        assert_eq!(trivial.hvec, HVector::from_multipliers(&[3]));
        // rejects elements already present
        let dec = build_rni(4, &subset(4, &[2]), false);
        assert_eq!(enlarge_i(&dec, 2), Err(Error::AlreadyInSet(2)));
    }

    #[test]
    fn induction_worked_example() {
        // V^S for the 8-box example: four corners, two carrying e_t
        let s = syt(&[&[1, 3, 4, 8], &[2, 5, 6], &[7]]);
        let idx = DecompIndex::new(s, HVector::zero());
        let images = ind_images(&idx, 5);
        assert_eq!(images.len(), 4);
        let degrees: Vec<usize> = images.iter().map(|(_, _, i)| i.degree()).collect();
        assert_eq!(degrees, vec![13 + 5, 13 + 5, 21, 21]);
        let deltas: Vec<usize> = images.iter().map(|(_, d, _)| *d).collect();
        assert_eq!(deltas, vec![1, 1, 0, 0]);
        // single-row shapes have two corners
        let idx = DecompIndex::new(StandardTableau::single_row(3), HVector::zero());
        assert_eq!(ind_images(&idx, 1).len(), 2);
    }

    #[test]
    fn operators_small() {
        for i in SubsetI::all(3) {
            let rep = verify_emb_ind(3, &i, true);
            assert!(rep.ok(), "{:?}", rep.failures);
            let rep = verify_emb_reps(3, &i, true);
            assert!(rep.ok(), "{:?}", rep.failures);
        }
        for k in 0..=3usize {
            let rep = verify_rnk_ind(3, k, true);
            assert!(rep.ok(), "{:?}", rep.failures);
        }
    }

    #[test]
    fn ext_never_annihilates() {
        for n in 2..=5usize {
            for i in SubsetI::all(n) {
                let dec = build_rni(n, &i, false);
                let extended = ext(&dec);
                assert!(extended.summands.len() >= dec.summands.len());
            }
        }
        // trivial representation extends to the trivial representation
        let dec = build_rni(4, &SubsetI::empty(4), false);
        let extended = ext(&dec);
        assert_eq!(extended.summands.len(), 1);
        assert_eq!(extended.summands[0].shape.parts(), [5]);
    }

    #[test]
    fn stability_examples() {
        // I = {1}, n = 3: stable, extension is summand-by-summand
        let rep = stability_check(&subset(3, &[1]), 3, false);
        assert!(rep.bound_holds);
        assert!(rep.singleton_ext);
        assert_eq!(rep.ext_corner_counts, vec![1, 1]);
        assert_eq!(rep.recipe_spans, Some(true));
        assert_eq!(rep.hom_recipe_spans, Some(true));
        // I = {2}, n = 3: unstable, a summand splits in two
        let rep = stability_check(&subset(3, &[2]), 3, false);
        assert!(!rep.bound_holds);
        assert!(rep.ext_corner_counts.contains(&2));
        // I = {1,2}, n = 4: the relaxed bound applies
        let strict = stability_check(&subset(4, &[1, 2]), 4, false);
        assert!(!strict.bound_holds);
        let relaxed = stability_check(&subset(4, &[1, 2]), 4, true);
        assert!(relaxed.bound_holds);
        assert!(relaxed.singleton_ext);
        assert_eq!(relaxed.recipe_spans, Some(true));
        let target = build_rni(5, &subset(5, &[1, 2]), false);
        assert_eq!(target.summands.len(), 5);
    }

    #[test]
    fn genmaj_examples() {
        assert_eq!(
            genmaj_stat(&Permutation::identity(3), &SubsetI::empty(3)).unwrap(),
            0
        );
        assert_eq!(
            genmaj_stat(&Permutation::identity(3), &subset(3, &[2])).unwrap(),
            1
        );
        // bounded by the sum of I with equality iff Dsl(w) = I
        for n in 2..=5usize {
            for i in SubsetI::all(n) {
                let bound: usize = i.elems().iter().sum();
                for w in Permutation::all(n) {
                    if !w.dsl().is_subset_of(&i) {
                        continue;
                    }
                    let stat = genmaj_stat(&w, &i).unwrap();
                    assert!(stat <= bound);
                    if w.dsl() == i {
                        assert_eq!(stat, bound);
                    }
                }
            }
        }
    }

    #[test]
    fn max_symmetric_divisor_roundtrip() {
        let dec = build_rni(4, &subset(4, &[3]), false);
        let divisors: Vec<Polynomial> = dec
            .summands
            .iter()
            .map(|s| s.max_symmetric_divisor(4))
            .collect();
        assert_eq!(divisors.len(), 2);
        assert!(divisors.contains(&elementary_e(2, 4)));
        assert!(divisors.contains(&Polynomial::one(4)));
        for s in &dec.summands {
            for p in dec.realize_summand(s) {
                let stripped = strip_symmetric_divisor(&p, s, 4).unwrap();
                assert_eq!(stripped.mul(&s.max_symmetric_divisor(4)), p);
            }
        }
    }

    #[test]
    fn overflow_policies() {
        // I = {1, 4} cannot sit inside {1..3}
        let err = build_rni_policy(4, &[1, 4], false, OverflowPolicy::Reject);
        assert!(matches!(err, Err(Error::SetOutOfRange { .. })));
        let intersected = build_rni_policy(4, &[1, 4], false, OverflowPolicy::Intersect).unwrap();
        let direct = build_rni(4, &subset(4, &[1]), false);
        assert!(intersected.same_summands(&direct));
        // vanishing-e convention keeps the larger multiplier data
        let kept = build_rni_policy(4, &[1, 4], true, OverflowPolicy::VanishingE).unwrap();
        assert!(kept
            .summands
            .iter()
            .any(|s| s.hvec == HVector::characteristic(&[4])));
    }

    #[test]
    fn peeling_inverts_corner_addition() {
        for shape in Partition::all(5) {
            for s in StandardTableau::all(&shape) {
                for v in shape.external_corners() {
                    let grown = s.add_corner_ev(v).unwrap();
                    let (back, corner) = peel_corner(&grown);
                    assert_eq!(back, s);
                    assert_eq!(corner, v);
                }
            }
        }
    }

    #[test]
    fn spanning_set_matches_realization() {
        for n in 2..=4usize {
            for i in SubsetI::all(n) {
                for hom in [false, true] {
                    let dec = build_rni(n, &i, hom);
                    let from_summands = dec.realize();
                    let from_ws: Vec<Polynomial> = spanning_set(n, &i, hom)
                        .into_iter()
                        .map(|(_, p)| p)
                        .collect();
                    assert_eq!(from_summands.len(), from_ws.len());
                    for p in &from_ws {
                        assert!(from_summands.contains(p), "n={n} I={i} hom={hom}");
                    }
                }
            }
        }
    }

    #[test]
    fn trace_on_summand_is_irreducible_character() {
        use crate::oracle::{class_representative, irreducible_character, trace_action};
        for n in 2..=4usize {
            for shape in Partition::all(n) {
                for s in StandardTableau::all(&shape) {
                    let idx = DecompIndex::new(s, HVector::zero());
                    let basis = v_basis(&idx, n);
                    for mu in Partition::all(n) {
                        let sigma = class_representative(&mu);
                        let tr = trace_action(&sigma, &basis).unwrap();
                        assert_eq!(
                            tr,
                            coeff_int(irreducible_character(&shape, &mu)),
                            "shape={shape} mu={mu}"
                        );
                    }
                }
            }
        }
    }
}
