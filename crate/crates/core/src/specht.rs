//! The normalized higher Specht polynomial construction.
//!
//! For a filling `T` of shape `lambda` by `1..n` and a standard (or cocharge)
//! index tableau, the polynomial is built in two steps: the `R(T)`-orbit sum
//! of the cocharge monomial with every distinct monomial carrying the
//! coefficient 1, followed by sign-antisymmetrization over the column group
//! `C(T)`. The orbit-sum normalization replaces the division by the
//! stabilizer size, so no rational values ever appear.

use serde_json::{json, Value};

use crate::combinat::{
    ct, q_tilde, rsk, CochargeTableau, Permutation, StandardTableau, SubsetI, Tableau,
};
use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, Polynomial};
use num_traits::One;

/// Row group, column group, and equal-length-column swaps of a filling,
/// described by generators, with the extended group's character.
#[derive(Clone, Debug)]
pub struct ColumnGroupData {
    pub tableau: Tableau,
    /// Adjacent transpositions of entries within each row.
    pub row_generators: Vec<Permutation>,
    /// Adjacent transpositions of entries within each column.
    pub column_generators: Vec<Permutation>,
    /// Swaps of whole adjacent columns of equal length.
    pub swap_generators: Vec<Permutation>,
}

/// Generator of the extended column group together with its character value.
#[derive(Clone, Debug)]
pub struct SignedGenerator {
    pub perm: Permutation,
    pub sign: i64,
}

pub fn groups(t: &Tableau) -> ColumnGroupData {
    let n = t.n();
    let mut row_generators = Vec::new();
    for row in t.rows() {
        for pair in row.windows(2) {
            row_generators.push(Permutation::transposition(pair[0], pair[1], n));
        }
    }
    let shape = t.shape();
    let ncols = shape.part(0);
    let mut column_generators = Vec::new();
    for col in 1..=ncols {
        let entries = t.column(col);
        for pair in entries.windows(2) {
            column_generators.push(Permutation::transposition(pair[0], pair[1], n));
        }
    }
    let mut swap_generators = Vec::new();
    for (len, q, count) in shape.column_length_blocks() {
        for offset in 0..count.saturating_sub(1) {
            let c1 = t.column(q + offset + 1);
            let c2 = t.column(q + offset + 2);
            debug_assert_eq!(c1.len(), len);
            let mut word: Vec<usize> = (1..=n).collect();
            for (a, b) in c1.iter().zip(&c2) {
                word[a - 1] = *b;
                word[b - 1] = *a;
            }
            swap_generators.push(Permutation::from_word(word).expect("column swap"));
        }
    }
    ColumnGroupData {
        tableau: t.clone(),
        row_generators,
        column_generators,
        swap_generators,
    }
}

impl ColumnGroupData {
    /// Generators of the extended column group with their character values:
    /// column transpositions carry -1, column swaps carry +1.
    pub fn extended_generators(&self) -> Vec<SignedGenerator> {
        let mut out: Vec<SignedGenerator> = self
            .column_generators
            .iter()
            .map(|p| SignedGenerator {
                perm: p.clone(),
                sign: -1,
            })
            .collect();
        out.extend(self.swap_generators.iter().map(|p| SignedGenerator {
            perm: p.clone(),
            sign: 1,
        }));
        out
    }

    pub fn column_group_order(&self) -> u64 {
        self.tableau
            .shape()
            .column_lengths()
            .iter()
            .map(|&l| crate::oracle::factorial(l))
            .product()
    }

    pub fn extended_group_order(&self) -> u64 {
        let swaps: u64 = self
            .tableau
            .shape()
            .column_length_blocks()
            .iter()
            .map(|&(_, _, t)| crate::oracle::factorial(t))
            .product();
        self.column_group_order() * swaps
    }

    /// The character value of an arbitrary element of the extended column
    /// group: factor off the column-permuting part and take the remaining
    /// column-group element's sign. Errors when the element is not in the
    /// extended group.
    pub fn sign_tilde(&self, w: &Permutation) -> Result<i64> {
        let shape = self.tableau.shape();
        let ncols = shape.part(0);
        let columns: Vec<Vec<usize>> = (1..=ncols).map(|c| self.tableau.column(c)).collect();
        let col_sets: Vec<std::collections::BTreeSet<usize>> = columns
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        // where does each column land?
        let n = self.tableau.n();
        let mut eta_word: Vec<usize> = (1..=n).collect();
        for (ci, col) in columns.iter().enumerate() {
            let image: std::collections::BTreeSet<usize> =
                col.iter().map(|&e| w.image(e)).collect();
            let target = col_sets
                .iter()
                .position(|s| *s == image)
                .ok_or(Error::NotInvariant)?;
            if target != ci {
                if columns[target].len() != col.len() {
                    return Err(Error::NotInvariant);
                }
                for (a, b) in columns[ci].iter().zip(&columns[target]) {
                    eta_word[a - 1] = *b;
                }
            }
        }
        let eta = Permutation::from_word(eta_word)
            .map_err(|_| Error::NotInvariant)?;
        let sigma = eta.inverse().compose(w);
        // sigma must preserve every column
        for (ci, set) in col_sets.iter().enumerate() {
            let image: std::collections::BTreeSet<usize> =
                columns[ci].iter().map(|&e| sigma.image(e)).collect();
            if image != *set {
                return Err(Error::NotInvariant);
            }
        }
        Ok(sigma.sign())
    }

    /// All elements of `C(T)` with their signs.
    pub fn column_group_elements(&self) -> Vec<(Permutation, i64)> {
        let n = self.tableau.n();
        let shape = self.tableau.shape();
        let ncols = shape.part(0);
        let mut elements = vec![(Permutation::identity(n), 1i64)];
        for col in 1..=ncols {
            let entries = self.tableau.column(col);
            let perms = permutations_of_values(&entries, n);
            let mut next = Vec::with_capacity(elements.len() * perms.len());
            for (e, es) in &elements {
                for (p, ps) in &perms {
                    next.push((p.compose(e), es * ps));
                }
            }
            elements = next;
        }
        elements
    }
}

/// All permutations of `S_n` supported on the given values, with signs.
fn permutations_of_values(values: &[usize], n: usize) -> Vec<(Permutation, i64)> {
    let k = values.len();
    let mut out = Vec::with_capacity(crate::oracle::factorial(k) as usize);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut word: Vec<usize> = (1..=n).collect();
        for (slot, &target) in idx.iter().enumerate() {
            word[values[slot] - 1] = values[target];
        }
        let p = Permutation::from_word(word).expect("permutation of values");
        let sign = index_sign(&idx);
        out.push((p, sign));
        if !next_index_permutation(&mut idx) {
            break;
        }
    }
    out
}

fn index_sign(idx: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if idx[i] > idx[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_index_permutation(idx: &mut [usize]) -> bool {
    if idx.len() < 2 {
        return false;
    }
    let mut i = idx.len() - 1;
    while i > 0 && idx[i - 1] >= idx[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = idx.len() - 1;
    while idx[j] <= idx[i - 1] {
        j -= 1;
    }
    idx.swap(i - 1, j);
    idx[i..].reverse();
    true
}

/// The index of a higher Specht polynomial: a standard tableau or a cocharge
/// tableau of the same shape (interchangeable through `ct`).
#[derive(Clone, Debug)]
pub enum SpechtIndex {
    Standard(StandardTableau),
    Cocharge(CochargeTableau),
}

impl SpechtIndex {
    pub fn resolve(&self) -> Result<(StandardTableau, CochargeTableau)> {
        match self {
            SpechtIndex::Standard(s) => Ok((s.clone(), ct(s))),
            SpechtIndex::Cocharge(c) => Ok((c.ct_inverse()?, c.clone())),
        }
    }
}

/// The cocharge monomial of `(T, C)` and the size of its stabilizer in the
/// row group: `prod x_i^{h_i}` with `h_i` the entry of `C` at the box of `i`
/// in `T`, and `s` the product of multiplicity factorials along the rows.
pub fn cocharge_monomial(t: &Tableau, c: &CochargeTableau) -> (Monomial, u64) {
    assert_eq!(t.shape(), c.shape(), "shapes must agree");
    let n = t.n();
    let mut exps = vec![0u32; n];
    for i in 1..=n {
        let (r, col) = t.position_of(i);
        exps[i - 1] = c.entry(r, col) as u32;
    }
    let mut stab = 1u64;
    for row in c.rows() {
        let mut run = 1u64;
        for w in row.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                stab *= crate::oracle::factorial(run as usize);
                run = 1;
            }
        }
        stab *= crate::oracle::factorial(run as usize);
    }
    (Monomial::new(exps), stab)
}

/// The `R(T)`-orbit sum of the cocharge monomial, one per distinct exponent
/// arrangement, each with coefficient 1.
pub fn row_orbit_sum(t: &Tableau, c: &CochargeTableau) -> Polynomial {
    assert_eq!(t.shape(), c.shape(), "shapes must agree");
    let n = t.n();
    // per row: the variables of the row, and the multiset of exponents to
    // distribute over them
    let mut row_data: Vec<(Vec<usize>, Vec<u32>)> = Vec::new();
    for (ri, row) in t.rows().iter().enumerate() {
        let vars: Vec<usize> = row.clone();
        let exps: Vec<u32> = c.rows()[ri].iter().map(|&e| e as u32).collect();
        row_data.push((vars, exps));
    }
    let mut monomials = vec![vec![0u32; n]];
    for (vars, exps) in &row_data {
        let arrangements = distinct_arrangements(exps);
        let mut next = Vec::with_capacity(monomials.len() * arrangements.len());
        for base in &monomials {
            for arr in &arrangements {
                let mut m = base.clone();
                for (v, &e) in vars.iter().zip(arr) {
                    m[v - 1] = e;
                }
                next.push(m);
            }
        }
        monomials = next;
    }
    Polynomial::from_terms(
        monomials
            .into_iter()
            .map(|exps| (Monomial::new(exps), Coeff::one())),
        n,
    )
}

fn distinct_arrangements(exps: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = exps.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    while next_multiset_permutation(&mut sorted) {
        out.push(sorted.clone());
    }
    out
}

fn next_multiset_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A constructed higher Specht polynomial with its provenance.
#[derive(Clone, Debug)]
pub struct SpechtPolynomial {
    pub poly: Polynomial,
    pub w: Option<Permutation>,
    pub tableau: Tableau,
    pub index: StandardTableau,
    pub cocharge_index: CochargeTableau,
    pub s_stab: u64,
    pub degree: usize,
}

/// Build the higher Specht polynomial of the filling `T` and index tableau.
///
/// The result is homogeneous of degree `cc(S)`, has integer coefficients,
/// and contains the cocharge monomial with coefficient exactly 1.
pub fn higher_specht(t: &Tableau, index: &SpechtIndex) -> Result<SpechtPolynomial> {
    let (s, c) = index.resolve()?;
    if s.shape() != t.shape() {
        return Err(Error::invalid("index and filling shapes differ"));
    }
    let (monomial, s_stab) = cocharge_monomial(t, &c);
    let orbit = row_orbit_sum(t, &c);
    let data = groups(t);
    let mut poly = Polynomial::zero(t.n());
    for (sigma, sign) in data.column_group_elements() {
        let image = orbit.act(&sigma);
        poly = if sign >= 0 {
            poly.add(&image)
        } else {
            poly.sub(&image)
        };
    }
    let degree = c.entry_sum();
    assert!(
        poly.has_integer_coefficients(),
        "higher Specht polynomials are integral"
    );
    assert_eq!(
        poly.coefficient(&monomial),
        Coeff::one(),
        "seed monomial must carry coefficient 1"
    );
    debug_assert_eq!(poly.homogeneous_degree(), Some(degree));
    Ok(SpechtPolynomial {
        poly,
        w: None,
        tableau: t.clone(),
        index: s,
        cocharge_index: c,
        s_stab,
        degree,
    })
}

/// `F_w`: the higher Specht polynomial of `(P(w), ev Q(w))`.
pub fn f_w(w: &Permutation) -> SpechtPolynomial {
    let (p, _) = rsk(w);
    let s = q_tilde(w);
    let mut out = higher_specht(
        p.as_tableau(),
        &SpechtIndex::Standard(s),
    )
    .expect("matching shapes by construction");
    out.w = Some(w.clone());
    out
}

/// The row-reading standard tableau of a shape (`1..lambda_1` in row one and
/// so on), whose cocharge tableau has constant rows.
pub fn superstandard_index(shape: &crate::combinat::Partition) -> StandardTableau {
    StandardTableau::row_superstandard(shape)
}

/// The classical Specht polynomial of a filling, as a higher Specht
/// polynomial with the row-reading index.
pub fn classical_specht(t: &Tableau) -> Polynomial {
    higher_specht(t, &SpechtIndex::Standard(superstandard_index(&t.shape())))
        .expect("superstandard index matches the shape")
        .poly
}

/// The same polynomial by the column Vandermonde product; independent of the
/// symmetrizer path (assumes the columns of `t` are increasing).
pub fn classical_specht_product(t: &Tableau) -> Polynomial {
    let n = t.n();
    let mut out = Polynomial::one(n);
    for col in 1..=t.shape().part(0) {
        let entries = t.column(col);
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let diff = Polynomial::var(entries[j], n).sub(&Polynomial::var(entries[i], n));
                out = out.mul(&diff);
            }
        }
    }
    out
}

/// `Q_T^S = F_T^S / F_T^{S^0}`: exact, integral, and invariant under the
/// extended column group. Non-divisibility signals an engine bug upstream.
pub fn specht_quotient(t: &Tableau, index: &SpechtIndex) -> Result<Polynomial> {
    let f = higher_specht(t, index)?;
    let denom = classical_specht(t);
    f.poly.exact_divide(&denom)
}

/// Degree-vector of a monomial relative to the columns of `T`: entry `j` is
/// the total degree in the variables housed in column `j+1`.
pub fn deg_t_vector(t: &Tableau, m: &Monomial) -> Vec<usize> {
    let ncols = t.shape().part(0);
    (1..=ncols)
        .map(|col| {
            t.column(col)
                .iter()
                .map(|&v| m.exponent(v) as usize)
                .sum()
        })
        .collect()
}

/// A higher Specht polynomial times its elementary-symmetric multipliers.
#[derive(Clone, Debug)]
pub struct MultipliedSpecht {
    pub poly: Polynomial,
    pub base: SpechtPolynomial,
    /// Indices `r` of the `e_r` multipliers, with multiplicity, ascending.
    pub multipliers: Vec<usize>,
    pub degree: usize,
}

fn multiplied(base: SpechtPolynomial, multipliers: Vec<usize>, n: usize) -> MultipliedSpecht {
    let mut poly = base.poly.clone().with_nvars(n);
    for &r in &multipliers {
        poly = poly.mul(&crate::polyring::elementary_e(r, n));
    }
    let degree = base.degree + multipliers.iter().sum::<usize>();
    MultipliedSpecht {
        poly,
        base,
        multipliers,
        degree,
    }
}

/// `F_{w,I} = F_w * prod over Asl_I(w) of e_{r_i}` where `r_i` counts the
/// complement elements of `I` below `i`. Requires `Dsl(w)` inside `I`.
pub fn f_w_i(w: &Permutation, i: &SubsetI) -> Result<MultipliedSpecht> {
    let dsl = w.dsl();
    if !dsl.is_subset_of(i) {
        return Err(Error::DescentsNotContained {
            found: dsl.elems().to_vec(),
            required: i.elems().to_vec(),
        });
    }
    let base = f_w(w);
    let mut multipliers: Vec<usize> = i
        .elems()
        .iter()
        .filter(|&&x| !dsl.contains(x))
        .map(|&x| i.r_value(x))
        .filter(|&r| r > 0)
        .collect();
    multipliers.sort_unstable();
    Ok(multiplied(base, multipliers, i.n()))
}

/// Homogeneous variant: multiply by `e_i` itself over `Asl_I(w)`.
pub fn f_w_i_hom(w: &Permutation, i: &SubsetI) -> Result<MultipliedSpecht> {
    let dsl = w.dsl();
    if !dsl.is_subset_of(i) {
        return Err(Error::DescentsNotContained {
            found: dsl.elems().to_vec(),
            required: i.elems().to_vec(),
        });
    }
    let base = f_w(w);
    let multipliers: Vec<usize> = i
        .elems()
        .iter()
        .filter(|&&x| !dsl.contains(x))
        .copied()
        .collect();
    Ok(multiplied(base, multipliers, i.n()))
}

/// Finite truncation of the stable higher Specht polynomial.
#[derive(Clone, Debug)]
pub struct StableTruncation {
    /// `F_{w_N}` for the embedding of `w` into `S_N`.
    pub poly: Polynomial,
    pub base_n: usize,
    pub trunc: usize,
    pub degree: usize,
    /// Least `m` from which the one-variable-at-a-time reconstruction is
    /// already saturated: every monomial of `F_{w_{m+1}}` avoids some
    /// length-one-column variable of `P(w_{m+1})`.
    pub stabilization_index: Option<usize>,
}

/// Compute `F_{w_N}` together with a stabilization certificate.
pub fn stable_truncation(w: &Permutation, trunc: usize) -> StableTruncation {
    let n = w.n();
    assert!(trunc >= n, "truncation must not cut below the base size");
    let mut polys: Vec<Polynomial> = Vec::with_capacity(trunc - n + 1);
    for m in n..=trunc {
        polys.push(f_w(&w.extend(m)).poly);
    }
    let mut stabilization_index = None;
    for m in n..trunc {
        let next = &polys[m + 1 - n];
        let t_next = rsk(&w.extend(m + 1)).0;
        let singles = length_one_column_vars(t_next.as_tableau());
        let saturated = next
            .terms()
            .all(|(mon, _)| singles.iter().any(|&v| mon.exponent(v) == 0));
        if saturated {
            stabilization_index = Some(m);
            break;
        }
    }
    let degree = polys.last().map(|p| p.degree().unwrap_or(0)).unwrap_or(0);
    StableTruncation {
        poly: polys.pop().expect("at least one truncation"),
        base_n: n,
        trunc,
        degree,
        stabilization_index,
    }
}

/// Variables sitting in columns of length 1.
pub fn length_one_column_vars(t: &Tableau) -> Vec<usize> {
    let shape = t.shape();
    let mut out = Vec::new();
    for (col, &len) in shape.column_lengths().iter().enumerate() {
        if len == 1 {
            out.push(t.entry(1, col + 1));
        }
    }
    out
}

/// Extend `f` (free of `x_new`) to a polynomial symmetric under the swap
/// `x_m <-> x_new`, keeping the part free of both intact: terms divisible by
/// `x_m` are mirrored into `x_new`.
pub fn symmetrize_pair(f: &Polynomial, m: usize, new: usize) -> Polynomial {
    let swap = Permutation::transposition(m, new, new.max(m));
    let divisible = Polynomial::from_terms(
        f.terms()
            .filter(|(mon, _)| mon.exponent(m) > 0)
            .map(|(mon, c)| (mon.clone(), c.clone())),
        f.nvars(),
    );
    f.add(&divisible.act(&swap)).with_nvars(new)
}

impl SpechtPolynomial {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.as_ref().map(|w| w.to_json()),
            "n": self.tableau.n(),
            "shape": self.tableau.shape().to_json(),
            "T": self.tableau.to_json(),
            "index": self.index.to_json(),
            "ct": self.cocharge_index.to_json(),
            "s_stab": self.s_stab,
            "degree": self.degree,
            "polynomial": self.poly.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;

    fn syt(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn poly(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn group_orders() {
        let t = syt(&[&[1, 3, 5], &[2, 4]]);
        let data = groups(t.as_tableau());
        assert_eq!(data.column_group_order(), 4);
        assert_eq!(data.extended_group_order(), 8);
        assert_eq!(data.column_group_elements().len(), 4);
        let row = StandardTableau::single_row(4);
        assert_eq!(groups(row.as_tableau()).column_group_order(), 1);
        let square = syt(&[&[1, 2], &[3, 4]]);
        assert_eq!(groups(square.as_tableau()).extended_group_order(), 8);
    }

    #[test]
    fn sign_tilde_factors_through_column_swaps() {
        let t = syt(&[&[1, 3, 5], &[2, 4]]);
        let data = groups(t.as_tableau());
        // swapping both columns wholesale: (1 3)(2 4)
        let eta = perm(&[3, 4, 1, 2, 5]);
        assert_eq!(data.sign_tilde(&eta).unwrap(), 1);
        // a column transposition
        let sigma = perm(&[2, 1, 3, 4, 5]);
        assert_eq!(data.sign_tilde(&sigma).unwrap(), -1);
        assert_eq!(data.sign_tilde(&eta.compose(&sigma)).unwrap(), -1);
        // not in the group
        let bad = perm(&[1, 3, 2, 4, 5]);
        assert!(data.sign_tilde(&bad).is_err());
    }

    #[test]
    fn cocharge_monomial_examples() {
        // the small case: T = [1 3 4 / 2], index S = [1 2 3 / 4]
        let t = syt(&[&[1, 3, 4], &[2]]);
        let s = syt(&[&[1, 2, 3], &[4]]);
        let (m, stab) = cocharge_monomial(t.as_tableau(), &ct(&s));
        assert_eq!(m, Monomial::var_pow(2, 1));
        assert_eq!(stab, 6);
        // the 5-variable case
        let t = syt(&[&[1, 3, 5], &[2, 4]]);
        let s = syt(&[&[1, 3, 5], &[2, 4]]);
        let (m, stab) = cocharge_monomial(t.as_tableau(), &ct(&s));
        assert_eq!(
            Polynomial::monomial(m, Coeff::one(), 5),
            poly("x2 x3 x4^2 x5^2", 5)
        );
        assert_eq!(stab, 1);
        // all-zero cocharge tableau stabilized by the full row group
        let c0 = ct(&StandardTableau::single_row(4));
        let (m, stab) = cocharge_monomial(StandardTableau::single_row(4).as_tableau(), &c0);
        assert!(m.is_one());
        assert_eq!(stab, 24);
    }

    #[test]
    fn small_higher_specht() {
        let f = f_w(&perm(&[2, 1, 3, 4]));
        assert_eq!(f.poly, poly("x2 - x1", 4));
        assert_eq!(f.s_stab, 6);
        assert_eq!(f.degree, 1);
        let id = f_w(&Permutation::identity(5));
        assert_eq!(id.poly, Polynomial::one(5));
        assert_eq!(id.degree, 0);
    }

    #[test]
    fn five_variable_example() {
        let f = f_w(&perm(&[2, 4, 1, 5, 3]));
        assert_eq!(f.degree, 6);
        assert_eq!(f.poly.num_terms(), 20);
        assert_eq!(
            f.poly.coefficient(&Monomial::new(vec![0, 1, 1, 2, 2])),
            Coeff::one()
        );
        assert_eq!(
            f.poly.coefficient(&Monomial::new(vec![1, 2, 1, 2, 0])),
            crate::polyring::coeff_int(-2)
        );
        // the orbit sum has 12 monomials, all coefficient 1
        let orbit = row_orbit_sum(&f.tableau, &f.cocharge_index);
        assert_eq!(orbit.num_terms(), 12);
    }

    #[test]
    fn classical_product_formula() {
        for lam in Partition::all(5) {
            for t in StandardTableau::all(&lam) {
                assert_eq!(
                    classical_specht(t.as_tableau()),
                    classical_specht_product(t.as_tableau())
                );
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let t = syt(&[&[1, 3, 5], &[2, 4]]);
        let s = syt(&[&[1, 3, 5], &[2, 4]]);
        let q = specht_quotient(t.as_tableau(), &SpechtIndex::Standard(s)).unwrap();
        let expected = poly(
            "x1 x2 x5^2 + x3 x4 x5^2 - x1 x2 x3 x5 - x1 x2 x4 x5 - x1 x3 x4 x5 - x2 x3 x4 x5 - 2*x1 x2 x3 x4",
            5,
        );
        assert_eq!(q, expected);
        // invariance under the extended column group
        let data = groups(t.as_tableau());
        for g in data.extended_generators() {
            assert_eq!(q.act(&g.perm), q);
        }
        // superstandard index gives quotient 1
        let s0 = superstandard_index(&t.shape());
        assert_eq!(
            specht_quotient(t.as_tableau(), &SpechtIndex::Standard(s0)).unwrap(),
            Polynomial::one(5)
        );
    }

    #[test]
    fn multiplied_variants() {
        let n3 = Permutation::identity(3);
        let i = SubsetI::new(3, vec![2]).unwrap();
        let f = f_w_i(&n3, &i).unwrap();
        assert_eq!(f.poly, crate::polyring::elementary_e(1, 3));
        assert_eq!(f.multipliers, vec![1]);
        let fh = f_w_i_hom(&n3, &i).unwrap();
        assert_eq!(fh.poly, crate::polyring::elementary_e(2, 3));
        // I = Dsl(w) leaves the polynomial alone
        let w = perm(&[2, 4, 1, 5, 3]);
        let f = f_w_i(&w, &w.dsl()).unwrap();
        assert_eq!(f.poly, f_w(&w).poly);
        // containment violations are reported
        let err = f_w_i(&w, &SubsetI::new(5, vec![2]).unwrap());
        assert!(matches!(err, Err(Error::DescentsNotContained { .. })));
    }

    #[test]
    fn stable_truncation_constant_case() {
        let st = stable_truncation(&perm(&[2, 1, 3, 4]), 6);
        assert_eq!(st.poly, poly("x2 - x1", 6));
        assert_eq!(st.stabilization_index, Some(4));
        assert_eq!(st.degree, 1);
    }

    #[test]
    fn symmetrize_pair_examples() {
        // free of x_m: unchanged
        let f = poly("x2 - x1", 4);
        assert_eq!(symmetrize_pair(&f, 3, 5), f.clone().with_nvars(5));
        // mirrors the x_m-part
        let f = poly("x3 x4 + x2 x3 - x1 x2 - x1 x4", 4);
        let g = symmetrize_pair(&f, 2, 5);
        assert_eq!(
            g,
            poly("x3 x4 + x2 x3 - x1 x2 - x1 x4 + x3 x5 - x1 x5", 5)
        );
    }
}
