//! Young tableaux: standard, cocharge, and arbitrary fillings, with RSK,
//! evacuation, the (de)standardization maps, and box-addition operators.
//!
//! Boxes are addressed `(row, col)`, 1-based, in English notation.

use serde_json::{json, Value};

use crate::combinat::{Partition, Permutation, SubsetI};
use crate::error::{Error, Result};

fn shape_of(rows: &[Vec<usize>]) -> Result<Partition> {
    Partition::new(rows.iter().map(|r| r.len()).collect())
        .map_err(|_| Error::invalid("row lengths must form a partition"))
}

fn rows_from_json(v: &Value) -> Result<Vec<Vec<usize>>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid("tableau json must be an array of rows"))?;
    arr.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::invalid("tableau row must be an array"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| Error::invalid("tableau entries must be integers"))
                })
                .collect()
        })
        .collect()
}

/// A filling of a Ferrers diagram by `1..n`, each value once (not necessarily
/// row- or column-increasing).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::invalid("filling must use 1..n once each"));
                }
                seen[e] = true;
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated")
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    /// The box `(row, col)` holding `i` (1-based).
    pub fn position_of(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == i) {
                return (r + 1, c + 1);
            }
        }
        panic!("entry {i} not present");
    }

    /// Entries of column `col` (1-based), top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|r| r.get(col - 1).copied())
            .collect()
    }

    /// Fill the same shape plus one box `v` holding `n+1`.
    pub fn add_corner(&self, v: (usize, usize)) -> Result<Tableau> {
        self.shape().add_corner(v)?;
        let mut rows = self.rows.clone();
        let n = self.n();
        if v.0 == rows.len() + 1 {
            rows.push(vec![n + 1]);
        } else {
            rows[v.0 - 1].push(n + 1);
        }
        Ok(Tableau { rows })
    }

    /// Concatenation of the rows, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] >= self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }

    pub fn from_json(v: &Value) -> Result<Tableau> {
        Tableau::new(rows_from_json(v)?)
    }
}

/// A standard Young tableau.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    t: Tableau,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        if !t.is_standard() {
            return Err(Error::invalid("rows and columns must strictly increase"));
        }
        Ok(StandardTableau { t })
    }

    /// The row-reading filling: `1..lambda_1` in the first row and so on.
    pub fn row_superstandard(shape: &Partition) -> StandardTableau {
        let mut rows = Vec::with_capacity(shape.len());
        let mut next = 1;
        for &p in shape.parts() {
            rows.push((next..next + p).collect());
            next += p;
        }
        StandardTableau {
            t: Tableau { rows },
        }
    }

    pub fn single_row(n: usize) -> StandardTableau {
        StandardTableau::row_superstandard(&Partition::new(vec![n]).expect("positive"))
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.t
    }

    pub fn into_tableau(self) -> Tableau {
        self.t
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.t.rows()
    }

    pub fn shape(&self) -> Partition {
        self.t.shape()
    }

    pub fn n(&self) -> usize {
        self.t.n()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.t.entry(row, col)
    }

    pub fn position_of(&self, i: usize) -> (usize, usize) {
        self.t.position_of(i)
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.t.reading_word()
    }

    /// Ascending and descending indices `(Asi, Dsi)`: `i` descends when `i+1`
    /// sits in a strictly lower row (and weakly left column).
    pub fn asi_dsi(&self) -> (SubsetI, SubsetI) {
        let n = self.n();
        let mut asi = Vec::new();
        let mut dsi = Vec::new();
        for i in 1..n {
            let (r1, _) = self.position_of(i);
            let (r2, _) = self.position_of(i + 1);
            if r2 > r1 {
                dsi.push(i);
            } else {
                asi.push(i);
            }
        }
        (
            SubsetI::new(n, asi).expect("in range"),
            SubsetI::new(n, dsi).expect("in range"),
        )
    }

    pub fn dsi(&self) -> SubsetI {
        self.asi_dsi().1
    }

    /// `Dsi^c`: the descent indices reflected by `i -> n - i`.
    pub fn dsi_c(&self) -> SubsetI {
        self.dsi().reflect()
    }

    pub fn asi_c(&self) -> SubsetI {
        self.dsi_c().complement()
    }

    /// `T + v`: put `n+1` in the external corner `v`.
    pub fn add_corner(&self, v: (usize, usize)) -> Result<StandardTableau> {
        Ok(StandardTableau {
            t: self.t.add_corner(v)?,
        })
    }

    /// `S +~ v = ev(ev S + v)`.
    pub fn add_corner_ev(&self, v: (usize, usize)) -> Result<StandardTableau> {
        Ok(evacuation(&evacuation(self).add_corner(v)?))
    }

    /// `iota S`: add the first-row corner.
    pub fn iota(&self) -> StandardTableau {
        let v = (1, self.shape().part(0) + 1);
        self.add_corner(v).expect("first-row corner always addable")
    }

    /// `iota~ S = ev(iota(ev S))`, computed by the shift description: add one
    /// to every entry, push the first row right, and put 1 up front.
    pub fn iota_ev(&self) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|&e| e + 1).collect())
            .collect();
        rows[0].insert(0, 1);
        StandardTableau {
            t: Tableau { rows },
        }
    }

    /// All standard tableaux of the given shape, ordered lexicographically by
    /// row-reading word.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.n();
        let parts = shape.parts().to_vec();
        let mut fill_len = vec![0usize; parts.len()];
        let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
        let mut out = Vec::new();
        fn rec(
            k: usize,
            n: usize,
            parts: &[usize],
            fill_len: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<StandardTableau>,
        ) {
            if k > n {
                out.push(StandardTableau {
                    t: Tableau { rows: rows.clone() },
                });
                return;
            }
            for r in 0..parts.len() {
                if fill_len[r] < parts[r] && (r == 0 || fill_len[r - 1] > fill_len[r]) {
                    rows[r].push(k);
                    fill_len[r] += 1;
                    rec(k + 1, n, parts, fill_len, rows, out);
                    fill_len[r] -= 1;
                    rows[r].pop();
                }
            }
        }
        rec(1, n, &parts, &mut fill_len, &mut rows, &mut out);
        out.sort_by_key(|t| t.reading_word());
        out
    }

    pub fn to_json(&self) -> Value {
        self.t.to_json()
    }

    pub fn from_json(v: &Value) -> Result<StandardTableau> {
        StandardTableau::new(rows_from_json(v)?)
    }
}

/// A generalized cocharge tableau: a semi-standard filling by non-negative
/// integers whose content uses every value `0..k` with positive multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CochargeTableau {
    rows: Vec<Vec<usize>>,
}

impl CochargeTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        shape_of(&rows)?;
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::invalid("rows must weakly increase"));
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r - 1][c] >= rows[r][c] {
                    return Err(Error::invalid("columns must strictly increase"));
                }
            }
        }
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut present = vec![false; max + 1];
        for &e in rows.iter().flatten() {
            present[e] = true;
        }
        if rows.is_empty() || rows[0].first() != Some(&0) {
            return Err(Error::invalid("upper-left entry must be 0"));
        }
        if present.iter().any(|p| !p) {
            return Err(Error::invalid(
                "content must use every value 0..k with positive multiplicity",
            ));
        }
        Ok(CochargeTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        shape_of(&self.rows).expect("validated")
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row - 1][col - 1]
    }

    /// Largest value present; the content uses `0..=max_value`.
    pub fn max_value(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entry sum (the cocharge for tableaux in `CCT`).
    pub fn entry_sum(&self) -> usize {
        self.rows.iter().flatten().sum()
    }

    /// Multiplicities of the values `0..=max_value`.
    pub fn content_multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0usize; self.max_value() + 1];
        for &e in self.rows.iter().flatten() {
            mult[e] += 1;
        }
        mult
    }

    /// The type: the subset of `{1..n-1}` whose composition represents the
    /// content.
    pub fn type_subset(&self) -> SubsetI {
        let alpha = crate::combinat::Composition::new(self.content_multiplicities())
            .expect("multiplicities are positive");
        SubsetI::from_composition(&alpha)
    }

    /// `Dsp^c`: the reflected type of a tableau satisfying the cocharge
    /// condition; errors on a merely generalized cocharge tableau.
    pub fn dsp_c(&self) -> Result<SubsetI> {
        if !self.is_cct() {
            return Err(Error::NotCocharge);
        }
        Ok(self.type_subset().reflect())
    }

    pub fn asp_c(&self) -> Result<SubsetI> {
        Ok(self.dsp_c()?.complement())
    }

    /// The cocharge condition: for every `h > 0`, the leftmost box holding
    /// `h` has some box in a strictly higher row holding `h - 1`.
    pub fn is_cct(&self) -> bool {
        for h in 1..=self.max_value() {
            let mut leftmost: Option<(usize, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == h && leftmost.map_or(true, |(_, lc)| c < lc) {
                        leftmost = Some((r, c));
                    }
                }
            }
            let (lr, _) = leftmost.expect("every value 0..k is present");
            let found = self.rows[..lr]
                .iter()
                .any(|row| row.iter().any(|&e| e == h - 1));
            if !found {
                return false;
            }
        }
        true
    }

    /// Standardization: inverse of `ct_J` for `J` the type of this tableau.
    pub fn standardize(&self) -> StandardTableau {
        let mut boxes: Vec<(usize, usize, usize)> = Vec::new(); // (value, col, row)
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                boxes.push((e, c, r));
            }
        }
        boxes.sort_unstable();
        let mut rows: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (next, &(_, c, r)) in boxes.iter().enumerate() {
            rows[r][c] = next + 1;
        }
        StandardTableau::new(rows).expect("standardization of a semi-standard filling")
    }

    /// `ct^{-1}`: standardization restricted to cocharge tableaux.
    pub fn ct_inverse(&self) -> Result<StandardTableau> {
        if !self.is_cct() {
            return Err(Error::NotCocharge);
        }
        Ok(self.standardize())
    }

    /// `C +^ v = ct(ct^{-1}(C) +~ v)`; requires the cocharge condition.
    pub fn add_corner_ct(&self, v: (usize, usize)) -> Result<CochargeTableau> {
        let s = self.ct_inverse()?;
        Ok(ct(&s.add_corner_ev(v)?))
    }

    /// `iota^ C`: push the first row right and fill the new upper-left box
    /// with 0 (works for every generalized cocharge tableau).
    pub fn iota_ct(&self) -> CochargeTableau {
        let mut rows = self.rows.clone();
        rows[0].insert(0, 0);
        CochargeTableau { rows }
    }

    /// All cocharge tableaux of the given shape, ordered lexicographically by
    /// row-reading word.
    pub fn all(shape: &Partition) -> Vec<CochargeTableau> {
        let mut out: Vec<CochargeTableau> = StandardTableau::all(shape)
            .iter()
            .map(ct)
            .collect();
        out.sort_by_key(|c| c.rows.iter().flatten().copied().collect::<Vec<_>>());
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.rows)
    }

    pub fn from_json(v: &Value) -> Result<CochargeTableau> {
        CochargeTableau::new(rows_from_json(v)?)
    }
}

/// `ct_J(S)`: replace the entry `p` of `S` by `|{j in J : j < p}|`.
/// Requires `Dsi(S)` contained in `J`.
pub fn ct_j(s: &StandardTableau, j: &SubsetI) -> Result<CochargeTableau> {
    let dsi = s.dsi();
    if !dsi.is_subset_of(j) {
        return Err(Error::DescentsNotContained {
            found: dsi.elems().to_vec(),
            required: j.elems().to_vec(),
        });
    }
    let rows = s
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&p| j.elems().iter().filter(|&&x| x < p).count())
                .collect()
        })
        .collect();
    CochargeTableau::new(rows)
}

/// The cocharge tableau `ct(S) = ct_J(S)` for `J = Dsi(S)`.
pub fn ct(s: &StandardTableau) -> CochargeTableau {
    ct_j(s, &s.dsi()).expect("Dsi(S) contains itself")
}

/// `cc(S)`: the entry sum of `ct(S)`, also `sum over Dsi(S) of (n - i)`.
pub fn cocharge(s: &StandardTableau) -> usize {
    let n = s.n();
    s.dsi().elems().iter().map(|&i| n - i).sum()
}

/// Schuetzenberger evacuation, by iterated delta slides.
pub fn evacuation(s: &StandardTableau) -> StandardTableau {
    let n = s.n();
    let mut grid: Vec<Vec<Option<usize>>> = s
        .rows()
        .iter()
        .map(|r| r.iter().map(|&e| Some(e)).collect())
        .collect();
    let mut out: Vec<Vec<usize>> = s.rows().iter().map(|r| vec![0; r.len()]).collect();
    for label in (1..=n).rev() {
        let (mut r, mut c) = (0usize, 0usize);
        grid[r][c] = None;
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let below = grid
                .get(r + 1)
                .and_then(|row| row.get(c))
                .copied()
                .flatten();
            match (right, below) {
                (None, None) => break,
                (Some(x), None) => {
                    grid[r][c] = Some(x);
                    c += 1;
                }
                (None, Some(y)) => {
                    grid[r][c] = Some(y);
                    r += 1;
                }
                (Some(x), Some(y)) => {
                    if x < y {
                        grid[r][c] = Some(x);
                        c += 1;
                    } else {
                        grid[r][c] = Some(y);
                        r += 1;
                    }
                }
            }
            grid[r][c] = None;
        }
        out[r][c] = label;
    }
    StandardTableau::new(out).expect("evacuation preserves standardness")
}

/// Row-insertion RSK: returns the insertion and recording tableaux.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.word().iter().enumerate() {
        let mut val = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![val]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > val) {
                None => {
                    p[r].push(val);
                    q[r].push(step + 1);
                    break;
                }
                Some(idx) => {
                    std::mem::swap(&mut p[r][idx], &mut val);
                    r += 1;
                }
            }
        }
    }
    (
        StandardTableau::new(p).expect("insertion tableau is standard"),
        StandardTableau::new(q).expect("recording tableau is standard"),
    )
}

/// Inverse RSK: the permutation with the given insertion and recording
/// tableaux (which must share a shape).
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::invalid("P and Q must have the same shape"));
    }
    let n = p.n();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let mut word = vec![0usize; n];
    for k in (1..=n).rev() {
        let (r, _) = q.position_of(k);
        let mut val = rows[r - 1].pop().expect("box exists");
        for rr in (0..r - 1).rev() {
            let idx = rows[rr]
                .iter()
                .rposition(|&y| y < val)
                .expect("reverse bump target");
            std::mem::swap(&mut rows[rr][idx], &mut val);
        }
        word[k - 1] = val;
    }
    Permutation::from_word(word)
}

/// `Q~(w) = ev(Q(w))`, the modified recording tableau.
pub fn q_tilde(w: &Permutation) -> StandardTableau {
    evacuation(&rsk(w).1)
}
