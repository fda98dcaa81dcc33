//! Sparse multivariate polynomials over exact rationals.
//!
//! Monomials are exponent vectors on the variables `x1, x2, ...` (1-based),
//! kept with trailing zeros trimmed and ordered graded-lexicographically.
//! Polynomials never store zero coefficients and never round: all arithmetic
//! is exact over `BigRational`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::combinat::Permutation;
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn coeff_int(k: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(k))
}

/// Exponent vector with trailing zeros trimmed; `exps[i]` is the exponent of `x_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// The variable `x_var` (1-based) raised to `exp`.
    pub fn var_pow(var: usize, exp: u32) -> Self {
        assert!(var >= 1);
        if exp == 0 {
            return Monomial::one();
        }
        let mut exps = vec![0; var];
        exps[var - 1] = exp;
        Monomial { exps }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        assert!(var >= 1);
        self.exps.get(var - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index with a nonzero exponent (0 for the constant monomial).
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    /// Multiset of nonzero exponents, sorted decreasing (the monomial content).
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.exps.iter().copied().filter(|&e| e > 0).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let mut exps = Vec::with_capacity(len);
        for i in 0..len {
            exps.push(
                self.exps.get(i).copied().unwrap_or(0) + other.exps.get(i).copied().unwrap_or(0),
            );
        }
        Monomial::new(exps)
    }

    /// Componentwise quotient, or `None` when some exponent would go negative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (i, &e) in other.exps.iter().enumerate() {
            if exps[i] < e {
                return None;
            }
            exps[i] -= e;
        }
        Some(Monomial::new(exps))
    }

    /// Relabel variables through `sigma` (`x_i -> x_{sigma(i)}`); indices above
    /// `sigma.n()` are left in place.
    pub fn apply(&self, sigma: &Permutation) -> Monomial {
        let mut len = 0usize;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                len = len.max(sigma.image(i + 1));
            }
        }
        let mut exps = vec![0u32; len];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[sigma.image(i + 1) - 1] += e;
            }
        }
        Monomial::new(exps)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then lex with `x1` most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.exps.len().max(other.exps.len());
            for i in 0..len {
                let a = self.exps.get(i).copied().unwrap_or(0);
                let b = other.exps.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
    nvars: usize,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            nvars,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(Coeff::one(), nvars)
    }

    pub fn constant(c: Coeff, nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms, nvars }
    }

    pub fn monomial(m: Monomial, c: Coeff, nvars: usize) -> Self {
        let nvars = nvars.max(m.max_var());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms, nvars }
    }

    /// The variable `x_var` as a polynomial.
    pub fn var(var: usize, nvars: usize) -> Self {
        Polynomial::monomial(Monomial::var_pow(var, 1), Coeff::one(), nvars)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>, nvars: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Declare a (possibly larger) ambient variable count.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.max_var());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scalar_mul(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(other.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(m.max_var()));
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when every term has degree `d`; zero counts as homogeneous of any degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        for m in it {
            if m.degree() != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// All coefficients are integers.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The `x_i -> x_{sigma(i)}` substitution.
    pub fn act(&self, sigma: &Permutation) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(sigma.n()));
        for (m, c) in &self.terms {
            out.add_term(m.apply(sigma), c.clone());
        }
        out
    }

    /// Kill every term divisible by one of the listed variables.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        'terms: for (m, c) in &self.terms {
            for &v in vars {
                if m.exponent(v) > 0 {
                    continue 'terms;
                }
            }
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Exact division: returns `q` with `self = q * d`, or `Error::NonDivisible`.
    ///
    /// Term reduction against the divisor's graded-lex leading term; any
    /// nonzero remainder step aborts the division.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Polynomial> {
        let (dm, dc) = d
            .leading()
            .ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars.max(d.nvars));
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.checked_div(&dm).ok_or(Error::NonDivisible)?;
            let qc = rc / &dc;
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&d.mul_monomial(&qm, &qc));
        }
        Ok(quot)
    }

    /// Canonical text form, leading term first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{}*{}", mag, m));
            }
        }
        out
    }

    /// Parse the text form produced by [`render`](Self::render); also accepts
    /// redundant whitespace and explicit `1*` coefficients.
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(p);
        }
        // split into signed term chunks
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut started = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' if started && cur.trim().is_empty() => {
                    return Err(Error::invalid("dangling sign in polynomial"));
                }
                '+' => {
                    if started {
                        chunks.push((sign, std::mem::take(&mut cur)));
                    }
                    sign = false;
                    started = true;
                }
                '-' => {
                    if started && !cur.trim().is_empty() {
                        chunks.push((sign, std::mem::take(&mut cur)));
                        sign = true;
                    } else if !started {
                        sign = true;
                        started = true;
                    } else {
                        sign = true;
                    }
                }
                _ => {
                    if !ch.is_whitespace() || !cur.is_empty() {
                        cur.push(ch);
                    }
                    started = true;
                }
            }
        }
        if !cur.trim().is_empty() {
            chunks.push((sign, cur));
        }
        for (neg, chunk) in chunks {
            let (m, c) = parse_term(chunk.trim())?;
            let c = if neg { -c } else { c };
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// JSON form: array of `{exponents, numerator, denominator}` in canonical
    /// (leading-first) order, wrapped with the ambient variable count.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                json!({
                    "exponents": m.exponents(),
                    "numerator": c.numer().to_string(),
                    "denominator": c.denom().to_string(),
                })
            })
            .collect();
        json!({ "nvars": self.nvars, "terms": terms, "text": self.render() })
    }

    pub fn from_json(v: &Value) -> Result<Polynomial> {
        let nvars = v
            .get("nvars")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::invalid("polynomial json: missing nvars"))? as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::invalid("polynomial json: missing terms"))?;
        let mut p = Polynomial::zero(nvars);
        for t in terms {
            let exps: Vec<u32> = t
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::invalid("term json: missing exponents"))?
                .iter()
                .map(|e| e.as_u64().map(|x| x as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::invalid("term json: bad exponent"))?;
            let num = t
                .get("numerator")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::invalid("term json: missing numerator"))?;
            let den = t
                .get("denominator")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::invalid("term json: missing denominator"))?;
            let num = BigInt::from_str(num).map_err(|e| Error::invalid(e.to_string()))?;
            let den = BigInt::from_str(den).map_err(|e| Error::invalid(e.to_string()))?;
            if den.is_zero() {
                return Err(Error::invalid("zero denominator"));
            }
            p.add_term(Monomial::new(exps), BigRational::new(num, den));
        }
        Ok(p)
    }
}

fn parse_term(s: &str) -> Result<(Monomial, Coeff)> {
    if s.is_empty() {
        return Err(Error::invalid("empty term"));
    }
    let mut coeff = Coeff::one();
    let mut rest = s;
    // optional leading rational, optionally followed by '*'
    let split = s
        .find(|c: char| c == '*' || c == 'x')
        .unwrap_or(s.len());
    let head = s[..split].trim();
    if !head.is_empty() {
        coeff = parse_rational(head)?;
        rest = s[split..].trim_start_matches('*').trim();
    } else if s.as_bytes()[split.min(s.len() - 1)] == b'*' {
        return Err(Error::invalid("term starts with '*'"));
    }
    let mut m = Monomial::one();
    if !rest.is_empty() {
        for part in rest.split_whitespace() {
            let part = part.trim_matches('*').trim();
            if part.is_empty() {
                continue;
            }
            let body = part
                .strip_prefix('x')
                .ok_or_else(|| Error::invalid(format!("expected variable, got {part:?}")))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (
                    v.parse::<usize>().map_err(|e| Error::invalid(e.to_string()))?,
                    e.parse::<u32>().map_err(|e| Error::invalid(e.to_string()))?,
                ),
                None => (
                    body.parse::<usize>()
                        .map_err(|e| Error::invalid(e.to_string()))?,
                    1,
                ),
            };
            if var == 0 {
                return Err(Error::invalid("variables are 1-based"));
            }
            m = m.mul(&Monomial::var_pow(var, exp));
        }
    }
    Ok((m, coeff))
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|e| Error::invalid(format!("bad coefficient: {e}")))?;
    let den = BigInt::from_str(den).map_err(|e| Error::invalid(format!("bad coefficient: {e}")))?;
    if den.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The elementary symmetric polynomial `e_r` in `nvars` variables.
///
/// `e_0 = 1`, and `e_r = 0` whenever `r > nvars`.
pub fn elementary_e(r: usize, nvars: usize) -> Polynomial {
    if r > nvars {
        return Polynomial::zero(nvars);
    }
    if r == 0 {
        return Polynomial::one(nvars);
    }
    let mut terms = Vec::new();
    let mut subset: Vec<usize> = (1..=r).collect();
    loop {
        let mut exps = vec![0u32; *subset.last().unwrap()];
        for &v in &subset {
            exps[v - 1] = 1;
        }
        terms.push((Monomial::new(exps), Coeff::one()));
        // next r-subset of {1..nvars} in lex order
        let mut i = r;
        while i > 0 && subset[i - 1] == nvars - r + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        subset[i - 1] += 1;
        for j in i..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Polynomial::from_terms(terms, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Permutation;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let x1 = Polynomial::var(1, 2);
        let x2 = Polynomial::var(2, 2);
        let d = x2.sub(&x1);
        assert_eq!(d.mul(&Polynomial::one(2)), d);
        let e1 = elementary_e(1, 2);
        let sq = e1.mul(&e1);
        assert_eq!(sq, p("x1^2 + 2*x1 x2 + x2^2", 2));
    }

    #[test]
    fn four_term_product() {
        let a = p("x2 - x1", 4);
        let b = p("x4 - x3", 4);
        let prod = a.mul(&b);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod, p("x2 x4 - x2 x3 - x1 x4 + x1 x3", 4));
    }

    #[test]
    fn act_substitutes_and_preserves_content() {
        let swap = Permutation::from_word(vec![2, 1]).unwrap();
        assert_eq!(p("x2 - x1", 2).act(&swap), p("x1 - x2", 2));
        let id = Permutation::identity(3);
        let q = p("3*x1^2 x3 + x2", 3);
        assert_eq!(q.act(&id), q);
        for w in Permutation::all(4) {
            for (m, _) in p("x1^2 x2 - 5*x3 x4 + 7", 4).act(&w).terms() {
                let c = m.content();
                assert!(c == vec![2, 1] || c == vec![1, 1] || c.is_empty());
            }
        }
    }

    #[test]
    fn elementary_cases() {
        assert_eq!(elementary_e(1, 3), p("x1 + x2 + x3", 3));
        assert_eq!(elementary_e(0, 3), Polynomial::one(3));
        assert!(elementary_e(4, 3).is_zero());
        for sigma in Permutation::all(4) {
            assert_eq!(elementary_e(2, 4).act(&sigma), elementary_e(2, 4));
        }
    }

    #[test]
    fn substitution_kills_divisible_terms() {
        let q = p("x5 x1 + x5^2 x2 + x3", 5);
        assert_eq!(q.substitute_zero(&[5]), p("x3", 5));
        assert_eq!(q.substitute_zero(&[4]), q);
    }

    #[test]
    fn exact_division() {
        let num = p("x1^2 - x2^2", 2);
        let den = p("x1 - x2", 2);
        assert_eq!(num.exact_divide(&den).unwrap(), p("x1 + x2", 2));
        assert_eq!(num.exact_divide(&Polynomial::one(2)).unwrap(), num);
        assert_eq!(
            p("x1^2 + x2", 2).exact_divide(&den),
            Err(Error::NonDivisible)
        );
    }

    #[test]
    fn render_parse_roundtrip_examples() {
        for s in [
            "x2 - x1",
            "- x1 + 2*x2 x3^2 - 1/2",
            "0",
            "5",
            "x1^3",
            "3/4*x1 x2 x3",
        ] {
            let q = p(s, 3);
            assert_eq!(Polynomial::parse(&q.render(), 3).unwrap(), q);
            assert_eq!(Polynomial::from_json(&q.to_json()).unwrap(), q);
        }
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 1, 1]);
        let c = Monomial::new(vec![0, 0, 4]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::one() < b);
    }
}
