//! Sparse multivariate polynomials over exact rationals.

use super::{MultiIndex, Rational};
use crate::error::{Error, Result};
use rustc_hash::FxHashMap;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Variable family a polynomial lives in. Mixing families is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `t_j`, the formal roots.
    Roots,
    /// `T_k = (1/k) Σ t_j^k`.
    PowerSums,
    /// `u_i`, the abelian coordinates.
    Abelian,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Roots => "t",
            Family::PowerSums => "T",
            Family::Abelian => "u",
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            't' => Some(Family::Roots),
            'T' => Some(Family::PowerSums),
            'u' => Some(Family::Abelian),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so `==` is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    family: Family,
    terms: Vec<(MultiIndex, Rational)>,
}

fn sort_terms(mut v: Vec<(MultiIndex, Rational)>) -> Vec<(MultiIndex, Rational)> {
    v.retain(|(_, c)| !c.is_zero());
    v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    v
}

// Packs up to 16 exponents, each below 256, into one key.
fn pack(m: &MultiIndex) -> u128 {
    let mut k = 0u128;
    for (i, &e) in m.exponents().iter().enumerate() {
        k |= (e as u128) << (8 * i);
    }
    k
}

fn unpack(mut k: u128) -> MultiIndex {
    let mut v = Vec::with_capacity(16);
    while k != 0 {
        v.push((k & 0xff) as u32);
        k >>= 8;
    }
    MultiIndex::from_exponents(&v)
}

impl SparsePolynomial {
    pub fn zero(family: Family) -> Self {
        SparsePolynomial {
            family,
            terms: Vec::new(),
        }
    }

    pub fn one(family: Family) -> Self {
        Self::constant(family, Rational::one())
    }

    pub fn constant(family: Family, c: Rational) -> Self {
        Self::monomial(family, MultiIndex::one(), c)
    }

    /// The variable with 1-based id `var`.
    pub fn var(family: Family, var: usize) -> Self {
        Self::monomial(family, MultiIndex::var(var, 1), Rational::one())
    }

    pub fn monomial(family: Family, m: MultiIndex, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        SparsePolynomial { family, terms }
    }

    /// Builds from arbitrary terms; duplicates are summed.
    pub fn from_terms(family: Family, terms: impl IntoIterator<Item = (MultiIndex, Rational)>) -> Self {
        let mut acc: FxHashMap<MultiIndex, Rational> = FxHashMap::default();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        SparsePolynomial {
            family,
            terms: sort_terms(acc.into_iter().collect()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> &[(MultiIndex, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &MultiIndex) -> Rational {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<&(MultiIndex, Rational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Set of variable ids that occur.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.iter().map(|(v, _)| v))
            .collect()
    }

    fn check_family(&self, other: &Self) -> Result<()> {
        if self.family != other.family {
            Err(Error::FamilyMismatch {
                left: self.family,
                right: other.family,
            })
        } else {
            Ok(())
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        use std::cmp::Ordering::*;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate { -c } else { c.clone() }));
        }
        SparsePolynomial {
            family: self.family,
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        Ok(self.mul_impl(other, None))
    }

    /// Product keeping only monomials whose exponents stay under `caps`
    /// (`caps[i]` bounds variable `i+1`). This is multiplication in the
    /// truncated ring Q[x]/(x_i^{caps[i]+1}).
    pub fn mul_truncated(&self, other: &Self, caps: &[u32]) -> Result<Self> {
        self.check_family(other)?;
        Ok(self.mul_impl(other, Some(caps)))
    }

    fn mul_impl(&self, other: &Self, caps: Option<&[u32]>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.family);
        }
        if self.terms.len() == 1 && caps.is_none() {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 && caps.is_none() {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        let maxvar = self.max_var().max(other.max_var());
        let deg = self.total_degree().unwrap_or(0) + other.total_degree().unwrap_or(0);
        let keep = |m: &MultiIndex| caps.map_or(true, |c| m.fits_under(c));
        if maxvar <= 16 && deg < 256 {
            let pb: Vec<(u128, &Rational, &MultiIndex)> =
                other.terms.iter().map(|(m, c)| (pack(m), c, m)).collect();
            let mut acc: FxHashMap<u128, Rational> = FxHashMap::default();
            acc.reserve(self.terms.len().max(other.terms.len()) * 2);
            for (ma, ca) in &self.terms {
                let ka = pack(ma);
                for &(kb, cb, mb) in &pb {
                    if let Some(c) = caps {
                        if !ma.mul(mb).fits_under(c) {
                            continue;
                        }
                    }
                    let p = ca * cb;
                    acc.entry(ka + kb)
                        .and_modify(|v| *v += &p)
                        .or_insert(p);
                }
            }
            return SparsePolynomial {
                family: self.family,
                terms: sort_terms(acc.into_iter().map(|(k, c)| (unpack(k), c)).collect()),
            };
        }
        let mut acc: FxHashMap<MultiIndex, Rational> = FxHashMap::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !keep(&m) {
                    continue;
                }
                let p = ca * cb;
                acc.entry(m).and_modify(|v| *v += &p).or_insert(p);
            }
        }
        SparsePolynomial {
            family: self.family,
            terms: sort_terms(acc.into_iter().collect()),
        }
    }

    /// Multiplication by a single term preserves the order of terms.
    pub fn mul_term(&self, m: &MultiIndex, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.family);
        }
        SparsePolynomial {
            family: self.family,
            terms: self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_term(&MultiIndex::one(), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.family);
        for _ in 0..e {
            acc = acc.mul_impl(self, None);
        }
        acc
    }

    fn max_var(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.max_var()).max().unwrap_or(0)
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                out.push((m.lower(var).unwrap(), c * &Rational::from_int(e as i64)));
            }
        }
        // Lowering one fixed variable keeps the graded-lex order among survivors.
        SparsePolynomial {
            family: self.family,
            terms: sort_terms(out),
        }
    }

    /// Applies `∂/∂x_v` once for each entry of `vars` (a multiset).
    pub fn derivative_multi(&self, vars: &[usize]) -> Self {
        let mut p = self.clone();
        for &v in vars {
            if p.is_zero() {
                break;
            }
            p = p.partial_derivative(v);
        }
        p
    }

    /// Value at a point given as a map from variable id to value.
    pub fn evaluate(&self, assignment: &BTreeMap<usize, Rational>) -> Result<Rational> {
        let vars = self.variables();
        let n = vars.iter().copied().max().unwrap_or(0);
        let mut dense = vec![Rational::zero(); n];
        for v in vars {
            match assignment.get(&v) {
                Some(x) => dense[v - 1] = x.clone(),
                None => return Err(Error::MissingAssignment(format!("{}{}", self.family, v))),
            }
        }
        self.evaluate_dense(&dense)
    }

    /// Value at `values`, where `values[i]` is assigned to variable `i+1`.
    pub fn evaluate_dense(&self, values: &[Rational]) -> Result<Rational> {
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; values.len()];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let x = values
                    .get(v - 1)
                    .ok_or_else(|| Error::MissingAssignment(format!("{}{}", self.family, v)))?;
                let pw = &mut powers[v - 1];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * x;
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            total += &t;
        }
        Ok(total)
    }

    /// Replaces each variable by a polynomial in `target`.
    pub fn substitute(&self, assignment: &BTreeMap<usize, SparsePolynomial>, target: Family) -> Result<Self> {
        for p in assignment.values() {
            if p.family != target {
                return Err(Error::FamilyMismatch {
                    left: target,
                    right: p.family,
                });
            }
        }
        let mut powers: BTreeMap<usize, Vec<SparsePolynomial>> = BTreeMap::new();
        let mut acc = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (v, e) in m.iter() {
                let base = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingAssignment(format!("{}{}", self.family, v)))?;
                let pw = powers.entry(v).or_insert_with(|| vec![Self::one(target)]);
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul_impl(base, None);
                    pw.push(next);
                }
                t = t.mul_impl(&pw[e as usize], None);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Renames variables into another family via an injective map.
    pub fn rename(&self, family: Family, map: impl Fn(usize) -> Option<usize>) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut pairs = Vec::new();
            for (v, e) in m.iter() {
                let w = map(v).ok_or_else(|| Error::MissingAssignment(format!("{}{}", self.family, v)))?;
                pairs.push((w, e));
            }
            out.push((MultiIndex::from_pairs(&pairs), c.clone()));
        }
        Ok(Self::from_terms(family, out))
    }

    /// The common weighted degree of all terms, if the polynomial is
    /// weighted-homogeneous (`None` for zero or mixed degrees).
    pub fn weighted_homogeneous_degree(&self, weight: impl Fn(usize) -> u64) -> Option<u64> {
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(&weight));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Exact quotient; fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_family(divisor)?;
        let (lm, lc) = divisor.terms.first().ok_or(Error::NotDivisible)?.clone();
        let rest: Vec<(MultiIndex, Rational)> = divisor.terms[1..].to_vec();
        let mut rem: BTreeMap<MultiIndex, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm).ok_or(Error::NotDivisible)?;
            let qc = &c / &lc;
            for (rm, rc) in &rest {
                let k = rm.mul(&qm);
                let sub = rc * &qc;
                match rem.entry(k) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let v = o.get() - &sub;
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-&sub);
                    }
                }
            }
            quot.push((qm, qc));
        }
        // Quotient terms come out in decreasing order already.
        Ok(SparsePolynomial {
            family: self.family,
            terms: quot,
        })
    }

    /// Parses canonical text such as `1/3*u2^3 - u1`. The family is taken from
    /// the variable names; `family` is used for constants.
    pub fn parse(text: &str, family: Family) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("{m} in {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut fam: Option<Family> = None;
        let mut terms = Vec::new();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = Rational::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(err("expected sign"));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
                i += 1;
            }
            let term: String = bytes[start..i].iter().collect();
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let mut coef = sign;
            let mut pairs = Vec::new();
            for factor in term.split('*') {
                let first = factor.chars().next().ok_or_else(|| err("empty factor"))?;
                if let Some(f) = Family::from_symbol(first) {
                    if fam.is_some_and(|g| g != f) {
                        return Err(err("mixed variable families"));
                    }
                    fam = Some(f);
                    let body = &factor[1..];
                    let (idx, exp) = match body.split_once('^') {
                        Some((a, b)) => (a, b.parse::<u32>().map_err(|_| err("bad exponent"))?),
                        None => (body, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                    if idx == 0 {
                        return Err(err("variable index 0"));
                    }
                    pairs.push((idx, exp));
                } else {
                    let c: Rational = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coef = &coef * &c;
                }
            }
            terms.push((MultiIndex::from_pairs(&pairs), coef));
        }
        Ok(Self::from_terms(fam.unwrap_or(family), terms))
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, fam: Family, m: &MultiIndex) -> fmt::Result {
    let mut first = true;
    for (v, e) in m.iter() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{fam}{v}")?;
        } else {
            write!(f, "{fam}{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.family, m)?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on a family mismatch; use the `checked_*` methods
// where mixing is possible.
impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_add(o).expect("family mismatch in +")
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_sub(o).expect("family mismatch in -")
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, o: &SparsePolynomial) -> SparsePolynomial {
        self.checked_mul(o).expect("family mismatch in *")
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}
