//! Determinants over exact commutative rings.

use super::{Family, Rational, SparsePolynomial};
use crate::error::{Error, Result};
use rustc_hash::FxHashMap;

/// The operations determinant routines need. `div_exact` is only ever called
/// where the quotient is known to be exact (Bareiss elimination).
pub trait Ring: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Result<Self>;
}

impl Ring for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Result<Self> {
        self.checked_div(o).ok_or(Error::NotDivisible)
    }
}

impl Ring for SparsePolynomial {
    fn is_zero(&self) -> bool {
        SparsePolynomial::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Result<Self> {
        SparsePolynomial::div_exact(self, o)
    }
}

/// Cofactor expansions beyond this size switch to Bareiss elimination.
pub const LAPLACE_MAX: usize = 6;

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    Ok(n)
}

/// Determinant; `one` is the ring's unit (returned for the empty matrix).
pub fn det<R: Ring>(m: &[Vec<R>], one: &R) -> Result<R> {
    let n = check_square(m)?;
    if n <= LAPLACE_MAX {
        det_laplace(m, one)
    } else {
        det_bareiss(m, one)
    }
}

/// Determinant of a polynomial matrix in family `family`.
pub fn det_poly(m: &[Vec<SparsePolynomial>], family: Family) -> Result<SparsePolynomial> {
    det(m, &SparsePolynomial::one(family))
}

/// Cofactor expansion with memoised minors: minors on the first `j` columns
/// are indexed by their row subset, so each is computed once (O(n·2^n) ring
/// multiplications rather than n!).
pub fn det_laplace<R: Ring>(m: &[Vec<R>], one: &R) -> Result<R> {
    det_laplace_with(m, one, |a, b| a.mul(b))
}

/// As [`det_laplace`] with a caller-supplied product, e.g. a truncated one.
pub fn det_laplace_with<R: Ring>(m: &[Vec<R>], one: &R, mul: impl Fn(&R, &R) -> R) -> Result<R> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(one.clone());
    }
    assert!(n < 64, "matrix too large for subset memoisation");
    let mut level: FxHashMap<u64, R> = FxHashMap::default();
    level.insert(0, one.clone());
    for col in 0..n {
        let mut next: FxHashMap<u64, R> = FxHashMap::default();
        for (&mask, minor) in &level {
            // Add one row r ∉ mask: the new minor on rows mask∪{r}, columns
            // 0..=col, gets the term a[r][col]·minor with the sign from r's
            // position within the sorted row set and the column index.
            for (r, row) in m.iter().enumerate() {
                if mask & (1 << r) != 0 || row[col].is_zero() {
                    continue;
                }
                let pos = (mask & ((1u64 << r) - 1)).count_ones() as usize;
                let term = mul(&row[col], minor);
                let term = if (pos + col) % 2 == 1 { term.neg() } else { term };
                let key = mask | (1 << r);
                match next.get_mut(&key) {
                    Some(v) => *v = v.add(&term),
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.is_empty() {
            return Ok(one.sub(one));
        }
        level = next;
    }
    Ok(level.remove(&((1u64 << n) - 1)).unwrap_or_else(|| one.sub(one)))
}

/// Fraction-free Gaussian elimination (Bareiss), with row pivoting.
pub fn det_bareiss<R: Ring>(m: &[Vec<R>], one: &R) -> Result<R> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(one.clone());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(one.sub(one)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}
