//! Exponent vectors with cached total degree.

use std::cmp::Ordering;

/// Exponents of variables `1..=len`, stored densely with trailing zeros
/// trimmed. Ordering is graded lexicographic: total degree first, then the
/// exponent of variable 1, variable 2, ...
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex {
    degree: u32,
    exps: Vec<u32>,
}

impl MultiIndex {
    pub fn one() -> Self {
        Self::default()
    }

    /// `exps[i]` is the exponent of variable `i+1`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v = exps.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        MultiIndex {
            degree: v.iter().sum(),
            exps: v,
        }
    }

    /// Single variable `var` (1-based) raised to `exp`.
    pub fn var(var: usize, exp: u32) -> Self {
        assert!(var >= 1, "variables are 1-based");
        if exp == 0 {
            return Self::one();
        }
        let mut v = vec![0; var];
        v[var - 1] = exp;
        MultiIndex { degree: exp, exps: v }
    }

    /// From sparse (variable, exponent) pairs; repeated variables accumulate.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let len = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let mut v = vec![0; len];
        for &(var, e) in pairs {
            assert!(var >= 1, "variables are 1-based");
            v[var - 1] += e;
        }
        Self::from_exponents(&v)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: usize) -> u32 {
        if var == 0 {
            return 0;
        }
        self.exps.get(var - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Largest variable id with a nonzero exponent (0 for the unit monomial).
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    /// Nonzero (variable, exponent) pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn weighted_degree(&self, weight: impl Fn(usize) -> u64) -> u64 {
        self.iter().map(|(v, e)| weight(v) * e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.exps.clone();
        for (a, b) in v.iter_mut().zip(&short.exps) {
            *a += b;
        }
        MultiIndex {
            degree: self.degree + other.degree,
            exps: v,
        }
    }

    /// `self / other` when every exponent of `other` is ≤ the one in `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.exps.len() > self.exps.len() || other.degree > self.degree {
            return None;
        }
        let mut v = self.exps.clone();
        for (a, b) in v.iter_mut().zip(&other.exps) {
            if *a < *b {
                return None;
            }
            *a -= b;
        }
        Some(Self::from_exponents(&v))
    }

    /// Exponent of `var` lowered by one; `None` if it was zero.
    pub fn lower(&self, var: usize) -> Option<Self> {
        let e = self.exponent(var);
        if e == 0 {
            return None;
        }
        let mut v = self.exps.clone();
        v[var - 1] -= 1;
        Some(Self::from_exponents(&v))
    }

    /// True when every exponent is at most the matching cap (missing caps are 0).
    pub fn fits_under(&self, caps: &[u32]) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e <= caps.get(i).copied().unwrap_or(0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        // Trailing zeros are trimmed, so plain slice order matches the order
        // of zero-padded vectors.
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}
