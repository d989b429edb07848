//! The semigroup ⟨r,s⟩ of a cyclic curve y^r = f(x), its monomial basis and
//! the associated Young diagram.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(u32, u32)", into = "(u32, u32)")]
pub struct CurveSignature {
    r: u32,
    s: u32,
}

impl CurveSignature {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidSignature {
            r: r as i64,
            s: s as i64,
            reason: reason.to_string(),
        };
        if r < 2 {
            return Err(bad("r must be at least 2"));
        }
        if r >= s {
            return Err(bad("need r < s"));
        }
        if r.gcd(&s) != 1 {
            return Err(bad("r and s must be coprime"));
        }
        Ok(CurveSignature { r, s })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn genus(&self) -> usize {
        ((self.r - 1) * (self.s - 1) / 2) as usize
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.r == 2
    }

    /// All coprime signatures with r < s ≤ `max_s`.
    pub fn all_up_to(max_s: u32) -> Vec<Self> {
        let mut v = Vec::new();
        for s in 3..=max_s {
            for r in 2..s {
                if let Ok(sig) = Self::new(r, s) {
                    v.push(sig);
                }
            }
        }
        v
    }
}

impl TryFrom<(u32, u32)> for CurveSignature {
    type Error = Error;
    fn try_from((r, s): (u32, u32)) -> Result<Self> {
        Self::new(r, s)
    }
}

impl From<CurveSignature> for (u32, u32) {
    fn from(sig: CurveSignature) -> Self {
        (sig.r, sig.s)
    }
}

impl fmt::Display for CurveSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonGapSequence {
    pub values: Vec<u64>,
}

impl NonGapSequence {
    /// N(n).
    pub fn get(&self, n: usize) -> u64 {
        self.values[n]
    }
}

/// The first `count` elements of ⟨r,s⟩ in increasing order.
pub fn nongap_sequence(sig: CurveSignature, count: usize) -> NonGapSequence {
    let g = sig.genus() as u64;
    // Every integer ≥ 2g is a non-gap, so N(n) = n + g for n ≥ g.
    let bound = (2 * g).max(count as u64 + g);
    let (r, s) = (sig.r as u64, sig.s as u64);
    let mut v = Vec::new();
    let mut b = 0;
    while b * s <= bound {
        let mut a = 0;
        while a * r + b * s <= bound {
            v.push(a * r + b * s);
            a += 1;
        }
        b += 1;
    }
    v.sort_unstable();
    v.dedup();
    v.truncate(count);
    NonGapSequence { values: v }
}

/// Gaps of ⟨r,s⟩ in increasing order; there are exactly g of them.
pub fn gaps(sig: CurveSignature) -> Vec<u64> {
    let g = sig.genus();
    let ng = nongap_sequence(sig, g + 1);
    (0..2 * g as u64).filter(|x| !ng.values.contains(x)).collect()
}

/// x^a y^b with 0 ≤ b < r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassMonomial {
    pub a: u32,
    pub b: u32,
    pub wdeg: u64,
}

impl fmt::Display for WeierstrassMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a == 0 && self.b == 0 {
            return f.write_str("1");
        }
        match self.a {
            0 => {}
            1 => f.write_str("x")?,
            a => write!(f, "x^{a}")?,
        }
        match self.b {
            0 => {}
            1 => f.write_str("y")?,
            b => write!(f, "y^{b}")?,
        }
        Ok(())
    }
}

/// φ_0..φ_{count−1}, ordered by w-degree.
pub fn monomial_basis(sig: CurveSignature, count: usize) -> Vec<WeierstrassMonomial> {
    let (r, s) = (sig.r as u64, sig.s as u64);
    nongap_sequence(sig, count)
        .values
        .into_iter()
        .map(|n| {
            let b = (0..r)
                .find(|b| b * s <= n && (n - b * s) % r == 0)
                .expect("non-gap has a representation");
            WeierstrassMonomial {
                a: ((n - b * s) / r) as u32,
                b: b as u32,
                wdeg: n,
            }
        })
        .collect()
}

/// A partition: weakly decreasing positive parts, zero beyond its length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    /// Trailing zeros are dropped; any other zero or an increase is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "diagram parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Λ_i (1-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Whether box (row i, column j), both 1-based, is in the diagram.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    pub fn conjugate(&self) -> Self {
        let w = self.part(1) as usize;
        let parts = (1..=w)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        YoungDiagram { parts }
    }

    /// Length of the main diagonal (Frobenius rank).
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Self {
        d.parts
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Λ with Λ_i = g − N(i−1) + (i−1), i = 1..g.
pub fn young_diagram(sig: CurveSignature) -> YoungDiagram {
    let g = sig.genus();
    let n = nongap_sequence(sig, g.max(1));
    let parts = (1..=g)
        .map(|i| (g as u64 + (i as u64 - 1) - n.get(i - 1)) as u32)
        .collect();
    YoungDiagram::new(parts).expect("semigroup diagram is a partition")
}

/// w_i = 2g − N(i−1) − 1 = Λ_i + g − i, the weights of u_1..u_g.
pub fn u_weights(sig: CurveSignature) -> Vec<u64> {
    let g = sig.genus();
    let n = nongap_sequence(sig, g.max(1));
    (1..=g).map(|i| 2 * g as u64 - n.get(i - 1) - 1).collect()
}

/// (r²−1)(s²−1)/24.
pub fn diagram_weight_formula(sig: CurveSignature) -> u64 {
    let (r, s) = (sig.r as u64, sig.s as u64);
    (r * r - 1) * (s * s - 1) / 24
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: u32, s: u32) -> CurveSignature {
        CurveSignature::new(r, s).unwrap()
    }

    #[test]
    fn rejects_bad_signatures() {
        assert!(CurveSignature::new(4, 6).is_err());
        assert!(CurveSignature::new(5, 3).is_err());
        assert!(CurveSignature::new(1, 3).is_err());
        assert!(CurveSignature::new(3, 3).is_err());
        assert_eq!(sig(5, 7).genus(), 12);
    }

    #[test]
    fn nongaps() {
        assert_eq!(
            nongap_sequence(sig(5, 7), 13).values,
            vec![0, 5, 7, 10, 12, 14, 15, 17, 19, 20, 21, 22, 24]
        );
        assert_eq!(
            nongap_sequence(sig(7, 9), 13).values,
            vec![0, 7, 9, 14, 16, 18, 21, 23, 25, 27, 28, 30, 32]
        );
        assert_eq!(nongap_sequence(sig(2, 3), 2).values, vec![0, 2]);
        assert_eq!(gaps(sig(3, 4)), vec![1, 2, 5]);
    }

    #[test]
    fn monomials() {
        let names: Vec<String> = monomial_basis(sig(5, 7), 6).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["1", "x", "y", "x^2", "xy", "y^2"]);
        let m = monomial_basis(sig(7, 9), 11)[10];
        assert_eq!((m.a, m.b, m.wdeg), (4, 0, 28));
        let m = monomial_basis(sig(2, 5), 2)[1];
        assert_eq!((m.to_string(), m.wdeg), ("x".to_string(), 2));
    }

    #[test]
    fn diagrams() {
        assert_eq!(young_diagram(sig(5, 7)).parts(), &[12, 8, 7, 5, 4, 3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(
            young_diagram(sig(7, 9)).parts(),
            &[24, 18, 17, 13, 12, 11, 9, 8, 7, 6, 6, 5, 4, 3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1]
        );
        assert_eq!(young_diagram(sig(2, 3)).parts(), &[1]);
        assert_eq!(u_weights(sig(5, 7)), vec![23, 18, 16, 13, 11, 9, 8, 6, 4, 3, 2, 1]);
        assert_eq!(&u_weights(sig(7, 9))[..3], &[47, 40, 38]);
        let d = YoungDiagram::new(vec![3, 1, 1]).unwrap();
        assert_eq!(d.conjugate().parts(), &[3, 1, 1]);
        assert_eq!(YoungDiagram::new(vec![4, 2]).unwrap().conjugate().parts(), &[2, 2, 1, 1]);
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert_eq!(YoungDiagram::new(vec![2, 1, 0]).unwrap().len(), 2);
    }

    #[test]
    fn invariants_for_small_signatures() {
        for sig in CurveSignature::all_up_to(13) {
            let g = sig.genus();
            let lam = young_diagram(sig);
            assert_eq!(lam.weight(), diagram_weight_formula(sig), "{sig}");
            assert_eq!(gaps(sig).len(), g);
            let ng = nongap_sequence(sig, g + 1);
            if g >= 1 {
                assert_eq!(ng.get(g - 1), 2 * g as u64 - 2);
            }
            assert_eq!(ng.get(g), 2 * g as u64);
            let w = u_weights(sig);
            assert_eq!(w.last(), Some(&1));
            for i in 1..=g {
                assert_eq!(w[i - 1], lam.part(i) as u64 + g as u64 - i as u64);
                // hook length of box (1,i) in the conjugate reading
                let hook = lam.part(i) as u64 + lam.conjugate().part(1) as u64 - i as u64;
                assert_eq!(w[i - 1], hook);
            }
            assert_eq!(w, gaps(sig).into_iter().rev().collect::<Vec<_>>());
            let wd: Vec<u64> = monomial_basis(sig, g + 3).iter().map(|m| m.wdeg).collect();
            assert_eq!(wd, nongap_sequence(sig, g + 3).values);
        }
    }
}
