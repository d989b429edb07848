//! Stratification combinatorics: truncated diagrams, Frobenius
//! characteristics, n_k, N_k, the index lists ♮_k and the rim-hook reading.

use crate::error::{Error, Result};
use crate::semigroup::{nongap_sequence, u_weights, young_diagram, CurveSignature, NonGapSequence, YoungDiagram};
use serde::{Deserialize, Serialize};

fn range_check(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange {
            what,
            value: value as i64,
            lo: lo as i64,
            hi: hi as i64,
        })
    } else {
        Ok(())
    }
}

/// Λ^{(k)}: the first k parts.
pub fn truncate_upper(d: &YoungDiagram, k: usize) -> Result<YoungDiagram> {
    range_check("k", k, 0, d.len())?;
    YoungDiagram::new(d.parts()[..k].to_vec())
}

/// Λ^{[k]}: parts k+1, k+2, ...
pub fn truncate_lower(d: &YoungDiagram, k: usize) -> Result<YoungDiagram> {
    range_check("k", k, 0, d.len())?;
    YoungDiagram::new(d.parts()[k..].to_vec())
}

/// Frobenius characteristics (a;b), both strictly increasing: `a` are the
/// leg lengths and `b` the arm lengths of the diagonal boxes, read from the
/// lower-right diagonal box upwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCharacteristics {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl FrobeniusCharacteristics {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        let inc = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        if a.len() != b.len() || !inc(&a) || !inc(&b) {
            return Err(Error::Precondition(format!(
                "characteristics need equal-length strictly increasing lists: {a:?}; {b:?}"
            )));
        }
        Ok(FrobeniusCharacteristics { a, b })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// Hook lengths a_i + b_i + 1 of the diagonal boxes, increasing.
    pub fn hooks(&self) -> Vec<u64> {
        self.a.iter().zip(&self.b).map(|(&a, &b)| a as u64 + b as u64 + 1).collect()
    }

    pub fn to_diagram(&self) -> YoungDiagram {
        let r = self.rank();
        // diagonal row i (1-based, from the top) has arm b_{r−i+1}
        let arm = |i: usize| self.b[r - i] as usize;
        let leg = |j: usize| self.a[r - j] as usize;
        let mut parts: Vec<u32> = (1..=r).map(|i| (arm(i) + i) as u32).collect();
        let depth = if r == 0 { 0 } else { leg(1) + 1 };
        for i in r + 1..=depth {
            parts.push((1..=r).filter(|&j| leg(j) + j >= i).count() as u32);
        }
        YoungDiagram::new(parts).expect("characteristics describe a partition")
    }
}

impl std::fmt::Display for FrobeniusCharacteristics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let j = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", j(&self.a), j(&self.b))
    }
}

pub fn characteristics(d: &YoungDiagram) -> FrobeniusCharacteristics {
    let r = d.rank();
    let conj = d.conjugate();
    let mut a: Vec<u32> = (1..=r).map(|i| conj.part(i) - i as u32).collect();
    let mut b: Vec<u32> = (1..=r).map(|i| d.part(i) - i as u32).collect();
    a.reverse();
    b.reverse();
    FrobeniusCharacteristics { a, b }
}

// Enough non-gaps for every N(k+ℓ) used below.
fn nongaps(sig: CurveSignature) -> NonGapSequence {
    nongap_sequence(sig, 2 * sig.genus() + 2)
}

/// n_k = #{ℓ ≥ 0 : N(ℓ) ≤ g−k−1}.
pub fn n_k(sig: CurveSignature, k: usize) -> Result<usize> {
    let g = sig.genus();
    range_check("k", k, 0, g)?;
    let bound = g as i64 - k as i64 - 1;
    Ok(nongaps(sig).values.iter().take_while(|&&n| n as i64 <= bound).count())
}

/// N_k as Σ_{ℓ<n_k} (2g − N(ℓ) − N(k+ℓ) − 1).
#[allow(non_snake_case)]
pub fn N_k_sum(sig: CurveSignature, k: usize) -> Result<u64> {
    let nk = n_k(sig, k)?;
    let g = sig.genus() as u64;
    let n = nongaps(sig);
    Ok((0..nk).map(|l| 2 * g - n.get(l) - n.get(k + l) - 1).sum())
}

/// N_k as the weight of Λ^{[k]}.
#[allow(non_snake_case)]
pub fn N_k_tail(sig: CurveSignature, k: usize) -> Result<u64> {
    range_check("k", k, 0, sig.genus())?;
    Ok(truncate_lower(&young_diagram(sig), k)?.weight())
}

/// (M_k, M̄_k): the nonnegative values of g−N(ℓ)−k−1 and g−N(ℓ+k)+k−1, in
/// order of ℓ.
pub fn fay_sets(sig: CurveSignature, k: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    let g = sig.genus() as i64;
    range_check("k", k, 0, sig.genus().saturating_sub(1))?;
    let k = k as i64;
    let n = nongaps(sig);
    let plus = n
        .values
        .iter()
        .map(|&v| g - v as i64 - k - 1)
        .take_while(|&x| x >= 0)
        .map(|x| x as u64)
        .collect();
    let minus = n.values[k as usize..]
        .iter()
        .map(|&v| g - v as i64 + k - 1)
        .take_while(|&x| x >= 0)
        .map(|x| x as u64)
        .collect();
    Ok((plus, minus))
}

/// ♮_k: for each diagonal hook a_j+b_j+1 of Λ^{[k]} the row ℓ with
/// Λ_ℓ+g−ℓ equal to it, listed with decreasing ℓ. Empty for k = g.
pub fn natural_k(sig: CurveSignature, k: usize) -> Result<Vec<usize>> {
    let g = sig.genus();
    range_check("k", k, 0, g)?;
    let w = u_weights(sig);
    if w.windows(2).any(|p| p[0] <= p[1]) {
        return Err(Error::Internal("u-weights not strictly decreasing".into()));
    }
    let tail = truncate_lower(&young_diagram(sig), k)?;
    characteristics(&tail)
        .hooks()
        .into_iter()
        .map(|h| {
            w.iter()
                .position(|&x| x == h)
                .map(|p| p + 1)
                .ok_or_else(|| Error::Internal(format!("no row with hook weight {h} for k={k}")))
        })
        .collect()
}

/// ♮_k^{(i)} = (♮_k ∖ {k+1}) ∪ {i}, for 1 ≤ i ≤ k.
pub fn natural_k_i(sig: CurveSignature, k: usize, i: usize) -> Result<Vec<usize>> {
    range_check("i", i, 1, k)?;
    let mut v: Vec<usize> = natural_k(sig, k)?.into_iter().filter(|&l| l != k + 1).collect();
    v.push(i);
    v.sort_unstable_by(|a, b| b.cmp(a));
    Ok(v)
}

/// Closed form of ♮_k for y² = f(x) of genus g: k+1, k+3, ... up to g, listed
/// decreasing.
pub fn hyperelliptic_natural(g: usize, k: usize) -> Result<Vec<usize>> {
    range_check("k", k, 0, g)?;
    let mut v: Vec<usize> = (k + 1..g + 1).step_by(2).collect();
    v.reverse();
    Ok(v)
}

/// Boxes visited walking the rim from the end of the first row, stepping
/// down when possible and left otherwise; the j-th box (j = 0..g−1)
/// corresponds to k = g−1−j and equals (n_k, n_k + k).
pub fn rim_hook_reading(sig: CurveSignature) -> Vec<(usize, usize)> {
    let lam = young_diagram(sig);
    let g = sig.genus();
    let mut out = Vec::with_capacity(g);
    if g == 0 {
        return out;
    }
    let (mut n, mut m) = (1usize, lam.part(1) as usize);
    out.push((n, m));
    while out.len() < g {
        if lam.contains(n + 1, m) {
            n += 1;
        } else {
            m -= 1;
        }
        out.push((n, m));
    }
    out
}

/// Everything attached to the stratum index k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumProfile {
    pub k: usize,
    pub n_k: usize,
    #[serde(rename = "N_k")]
    pub big_n_k: u64,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub natural: Vec<usize>,
    pub m_plus: Vec<u64>,
    pub m_minus: Vec<u64>,
}

impl StratumProfile {
    pub fn characteristics(&self) -> FrobeniusCharacteristics {
        FrobeniusCharacteristics {
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

pub fn stratum_profile(sig: CurveSignature, k: usize) -> Result<StratumProfile> {
    let g = sig.genus();
    range_check("k", k, 0, g)?;
    let tail = truncate_lower(&young_diagram(sig), k)?;
    let chars = characteristics(&tail);
    let (m_plus, m_minus) = if k < g { fay_sets(sig, k)? } else { (vec![], vec![]) };
    Ok(StratumProfile {
        k,
        n_k: n_k(sig, k)?,
        big_n_k: N_k_sum(sig, k)?,
        a: chars.a,
        b: chars.b,
        natural: natural_k(sig, k)?,
        m_plus,
        m_minus,
    })
}

/// Profiles for k = 0..g−1.
pub fn all_profiles(sig: CurveSignature) -> Result<Vec<StratumProfile>> {
    (0..sig.genus()).map(|k| stratum_profile(sig, k)).collect()
}
