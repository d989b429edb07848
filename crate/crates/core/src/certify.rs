//! Certification of derivative vanishing on strata at the Schur level:
//! differentiate S_Λ in the u-coordinates and restrict to
//! u_i = T^{(k)}_{Λ_i+g−i}(t_1..t_k).

use crate::error::{Error, Result};
use crate::partition::{n_k, natural_k, truncate_lower, truncate_upper, N_k_tail};
use crate::poly::{det_laplace_with, Family, MultiIndex, Rational, SparsePolynomial};
use crate::schur::{h_values_newton, jt_matrix, power_sum_value, schur_bialternant, schur_in_T, DEFAULT_MAX_EXPAND_GENUS};
use crate::semigroup::{u_weights, young_diagram, CurveSignature, YoungDiagram};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest genus the sampled (truncated-ring) route accepts; its
/// determinant memoises all 2^g row subsets.
pub const MAX_SAMPLED_GENUS: usize = 16;

/// Cap on the number of multisets a sampled sub-vanishing sweep visits.
pub const MAX_SAMPLED_MULTISETS: usize = 64;

// ---------------------------------------------------------------------------
// Hook hierarchy

/// Subscripts μ_i + j − i of h^{(g;k)} on a block of rows; `None` marks an
/// absent (negative-subscript) entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubscriptMatrix {
    /// 1-based index of the first row within the full matrix.
    pub first_row: usize,
    pub entries: Vec<Vec<Option<i64>>>,
}

impl SubscriptMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn count(&self, subscript: i64) -> usize {
        self.entries.iter().flatten().filter(|e| **e == Some(subscript)).count()
    }
}

impl fmt::Display for SubscriptMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let c: Vec<String> = r.iter().map(|e| e.map_or("·".to_string(), |x| x.to_string())).collect();
                format!("[{}]", c.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookHierarchy {
    pub k: usize,
    /// (i_ℓ, d_ℓ): runs of diagonal boxes of Λ^{[k]} with equal column
    /// length, i_ℓ = k + (column length) − (first diagonal index) + 1.
    pub sequence: Vec<(usize, usize)>,
    /// H_1 ⊇ H_2 ⊇ ... ⊇ H_{n_k}.
    pub matrices: Vec<SubscriptMatrix>,
}

impl HookHierarchy {
    /// Number of h_0 entries in H_1.
    pub fn h0_count(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.count(0))
    }
}

/// H_i takes rows i..μ'_i and columns 1..μ'_i−i+1 of the subscript matrix of
/// μ = Λ^{[k]}; its upper-right entry is the hook length at (i,i).
pub fn build_hierarchy(sig: CurveSignature, k: usize) -> Result<HookHierarchy> {
    let g = sig.genus();
    if k >= g {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: g as i64 - 1,
        });
    }
    let mu = truncate_lower(&young_diagram(sig), k)?;
    let conj = mu.conjugate();
    let rank = mu.rank();
    let sub = |i: usize, j: usize| {
        let v = mu.part(i) as i64 + j as i64 - i as i64;
        (v >= 0).then_some(v)
    };
    let matrices = (1..=rank)
        .map(|i| {
            let last = conj.part(i) as usize;
            let q = last - i + 1;
            SubscriptMatrix {
                first_row: i,
                entries: (i..=last).map(|r| (1..=q).map(|j| sub(r, j)).collect()).collect(),
            }
        })
        .collect();
    let mut sequence: Vec<(usize, usize)> = Vec::new();
    let mut p = 1;
    while p <= rank {
        let c = conj.part(p);
        let mut d = 1;
        while p + d <= rank && conj.part(p + d) == c {
            d += 1;
        }
        sequence.push((k + c as usize - p + 1, d));
        p += d;
    }
    Ok(HookHierarchy { k, sequence, matrices })
}

// ---------------------------------------------------------------------------
// Restrictions and certificates

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub max_expand_genus: usize,
    /// Adds 1 to S_Λ before differentiating, so that certification must fail.
    pub inject_fault: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            trials: 3,
            seed: 0,
            max_expand_genus: DEFAULT_MAX_EXPAND_GENUS,
            inject_fault: false,
        }
    }
}

/// t_j = j/(j+q) with q = 1 + seed + trial: distinct, nonzero, positive.
pub fn trial_points(k: usize, trials: usize, seed: u64) -> Vec<Vec<Rational>> {
    (0..trials)
        .map(|trial| {
            let q = 1 + seed as i64 + trial as i64;
            (1..=k as i64).map(|j| Rational::new(j, j + q)).collect()
        })
        .collect()
}

/// A point of the stratum: t_1..t_k and u_i = T^{(k)}_{Λ_i+g−i}.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumRestriction {
    pub k: usize,
    pub t_points: Vec<Rational>,
    pub u_values: Vec<Rational>,
}

impl StratumRestriction {
    pub fn new(sig: CurveSignature, t_points: Vec<Rational>) -> Result<Self> {
        for (i, a) in t_points.iter().enumerate() {
            if a.is_zero() {
                return Err(Error::Precondition("restriction point has a zero coordinate".into()));
            }
            if t_points[..i].contains(a) {
                return Err(Error::Precondition("restriction point has repeated coordinates".into()));
            }
        }
        let u_values = u_weights(sig).iter().map(|&w| power_sum_value(w as u32, &t_points)).collect();
        Ok(StratumRestriction {
            k: t_points.len(),
            t_points,
            u_values,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The restricted derivative was expanded as a polynomial in t_1..t_k.
    Expanded,
    /// Only evaluated at the trial points.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    /// `constant` is value / s_{Λ^{(k)}}(t) when that ratio is the same at
    /// every point (and, when expanded, the polynomials are proportional).
    NonZero { constant: Option<Rational> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeCertificate {
    pub k: usize,
    /// Sorted ascending.
    pub index_multiset: Vec<usize>,
    pub verdict: Verdict,
    pub mode: Mode,
    pub points: Vec<Vec<Rational>>,
    pub values: Vec<Rational>,
}

impl DerivativeCertificate {
    pub fn is_zero(&self) -> bool {
        self.verdict == Verdict::Zero
    }

    pub fn constant(&self) -> Option<&Rational> {
        match &self.verdict {
            Verdict::NonZero { constant } => constant.as_ref(),
            Verdict::Zero => None,
        }
    }

    pub fn record(&self) -> CertificateRecord {
        let (verdict, c) = match &self.verdict {
            Verdict::Zero => ("zero", None),
            Verdict::NonZero { constant } => ("nonzero", constant.as_ref()),
        };
        CertificateRecord {
            k: self.k,
            index_multiset: self.index_multiset.clone(),
            verdict: verdict.to_string(),
            constant_num: c.map(|c| JsonInt::from_bigint(c.numer())),
            constant_den: c.map(|c| JsonInt::from_bigint(c.denom())),
            mode: self.mode,
            trials: self.points.len(),
        }
    }

    fn witness(&self) -> Vec<String> {
        self.points
            .iter()
            .zip(&self.values)
            .map(|(p, v)| {
                let c: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("t=({}) value={v}", c.join(","))
            })
            .collect()
    }
}

/// An integer that stays a JSON number when it fits in i64.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_bigint(n: num_bigint::BigInt) -> Self {
        use num_traits::ToPrimitive;
        n.to_i64().map_or_else(|| JsonInt::Big(n.to_string()), JsonInt::Small)
    }
}

/// Serialized form of a [`DerivativeCertificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub k: usize,
    pub index_multiset: Vec<usize>,
    pub verdict: String,
    pub constant_num: Option<JsonInt>,
    pub constant_den: Option<JsonInt>,
    pub mode: Mode,
    pub trials: usize,
}

// ---------------------------------------------------------------------------
// Evaluation machinery

struct Expanded {
    as_u: SparsePolynomial,
    /// u_i ↦ T^{(k)}_{w_i} as a polynomial in t_1..t_k.
    u_sub: BTreeMap<usize, SparsePolynomial>,
    s_k: SparsePolynomial,
}

/// Everything fixed for one (signature, k): the diagram, the trial points
/// and, below the expansion limit, the symbolic S_Λ in u.
pub struct StratumContext {
    sig: CurveSignature,
    k: usize,
    lam: YoungDiagram,
    w: Vec<u64>,
    mode: Mode,
    expanded: Option<Expanded>,
    points: Vec<Vec<Rational>>,
    s_k_values: Vec<Rational>,
    inject_fault: bool,
}

impl StratumContext {
    pub fn new(sig: CurveSignature, k: usize, opts: &CertifyOptions) -> Result<Self> {
        let g = sig.genus();
        if k > g {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                lo: 0,
                hi: g as i64,
            });
        }
        if opts.trials == 0 {
            return Err(Error::Precondition("at least one trial is required".into()));
        }
        let lam = young_diagram(sig);
        let w = u_weights(sig);
        let lam_k = truncate_upper(&lam, k)?;
        let points = trial_points(k, opts.trials, opts.seed);
        let s_k_values = points
            .iter()
            .map(|t| crate::schur::schur_bialternant_at(&lam_k, t))
            .collect::<Result<Vec<_>>>()?;
        let (mode, expanded) = if g <= opts.max_expand_genus {
            let form = schur_in_T(&lam, sig)?;
            let as_u = form.as_u.ok_or_else(|| Error::SupportViolation(format!("{sig}")))?;
            let u_sub = w
                .iter()
                .enumerate()
                .map(|(i, &wi)| {
                    let c = Rational::new(1, wi as i64);
                    let p = SparsePolynomial::from_terms(
                        Family::Roots,
                        (1..=k).map(|j| (MultiIndex::var(j, wi as u32), c.clone())),
                    );
                    (i + 1, p)
                })
                .collect();
            let s_k = schur_bialternant(&lam_k, k)?;
            (Mode::Expanded, Some(Expanded { as_u, u_sub, s_k }))
        } else {
            if g > MAX_SAMPLED_GENUS {
                return Err(Error::Precondition(format!(
                    "genus {g} exceeds the sampled-route limit {MAX_SAMPLED_GENUS}"
                )));
            }
            (Mode::Sampled, None)
        };
        Ok(StratumContext {
            sig,
            k,
            lam,
            w,
            mode,
            expanded,
            points,
            s_k_values,
            inject_fault: opts.inject_fault,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    fn check_index(&self, index: &[usize]) -> Result<Vec<usize>> {
        let g = self.sig.genus();
        if let Some(&bad) = index.iter().find(|&&i| i == 0 || i > g) {
            return Err(Error::OutOfRange {
                what: "derivative index",
                value: bad as i64,
                lo: 1,
                hi: g as i64,
            });
        }
        let mut v = index.to_vec();
        v.sort_unstable();
        Ok(v)
    }

    /// Exact value of the derivative at one point via the truncated ring.
    pub fn sampled_value(&self, index: &[usize], t: &[Rational]) -> Result<Rational> {
        let index = self.check_index(index)?;
        let v = derivative_value_truncated(&self.lam, &self.w, &index, t)?;
        Ok(if self.inject_fault && index.is_empty() { &v + &Rational::one() } else { v })
    }

    /// Certificate for one index multiset.
    pub fn certify(&self, index: &[usize]) -> Result<DerivativeCertificate> {
        let index = self.check_index(index)?;
        let (values, verdict) = match &self.expanded {
            Some(ex) => {
                let mut s = ex.as_u.clone();
                if self.inject_fault {
                    s = &s + &SparsePolynomial::one(Family::Abelian);
                }
                let d = s.derivative_multi(&index);
                let restricted = d.substitute(&ex.u_sub, Family::Roots)?;
                let values = self
                    .points
                    .iter()
                    .map(|t| {
                        let u: Vec<Rational> = self.w.iter().map(|&w| power_sum_value(w as u32, t)).collect();
                        d.evaluate_dense(&u)
                    })
                    .collect::<Result<Vec<_>>>()?;
                for (t, v) in self.points.iter().zip(&values) {
                    if &restricted.evaluate_dense(t)? != v {
                        return Err(Error::Internal("restricted polynomial disagrees with evaluation".into()));
                    }
                }
                let verdict = if restricted.is_zero() {
                    Verdict::Zero
                } else {
                    let (_, lc) = restricted.leading_term().unwrap();
                    let (_, ls) = ex.s_k.leading_term().unwrap();
                    let c = lc / ls;
                    let constant = (ex.s_k.scale(&c) == restricted).then_some(c);
                    Verdict::NonZero { constant }
                };
                (values, verdict)
            }
            None => {
                let values = self
                    .points
                    .iter()
                    .map(|t| self.sampled_value(&index, t))
                    .collect::<Result<Vec<_>>>()?;
                let verdict = if values.iter().all(|v| v.is_zero()) {
                    Verdict::Zero
                } else {
                    let ratios: Vec<Rational> = values.iter().zip(&self.s_k_values).map(|(v, s)| v / s).collect();
                    let constant = ratios.windows(2).all(|p| p[0] == p[1]).then(|| ratios[0].clone());
                    Verdict::NonZero { constant }
                };
                (values, verdict)
            }
        };
        Ok(DerivativeCertificate {
            k: self.k,
            index_multiset: index,
            verdict,
            mode: self.mode,
            points: self.points.clone(),
            values,
        })
    }
}

/// (∏_{i∈I} ∂/∂u_i) S_Λ at u_i = T^{(k)}_{w_i}(t), computed exactly without
/// expanding S_Λ: each T_{w_i} with i ∈ I is shifted by a nilpotent ε_i, the
/// Jacobi–Trudi determinant is taken in Q[ε]/(ε_i^{m_i+1}), and the
/// coefficient of ∏ε_i^{m_i} times ∏m_i! is the derivative.
fn derivative_value_truncated(lam: &YoungDiagram, w: &[u64], index: &[usize], t: &[Rational]) -> Result<Rational> {
    let g = lam.len();
    if g == 0 {
        return Ok(if index.is_empty() { Rational::one() } else { Rational::zero() });
    }
    let mut distinct: Vec<(usize, u32)> = Vec::new();
    for &i in index {
        match distinct.last_mut() {
            Some((j, m)) if *j == i => *m += 1,
            _ => distinct.push((i, 1)),
        }
    }
    let caps: Vec<u32> = distinct.iter().map(|&(_, m)| m).collect();
    let f = Family::Abelian;
    let maxn = lam.part(1) as usize + g;
    let tj: Vec<SparsePolynomial> = (1..=maxn)
        .map(|j| {
            let mut p = SparsePolynomial::constant(f, power_sum_value(j as u32, t));
            for (e, &(i, _)) in distinct.iter().enumerate() {
                if w[i - 1] as usize == j {
                    p = &p + &SparsePolynomial::var(f, e + 1);
                }
            }
            p
        })
        .collect();
    let tmul = |a: &SparsePolynomial, b: &SparsePolynomial| a.mul_truncated(b, &caps).expect("same family");
    let h = h_values_newton(
        maxn,
        SparsePolynomial::one(f),
        SparsePolynomial::zero(f),
        |j| tj[j - 1].scale(&Rational::from_int(j as i64)),
        |a, b| a + b,
        tmul,
        |a, n| a.scale(&Rational::new(1, n as i64)),
    );
    let m = jt_matrix(lam, g, |n, _| {
        if n < 0 {
            SparsePolynomial::zero(f)
        } else {
            h[n as usize].clone()
        }
    });
    let d = det_laplace_with(&m, &SparsePolynomial::one(f), tmul)?;
    let mut c = d.coefficient(&MultiIndex::from_exponents(&caps));
    for &m in &caps {
        c = &c * &Rational::factorial(m);
    }
    Ok(c)
}

/// (∏_{i∈I} ∂/∂u_i) S_Λ at the stratum point `restriction`.
pub fn derivative_on_stratum(
    sig: CurveSignature,
    k: usize,
    index: &[usize],
    restriction: &StratumRestriction,
) -> Result<Rational> {
    if restriction.k != k {
        return Err(Error::Precondition(format!(
            "restriction has {} coordinates, stratum k = {k}",
            restriction.k
        )));
    }
    let g = sig.genus();
    if g > MAX_SAMPLED_GENUS {
        return Err(Error::Precondition(format!("genus {g} exceeds {MAX_SAMPLED_GENUS}")));
    }
    if let Some(&bad) = index.iter().find(|&&i| i == 0 || i > g) {
        return Err(Error::OutOfRange {
            what: "derivative index",
            value: bad as i64,
            lo: 1,
            hi: g as i64,
        });
    }
    let mut idx = index.to_vec();
    idx.sort_unstable();
    derivative_value_truncated(&young_diagram(sig), &u_weights(sig), &idx, &restriction.t_points)
}

// ---------------------------------------------------------------------------
// Theorem-level checks

fn check_k(sig: CurveSignature, k: usize) -> Result<()> {
    let g = sig.genus();
    if k == 0 || k >= g {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 1,
            hi: g as i64 - 1,
        });
    }
    Ok(())
}

fn failure(message: String, cert: &DerivativeCertificate) -> Error {
    Error::Certification {
        message,
        witness: cert.witness(),
    }
}

/// Result of certifying ♮_k.
#[derive(Clone, Debug, PartialEq)]
pub struct NaturalCertificate {
    pub k: usize,
    pub natural: Vec<usize>,
    /// One per proper subset of ♮_k; all zero.
    pub proper_subsets: Vec<DerivativeCertificate>,
    pub certificate: DerivativeCertificate,
    /// value / s_{Λ^{(k)}}(t), the same at every trial.
    pub constant: Rational,
    pub sign: i32,
    /// ∏_{i∈♮_k} (Λ_i+g−i)!.
    pub factorial_prediction: Rational,
    /// Whether |constant| equals the factorial prediction.
    pub factorial_matches: bool,
}

fn subsets(v: &[usize]) -> Vec<Vec<usize>> {
    (0..(1u64 << v.len()) - 1)
        .map(|mask| v.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect())
        .collect()
}

fn certify_set(ctx: &StratumContext, index: &[usize], what: &str) -> Result<(DerivativeCertificate, Rational)> {
    let cert = ctx.certify(index)?;
    match cert.constant() {
        Some(c) if !c.is_zero() => {
            let c = c.clone();
            Ok((cert, c))
        }
        _ if cert.is_zero() => Err(failure(format!("{what} {index:?}: derivative vanishes"), &cert)),
        _ => Err(failure(
            format!("{what} {index:?}: derivative is not a constant multiple of s_Λ(k)"),
            &cert,
        )),
    }
}

/// Proper subsets of ♮_k give zero and ♮_k itself gives a constant nonzero
/// multiple of s_{Λ^{(k)}}; the sign and magnitude of that constant are
/// measured and compared with ±∏(Λ_i+g−i)!.
pub fn certify_natural(sig: CurveSignature, k: usize, opts: &CertifyOptions) -> Result<NaturalCertificate> {
    check_k(sig, k)?;
    let ctx = StratumContext::new(sig, k, opts)?;
    certify_natural_in(&ctx, natural_k(sig, k)?)
}

/// As [`certify_natural`] with an arbitrary index set in place of ♮_k (for
/// instance ♮_k^{(i)}).
pub fn certify_index_set(
    sig: CurveSignature,
    k: usize,
    index: Vec<usize>,
    opts: &CertifyOptions,
) -> Result<NaturalCertificate> {
    check_k(sig, k)?;
    let ctx = StratumContext::new(sig, k, opts)?;
    certify_natural_in(&ctx, index)
}

fn certify_natural_in(ctx: &StratumContext, natural: Vec<usize>) -> Result<NaturalCertificate> {
    let mut proper = Vec::new();
    for j in subsets(&natural) {
        let c = ctx.certify(&j)?;
        if !c.is_zero() {
            return Err(failure(format!("proper subset {j:?} of {natural:?} does not vanish"), &c));
        }
        proper.push(c);
    }
    let (certificate, constant) = certify_set(ctx, &natural, "index set")?;
    let prediction = natural
        .iter()
        .fold(Rational::one(), |acc, &i| &acc * &Rational::factorial(ctx.w[i - 1] as u32));
    Ok(NaturalCertificate {
        k: ctx.k,
        natural,
        proper_subsets: proper,
        sign: if constant.is_negative() { -1 } else { 1 },
        factorial_matches: constant.abs() == prediction,
        factorial_prediction: prediction,
        constant,
        certificate,
    })
}

/// Result of one (∂/∂u_g)-augmented derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct GPowerCertificate {
    pub k: usize,
    pub l: usize,
    /// J_ℓ: ♮_k without its first ℓ−1 entries.
    pub j_l: Vec<usize>,
    /// deg(♮_k ∖ J_ℓ) = Σ (Λ_i+g−i) over the removed entries.
    pub power: u64,
    pub certificate: DerivativeCertificate,
    pub constant: Rational,
    /// For ℓ = n_k+1 only: the pure powers 0..N_k−1, all zero.
    pub lower_powers: Vec<DerivativeCertificate>,
}

/// (∂/∂u_g)^{deg(♮_k∖J_ℓ)} ∏_{i∈J_ℓ} ∂/∂u_i S_Λ on the stratum is a nonzero
/// constant multiple of s_{Λ^{(k)}}; for ℓ = n_k+1 (pure power N_k) all
/// lower pure powers must vanish.
pub fn certify_g_power(sig: CurveSignature, k: usize, l: usize, opts: &CertifyOptions) -> Result<GPowerCertificate> {
    check_k(sig, k)?;
    let ctx = StratumContext::new(sig, k, opts)?;
    certify_g_power_in(&ctx, l)
}

fn certify_g_power_in(ctx: &StratumContext, l: usize) -> Result<GPowerCertificate> {
    let (sig, k) = (ctx.sig, ctx.k);
    let g = sig.genus();
    let natural = natural_k(sig, k)?;
    let nk = natural.len();
    if l == 0 || l > nk + 1 {
        return Err(Error::OutOfRange {
            what: "l",
            value: l as i64,
            lo: 1,
            hi: nk as i64 + 1,
        });
    }
    let j_l = natural[l - 1..].to_vec();
    let power: u64 = natural[..l - 1].iter().map(|&i| ctx.w[i - 1]).sum();
    let mut index = j_l.clone();
    index.extend(std::iter::repeat_n(g, power as usize));
    let (certificate, constant) = certify_set(ctx, &index, "g-power index")?;
    let mut lower_powers = Vec::new();
    if l == nk + 1 {
        debug_assert_eq!(power, N_k_tail(sig, k)?);
        for p in 0..power as usize {
            let c = ctx.certify(&vec![g; p])?;
            if !c.is_zero() {
                return Err(failure(format!("(∂/∂u_g)^{p} does not vanish below N_k = {power}"), &c));
            }
            lower_powers.push(c);
        }
    }
    Ok(GPowerCertificate {
        k,
        l,
        j_l,
        power,
        certificate,
        constant,
        lower_powers,
    })
}

/// All g-power certificates ℓ = 1..=n_k+1 for one stratum.
pub fn certify_g_powers(sig: CurveSignature, k: usize, opts: &CertifyOptions) -> Result<Vec<GPowerCertificate>> {
    check_k(sig, k)?;
    let ctx = StratumContext::new(sig, k, opts)?;
    let nk = n_k(sig, k)?;
    (1..=nk + 1).map(|l| certify_g_power_in(&ctx, l)).collect()
}

/// Multisets over {1..=g} of size `size`, in lexicographic order.
pub fn multisets(g: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, g: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=g {
            cur.push(i);
            rec(i, g, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, g, size, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub k: usize,
    pub n_k: usize,
    pub mode: Mode,
    /// Multisets examined (all of them in expanded mode).
    pub checked: usize,
    /// Multisets with #I < n_k in total.
    pub total: usize,
    pub violations: Vec<Vec<usize>>,
}

/// Every derivative of order below n_k vanishes on the stratum. Expanded
/// mode checks all multisets; sampled mode an evenly spaced subset.
pub fn sub_vanishing_sweep(sig: CurveSignature, k: usize, opts: &CertifyOptions) -> Result<SweepReport> {
    check_k(sig, k)?;
    let ctx = StratumContext::new(sig, k, opts)?;
    let g = sig.genus();
    let nk = n_k(sig, k)?;
    let all: Vec<Vec<usize>> = (0..nk).flat_map(|m| multisets(g, m)).collect();
    let total = all.len();
    let chosen: Vec<Vec<usize>> = match ctx.mode {
        Mode::Expanded => all,
        Mode::Sampled => {
            let step = total.div_ceil(MAX_SAMPLED_MULTISETS).max(1);
            all.into_iter().step_by(step).collect()
        }
    };
    let mut violations = Vec::new();
    let mut first_bad = None;
    for i in &chosen {
        let c = ctx.certify(i)?;
        if !c.is_zero() {
            violations.push(i.clone());
            first_bad.get_or_insert(c);
        }
    }
    if let Some(c) = first_bad {
        return Err(failure(
            format!("{} derivative(s) of order < n_k = {nk} do not vanish, e.g. {:?}", violations.len(), violations[0]),
            &c,
        ));
    }
    Ok(SweepReport {
        k,
        n_k: nk,
        mode: ctx.mode,
        checked: chosen.len(),
        total,
        violations,
    })
}

/// Upper-right corners of H_1..H_{n_k}: the diagonal hook lengths of Λ^{[k]}.
pub fn hierarchy_corners(sig: CurveSignature, k: usize) -> Result<Vec<i64>> {
    let h = build_hierarchy(sig, k)?;
    let corners = h
        .matrices
        .iter()
        .map(|m| m.entries[0].last().copied().flatten().unwrap_or(-1))
        .collect();
    Ok(corners)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: u32, s: u32) -> CurveSignature {
        CurveSignature::new(r, s).unwrap()
    }

    fn row(v: &[i64]) -> Vec<Option<i64>> {
        v.iter().map(|&x| (x >= 0).then_some(x)).collect()
    }

    #[test]
    fn hierarchy_57() {
        let h = build_hierarchy(sig(5, 7), 4).unwrap();
        assert_eq!(h.matrices.len(), 3);
        assert_eq!(h.matrices[0].size(), 8);
        assert_eq!(h.matrices[0].entries[0], row(&[4, 5, 6, 7, 8, 9, 10, 11]));
        assert_eq!(h.matrices[1].entries, vec![row(&[2, 3, 4]), row(&[1, 2, 3]), row(&[-1, 0, 1])]);
        assert_eq!(h.matrices[2].entries, vec![row(&[1])]);
        assert_eq!(h.sequence, vec![(12, 1), (7, 1), (5, 1)]);
        assert_eq!(h.h0_count(), 12 - 4 - 3);
        assert_eq!(h.matrices[1].to_string(), "[[2,3,4],[1,2,3],[·,0,1]]");
    }

    #[test]
    fn restriction_points() {
        let s = sig(2, 5);
        let r = StratumRestriction::new(s, vec![Rational::new(1, 2)]).unwrap();
        assert_eq!(r.u_values, vec![Rational::new(1, 24), Rational::new(1, 2)]);
        assert!(StratumRestriction::new(s, vec![Rational::zero()]).is_err());
        let p = trial_points(3, 2, 0);
        assert_eq!(p[0], vec![Rational::new(1, 2), Rational::new(2, 3), Rational::new(3, 4)]);
    }

    #[test]
    fn derivative_examples_25() {
        let s = sig(2, 5);
        let t = Rational::new(2, 3);
        let r = StratumRestriction::new(s, vec![t.clone()]).unwrap();
        assert_eq!(derivative_on_stratum(s, 1, &[2], &r).unwrap(), &t * &t);
        assert!(derivative_on_stratum(s, 1, &[], &r).unwrap().is_zero());
        let full = StratumRestriction::new(s, vec![Rational::new(1, 2), Rational::new(1, 3)]).unwrap();
        assert!(!derivative_on_stratum(s, 2, &[], &full).unwrap().is_zero());
        assert!(derivative_on_stratum(s, 1, &[3], &r).is_err());
    }

    #[test]
    fn sampled_and_expanded_agree() {
        for (r, s_) in [(2, 7), (3, 4), (3, 5)] {
            let s = sig(r, s_);
            for k in 1..s.genus() {
                let ex = StratumContext::new(s, k, &CertifyOptions::default()).unwrap();
                assert_eq!(ex.mode(), Mode::Expanded);
                for size in 0..=3 {
                    for idx in multisets(s.genus(), size) {
                        let c = ex.certify(&idx).unwrap();
                        for (t, v) in c.points.iter().zip(&c.values) {
                            assert_eq!(&ex.sampled_value(&idx, t).unwrap(), v, "{s} k={k} {idx:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn certify_small_cases() {
        let opts = CertifyOptions::default();
        let c = certify_natural(sig(2, 9), 1, &opts).unwrap();
        assert_eq!(c.natural, vec![4, 2]);
        assert_eq!(c.proper_subsets.len(), 3);
        assert!(certify_natural(sig(3, 4), 1, &opts).is_ok());
        let rep = sub_vanishing_sweep(sig(2, 7), 1, &opts).unwrap();
        assert_eq!((rep.n_k, rep.checked), (1, 1));
        let rep = sub_vanishing_sweep(sig(2, 9), 1, &opts).unwrap();
        assert_eq!(rep.n_k, 2);
        assert_eq!(rep.checked, 5);
        assert!(certify_natural(sig(2, 5), 2, &opts).is_err());
    }

    #[test]
    fn fault_injection_fails() {
        let opts = CertifyOptions {
            inject_fault: true,
            ..CertifyOptions::default()
        };
        assert!(matches!(
            sub_vanishing_sweep(sig(2, 5), 1, &opts),
            Err(Error::Certification { .. })
        ));
        assert!(matches!(certify_natural(sig(2, 7), 1, &opts), Err(Error::Certification { .. })));
    }

    #[test]
    fn json_record_roundtrip() {
        let c = certify_natural(sig(2, 7), 1, &CertifyOptions::default()).unwrap();
        let rec = c.certificate.record();
        let s = serde_json::to_string(&rec).unwrap();
        assert!(s.contains("\"mode\":\"expanded\""));
        let back: CertificateRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rec);
    }
}
