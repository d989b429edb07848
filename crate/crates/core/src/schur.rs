//! Schur polynomials: the bialternant and three Jacobi–Trudi variants, the
//! change to scaled power sums T_k = (1/k) Σ t_j^k, and the u-coordinates.
#![allow(non_snake_case)]

use crate::error::{Error, Result};
use crate::poly::{det, det_poly, Family, MultiIndex, Rational, SparsePolynomial};
use crate::semigroup::{u_weights, CurveSignature, YoungDiagram};
use std::collections::BTreeMap;

/// Symbolic expansion above this genus is refused by default.
pub const DEFAULT_MAX_EXPAND_GENUS: usize = 6;

/// The variable range t_{ℓ1}..t_{ℓ2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricWindow {
    pub l1: usize,
    pub l2: usize,
}

impl SymmetricWindow {
    pub fn new(l1: usize, l2: usize) -> Result<Self> {
        if l1 == 0 || l1 > l2 {
            return Err(Error::Precondition(format!("window ⟨{l1},{l2}⟩ needs 1 ≤ ℓ1 ≤ ℓ2")));
        }
        Ok(SymmetricWindow { l1, l2 })
    }

    pub fn full(g: usize) -> Self {
        SymmetricWindow { l1: 1, l2: g }
    }
}

fn compositions(n: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(n);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in (0..=n).rev() {
        prefix.push(e);
        compositions(n - e, parts - 1, prefix, out);
        prefix.pop();
    }
}

// h_n in t_{l1..l2}; an empty range (l1 > l2) gives h_0 = 1 and 0 otherwise.
fn h_range(n: i64, l1: usize, l2: usize) -> SparsePolynomial {
    let f = Family::Roots;
    if n < 0 {
        return SparsePolynomial::zero(f);
    }
    if n == 0 {
        return SparsePolynomial::one(f);
    }
    if l1 > l2 {
        return SparsePolynomial::zero(f);
    }
    let mut exps = Vec::new();
    compositions(n as u32, l2 - l1 + 1, &mut Vec::new(), &mut exps);
    SparsePolynomial::from_terms(
        f,
        exps.into_iter().map(|e| {
            let mut v = vec![0; l1 - 1];
            v.extend(e);
            (MultiIndex::from_exponents(&v), Rational::one())
        }),
    )
}

/// Complete homogeneous h_n(t_{ℓ1},...,t_{ℓ2}); h_0 = 1, h_{n<0} = 0.
pub fn h_complete(n: i64, window: SymmetricWindow, g: usize) -> Result<SparsePolynomial> {
    if window.l2 > g {
        return Err(Error::Precondition(format!("window end {} exceeds g = {g}", window.l2)));
    }
    Ok(h_range(n, window.l1, window.l2))
}

/// T_k^{⟨ℓ1,ℓ2⟩} = (1/k) Σ t_j^k as a t-polynomial.
pub fn power_sum_T(k: u32, window: SymmetricWindow) -> SparsePolynomial {
    assert!(k >= 1);
    let c = Rational::new(1, k as i64);
    SparsePolynomial::from_terms(
        Family::Roots,
        (window.l1..=window.l2).map(|j| (MultiIndex::var(j, k), c.clone())),
    )
}

/// T_k at a point, with `t[j]` the value of t_{j+1}.
pub fn power_sum_value(k: u32, t: &[Rational]) -> Rational {
    let s = t.iter().fold(Rational::zero(), |acc, x| &acc + &x.pow(k));
    &s / &Rational::from_int(k as i64)
}

/// h_n in T_1..T_n: the n×n determinant with `j·T_j` below and on the
/// diagonal and −1, −2, ..., 1−n just above it, divided by n!.
#[allow(non_snake_case)]
pub fn h_from_T(n: usize) -> SparsePolynomial {
    let f = Family::PowerSums;
    if n == 0 {
        return SparsePolynomial::one(f);
    }
    let m: Vec<Vec<SparsePolynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if j <= i {
                        let d = i - j + 1;
                        SparsePolynomial::var(f, d).scale(&Rational::from_int(d as i64))
                    } else if j == i + 1 {
                        SparsePolynomial::constant(f, Rational::from_int(-(i as i64)))
                    } else {
                        SparsePolynomial::zero(f)
                    }
                })
                .collect()
        })
        .collect();
    let d = det_poly(&m, f).expect("square");
    d.scale(&Rational::factorial(n as u32).recip())
}

/// Newton's recursion n·h_n = Σ_{j=1}^{n} j·T_j·h_{n−j}, evaluated over any
/// commutative setting supplied through closures. Returns h_0..=h_max.
pub fn h_values_newton<R: Clone>(
    max: usize,
    one: R,
    zero: R,
    t_scaled: impl Fn(usize) -> R,
    add: impl Fn(&R, &R) -> R,
    mul: impl Fn(&R, &R) -> R,
    div_int: impl Fn(&R, usize) -> R,
) -> Vec<R> {
    let mut h = vec![one];
    let jt: Vec<R> = (1..=max).map(&t_scaled).collect();
    for n in 1..=max {
        let mut acc = zero.clone();
        for j in 1..=n {
            acc = add(&acc, &mul(&jt[j - 1], &h[n - j]));
        }
        h.push(div_int(&acc, n));
    }
    h
}

/// h_0..=h_max evaluated at rational T values (`tv[k-1]` = T_k).
#[allow(non_snake_case)]
pub fn h_values_from_T(max: usize, tv: &[Rational]) -> Vec<Rational> {
    h_values_newton(
        max,
        Rational::one(),
        Rational::zero(),
        |j| &tv.get(j - 1).cloned().unwrap_or_default() * &Rational::from_int(j as i64),
        |a, b| a + b,
        |a, b| a * b,
        |a, n| a / &Rational::from_int(n as i64),
    )
}

pub(crate) fn jt_matrix<E: Clone>(diagram: &YoungDiagram, size: usize, h: impl Fn(i64, usize) -> E) -> Vec<Vec<E>> {
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| h(diagram.part(i) as i64 + j as i64 - i as i64, j))
                .collect()
        })
        .collect()
}

fn check_len(diagram: &YoungDiagram, g: usize) -> Result<()> {
    if diagram.len() > g {
        Err(Error::Precondition(format!("diagram {diagram} has more than g = {g} rows")))
    } else {
        Ok(())
    }
}

/// |t_j^{Λ_i+g−i}| / ∏_{i<j}(t_i − t_j), by exact division.
pub fn schur_bialternant(diagram: &YoungDiagram, g: usize) -> Result<SparsePolynomial> {
    check_len(diagram, g)?;
    let f = Family::Roots;
    let m: Vec<Vec<SparsePolynomial>> = (1..=g)
        .map(|i| {
            let e = diagram.part(i) + (g - i) as u32;
            (1..=g)
                .map(|j| SparsePolynomial::monomial(f, MultiIndex::var(j, e), Rational::one()))
                .collect()
        })
        .collect();
    let mut p = det_poly(&m, f)?;
    for i in 1..=g {
        for j in i + 1..=g {
            let lin = &SparsePolynomial::var(f, i) - &SparsePolynomial::var(f, j);
            p = p
                .div_exact(&lin)
                .map_err(|_| Error::Internal(format!("alternant not divisible by t{i} - t{j}")))?;
        }
    }
    Ok(p)
}

/// |h_{Λ_i+j−i}(t_1..t_g)|.
pub fn schur_jacobi_trudi(diagram: &YoungDiagram, g: usize) -> Result<SparsePolynomial> {
    check_len(diagram, g)?;
    let m = jt_matrix(diagram, g, |n, _| h_range(n, 1, g));
    det_poly(&m, Family::Roots)
}

/// |h^{⟨j,g⟩}_{Λ_i+j−i}|: column j only sees t_j..t_g.
pub fn schur_tail_trudi(diagram: &YoungDiagram, g: usize) -> Result<SparsePolynomial> {
    check_len(diagram, g)?;
    let m = jt_matrix(diagram, g, |n, j| h_range(n, j, g));
    det_poly(&m, Family::Roots)
}

/// Columns 1..k in all of t_1..t_g, columns k+1..g in t_{k+1}..t_g only.
pub fn schur_split_trudi(diagram: &YoungDiagram, g: usize, k: usize) -> Result<SparsePolynomial> {
    check_len(diagram, g)?;
    if k > g {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: g as i64,
        });
    }
    let m = jt_matrix(diagram, g, |n, j| if j <= k { h_range(n, 1, g) } else { h_range(n, k + 1, g) });
    det_poly(&m, Family::Roots)
}

/// h^{⟨l1,l2⟩}_0..=max at a point (`t[j]` = t_{j+1}).
pub fn h_values_window(max: usize, l1: usize, l2: usize, t: &[Rational]) -> Vec<Rational> {
    // h over a growing variable set: h_n ← h_n + x·h_{n−1} (in increasing n).
    let mut h = vec![Rational::zero(); max + 1];
    h[0] = Rational::one();
    if l1 <= l2 {
        for x in &t[l1 - 1..l2] {
            for n in 1..=max {
                let add = x * &h[n - 1];
                h[n] += &add;
            }
        }
    }
    h
}

fn pick(h: &[Rational], n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        h[n as usize].clone()
    }
}

fn check_point(diagram: &YoungDiagram, t: &[Rational]) -> Result<usize> {
    check_len(diagram, t.len())?;
    Ok(t.len())
}

/// The bialternant at a point with pairwise distinct coordinates.
pub fn schur_bialternant_at(diagram: &YoungDiagram, t: &[Rational]) -> Result<Rational> {
    let g = check_point(diagram, t)?;
    let num: Vec<Vec<Rational>> = (1..=g)
        .map(|i| t.iter().map(|x| x.pow(diagram.part(i) + (g - i) as u32)).collect())
        .collect();
    let mut vdm = Rational::one();
    for i in 0..g {
        for j in i + 1..g {
            vdm = &vdm * &(&t[i] - &t[j]);
        }
    }
    if vdm.is_zero() {
        return Err(Error::Precondition("evaluation point has repeated coordinates".into()));
    }
    Ok(&det(&num, &Rational::one())? / &vdm)
}

pub fn schur_jacobi_trudi_at(diagram: &YoungDiagram, t: &[Rational]) -> Result<Rational> {
    let g = check_point(diagram, t)?;
    let max = (diagram.part(1) as usize + g).max(1);
    let h = h_values_window(max, 1, g, t);
    det(&jt_matrix(diagram, g, |n, _| pick(&h, n)), &Rational::one())
}

pub fn schur_tail_trudi_at(diagram: &YoungDiagram, t: &[Rational]) -> Result<Rational> {
    let g = check_point(diagram, t)?;
    let max = (diagram.part(1) as usize + g).max(1);
    let hs: Vec<Vec<Rational>> = (1..=g).map(|j| h_values_window(max, j, g, t)).collect();
    det(&jt_matrix(diagram, g, |n, j| pick(&hs[j - 1], n)), &Rational::one())
}

pub fn schur_split_trudi_at(diagram: &YoungDiagram, t: &[Rational], k: usize) -> Result<Rational> {
    let g = check_point(diagram, t)?;
    let max = (diagram.part(1) as usize + g).max(1);
    let full = h_values_window(max, 1, g, t);
    let tail = h_values_window(max, k + 1, g, t);
    det(
        &jt_matrix(diagram, g, |n, j| if j <= k { pick(&full, n) } else { pick(&tail, n) }),
        &Rational::one(),
    )
}

/// S_Λ at rational T values (`tv[k-1]` = T_k), via Jacobi–Trudi.
#[allow(non_snake_case)]
pub fn schur_T_value(diagram: &YoungDiagram, tv: &[Rational]) -> Result<Rational> {
    let l = diagram.len();
    if l == 0 {
        return Ok(Rational::one());
    }
    let h = h_values_from_T(diagram.part(1) as usize + l, tv);
    det(&jt_matrix(diagram, l, |n, _| pick(&h, n)), &Rational::one())
}

/// The three-part h-recursion identities, checked as exact polynomial
/// equalities. Part 2 uses `m`, part 3 the full window.
pub fn h_recursion_check(n: i64, m: usize, l1: usize, l2: usize) -> Result<[bool; 3]> {
    if l1 == 0 || l2 <= l1 {
        return Err(Error::Precondition(format!("need 1 ≤ ℓ1 < ℓ2, got ⟨{l1},{l2}⟩")));
    }
    if m >= l2 - l1 {
        return Err(Error::Precondition(format!("need m < ℓ2 − ℓ1, got m = {m}")));
    }
    let h = |n: i64, a: usize, b: usize| h_range(n, a, b);
    let t = |i: usize| SparsePolynomial::var(Family::Roots, i);
    let lhs = h(n, l1, l2);

    let p1a = &h(n, l1 + 1, l2) + &(&h(n - 1, l1, l2) * &t(l1));
    let p1b = &h(n, l1, l2 - 1) + &(&h(n - 1, l1, l2) * &t(l2));
    let part1 = lhs == p1a && lhs == p1b;

    let mut p2 = SparsePolynomial::zero(Family::Roots);
    for j in 0..=m {
        p2 = &p2 + &(&h(n - j as i64, l1 + m - j, l2) * &h(j as i64, l1, l1 + m - j));
    }
    let part2 = lhs == p2;

    let span = l2 - l1;
    let mut p3 = SparsePolynomial::zero(Family::Roots);
    for j in 0..=span {
        p3 = &p3 + &(&h(n - j as i64, l2 - j, l2) * &h(j as i64, l1, l2 - j));
    }
    let part3 = lhs == p3;
    Ok([part1, part2, part3])
}

/// A Schur polynomial in the three coordinate systems.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurForm {
    pub diagram: YoungDiagram,
    /// s_Λ(t_1..t_g), only when g is within the expansion limit.
    pub as_t: Option<SparsePolynomial>,
    #[allow(non_snake_case)]
    pub as_T: SparsePolynomial,
    /// `as_T` with T_{Λ_i+g−i} renamed u_i; `None` when `as_T` involves other
    /// T-variables (which happens for truncated diagrams).
    pub as_u: Option<SparsePolynomial>,
}

impl SchurForm {
    /// The T-variables that occur.
    #[allow(non_snake_case)]
    pub fn T_support(&self) -> Vec<usize> {
        self.as_T.variables().into_iter().collect()
    }
}

/// S_Λ(T) via Jacobi–Trudi with h_n expressed in T.
#[allow(non_snake_case)]
pub fn schur_T_polynomial(diagram: &YoungDiagram) -> SparsePolynomial {
    let l = diagram.len();
    let f = Family::PowerSums;
    if l == 0 {
        return SparsePolynomial::one(f);
    }
    let max = diagram.part(1) as usize + l;
    let hs: Vec<SparsePolynomial> = (0..=max).map(h_from_T).collect();
    let m = jt_matrix(diagram, l, |n, _| {
        if n < 0 {
            SparsePolynomial::zero(f)
        } else {
            hs[n as usize].clone()
        }
    });
    det_poly(&m, f).expect("square")
}

/// Whether `diagram` is the curve's Λ or one of its truncations Λ^{(k)},
/// Λ^{[k]}.
fn is_curve_diagram(diagram: &YoungDiagram, lam: &YoungDiagram) -> bool {
    let (p, q) = (diagram.parts(), lam.parts());
    q.starts_with(p) || q.ends_with(p)
}

/// Rewrites s_Λ in T- and u-coordinates. For the full diagram of `sig` the
/// support property (only T_{Λ_i+g−i} occur) is enforced.
#[allow(non_snake_case)]
pub fn schur_in_T(diagram: &YoungDiagram, sig: CurveSignature) -> Result<SchurForm> {
    schur_in_T_with(diagram, sig, DEFAULT_MAX_EXPAND_GENUS)
}

#[allow(non_snake_case)]
pub fn schur_in_T_with(diagram: &YoungDiagram, sig: CurveSignature, max_expand_genus: usize) -> Result<SchurForm> {
    let lam = crate::semigroup::young_diagram(sig);
    if !is_curve_diagram(diagram, &lam) {
        return Err(Error::Precondition(format!(
            "{diagram} is neither the diagram of {sig} nor a truncation of it"
        )));
    }
    let g = sig.genus();
    let as_T = schur_T_polynomial(diagram);
    let w = u_weights(sig);
    let index: BTreeMap<usize, usize> = w.iter().enumerate().map(|(i, &x)| (x as usize, i + 1)).collect();
    let supported = as_T.variables().iter().all(|v| index.contains_key(v));
    if !supported && diagram == &lam {
        return Err(Error::SupportViolation(format!(
            "S_Λ for {sig} involves T-variables outside the u-weights {w:?}"
        )));
    }
    let as_u = if supported {
        Some(as_T.rename(Family::Abelian, |v| index.get(&v).copied())?)
    } else {
        None
    };
    let as_t = if g <= max_expand_genus {
        Some(schur_bialternant(diagram, g)?)
    } else {
        None
    };
    Ok(SchurForm {
        diagram: diagram.clone(),
        as_t,
        as_T,
        as_u,
    })
}

/// M_T: entries ∂u_i/∂t_j = t_j^{Λ_i+g−i−1}, rows i = 1..g. For k = g all
/// columns j = 1..g; for k < g the block of columns j = k+1..g.
pub fn transition_matrix(sig: CurveSignature, k: usize) -> Result<Vec<Vec<SparsePolynomial>>> {
    let g = sig.genus();
    if k > g {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: g as i64,
        });
    }
    let cols: Vec<usize> = if k == g { (1..=g).collect() } else { (k + 1..=g).collect() };
    Ok(u_weights(sig)
        .into_iter()
        .map(|w| {
            cols.iter()
                .map(|&j| SparsePolynomial::monomial(Family::Roots, MultiIndex::var(j, (w - 1) as u32), Rational::one()))
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::young_diagram;

    fn sig(r: u32, s: u32) -> CurveSignature {
        CurveSignature::new(r, s).unwrap()
    }

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn tp(s: &str) -> SparsePolynomial {
        SparsePolynomial::parse(s, Family::Roots).unwrap()
    }

    fn tpoly(s: &str) -> SparsePolynomial {
        SparsePolynomial::parse(s, Family::PowerSums).unwrap()
    }

    #[test]
    fn complete_homogeneous() {
        let w = SymmetricWindow::new(1, 2).unwrap();
        assert_eq!(h_complete(2, w, 2).unwrap(), tp("t1^2 + t1*t2 + t2^2"));
        assert!(h_complete(0, w, 2).unwrap() == SparsePolynomial::one(Family::Roots));
        assert!(h_complete(-3, w, 2).unwrap().is_zero());
        assert_eq!(h_complete(1, SymmetricWindow::full(4), 4).unwrap(), tp("t1 + t2 + t3 + t4"));
        assert!(h_complete(1, SymmetricWindow::full(4), 3).is_err());
        assert!(SymmetricWindow::new(3, 2).is_err());
    }

    // Σ over partitions of n of ∏ T_k^{m_k}/m_k!.
    fn h_closed_form(n: usize) -> SparsePolynomial {
        fn rec(rem: usize, max: usize, acc: &mut Vec<(usize, u32)>, out: &mut Vec<(MultiIndex, Rational)>) {
            if rem == 0 {
                let mut c = Rational::one();
                for &(_, m) in acc.iter() {
                    c = &c / &Rational::factorial(m);
                }
                out.push((MultiIndex::from_pairs(acc), c));
                return;
            }
            for k in (1..=max.min(rem)).rev() {
                for m in 1..=(rem / k) as u32 {
                    acc.push((k, m));
                    rec(rem - k * m as usize, k - 1, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        SparsePolynomial::from_terms(Family::PowerSums, out)
    }

    #[test]
    fn h_in_power_sums() {
        assert_eq!(h_from_T(1), tpoly("T1"));
        assert_eq!(h_from_T(2), tpoly("1/2*T1^2 + T2"));
        assert_eq!(h_from_T(3), tpoly("1/6*T1^3 + T1*T2 + T3"));
        for n in 0..=9 {
            assert_eq!(h_from_T(n), h_closed_form(n), "n = {n}");
        }
        // substituting T_k = (1/k)Σt^k gives back h_n(t)
        let g = 3;
        let sub: BTreeMap<usize, SparsePolynomial> =
            (1..=5).map(|k| (k, power_sum_T(k as u32, SymmetricWindow::full(g)))).collect();
        for n in 0..=5 {
            let via_t = h_from_T(n).substitute(&sub, Family::Roots).unwrap();
            assert_eq!(via_t, h_range(n as i64, 1, g));
        }
    }

    #[test]
    fn newton_matches_determinant() {
        let tv: Vec<Rational> = (1..=8).map(|k| Rational::new(k, 2 * k + 3)).collect();
        let hv = h_values_from_T(8, &tv);
        for n in 0..=8 {
            assert_eq!(h_from_T(n).evaluate_dense(&tv).unwrap(), hv[n]);
        }
    }

    #[test]
    fn small_schur_routes() {
        let l = yd(&[2, 1]);
        let expect = tp("t1^2*t2 + t1*t2^2");
        assert_eq!(schur_bialternant(&l, 2).unwrap(), expect);
        assert_eq!(schur_jacobi_trudi(&l, 2).unwrap(), expect);
        assert_eq!(schur_tail_trudi(&l, 2).unwrap(), expect);
        assert_eq!(schur_bialternant(&yd(&[1]), 1).unwrap(), tp("t1"));
        assert_eq!(schur_bialternant(&YoungDiagram::empty(), 2).unwrap(), tp("1"));
        assert_eq!(schur_tail_trudi(&yd(&[5]), 1).unwrap(), tp("t1^5"));
        assert_eq!(schur_jacobi_trudi(&yd(&[3]), 3).unwrap(), h_range(3, 1, 3));
        let l = young_diagram(sig(3, 4));
        let b = schur_bialternant(&l, 3).unwrap();
        assert_eq!(schur_jacobi_trudi(&l, 3).unwrap(), b);
        assert_eq!(schur_tail_trudi(&l, 3).unwrap(), b);
        for k in 0..=3 {
            assert_eq!(schur_split_trudi(&l, 3, k).unwrap(), b);
        }
        assert!(schur_bialternant(&yd(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn evaluation_routes_agree() {
        let l = young_diagram(sig(3, 5));
        let t: Vec<Rational> = (1..=4).map(|j| Rational::new(j, j + 2)).collect();
        let p = schur_bialternant(&l, 4).unwrap().evaluate_dense(&t).unwrap();
        assert_eq!(schur_bialternant_at(&l, &t).unwrap(), p);
        assert_eq!(schur_jacobi_trudi_at(&l, &t).unwrap(), p);
        assert_eq!(schur_tail_trudi_at(&l, &t).unwrap(), p);
        for k in 0..=4 {
            assert_eq!(schur_split_trudi_at(&l, &t, k).unwrap(), p);
        }
        let tv: Vec<Rational> = (1..=l.part(1) + 4).map(|k| power_sum_value(k, &t)).collect();
        assert_eq!(schur_T_value(&l, &tv).unwrap(), p);
    }

    #[test]
    fn h_recursion_examples() {
        assert_eq!(h_recursion_check(2, 1, 1, 3).unwrap()[0], true);
        assert_eq!(h_recursion_check(0, 0, 1, 3).unwrap()[0], true);
        assert_eq!(h_recursion_check(2, 0, 1, 2).unwrap()[2], true);
        for l1 in 1..=2 {
            for l2 in l1 + 1..=5 {
                for n in 0..=4 {
                    for m in 0..l2 - l1 {
                        assert_eq!(h_recursion_check(n, m, l1, l2).unwrap(), [true; 3]);
                    }
                }
            }
        }
        assert!(h_recursion_check(2, 2, 1, 3).is_err());
        assert!(h_recursion_check(2, 0, 2, 2).is_err());
    }

    #[test]
    fn schur_u_forms() {
        let f = schur_in_T(&young_diagram(sig(2, 5)), sig(2, 5)).unwrap();
        assert_eq!(f.as_u.unwrap().to_string(), "1/3*u2^3 - u1");
        assert_eq!(f.as_T, tpoly("1/3*T1^3 - T3"));
        let f = schur_in_T(&young_diagram(sig(2, 3)), sig(2, 3)).unwrap();
        assert_eq!(f.as_u.unwrap().to_string(), "u1");
        let f = schur_in_T(&young_diagram(sig(2, 7)), sig(2, 7)).unwrap();
        assert_eq!(f.T_support(), vec![1, 3, 5]);
        // a truncation that is not supported on the u-weights
        let trunc = yd(&[2]);
        let f = schur_in_T(&trunc, sig(2, 5)).unwrap();
        assert!(f.as_u.is_none());
        assert_eq!(f.as_T, tpoly("1/2*T1^2 + T2"));
        assert!(schur_in_T(&yd(&[3, 3]), sig(2, 5)).is_err());
    }

    #[test]
    fn transition_matrices() {
        let m = transition_matrix(sig(3, 7), 6).unwrap();
        assert_eq!(m.len(), 6);
        let ex: Vec<u32> = m.iter().map(|row| row[0].terms()[0].0.exponent(1)).collect();
        assert_eq!(ex, [10, 7, 4, 3, 1, 0]);
        let m = transition_matrix(sig(2, 3), 1).unwrap();
        assert_eq!(m, vec![vec![SparsePolynomial::one(Family::Roots)]]);
        let m = transition_matrix(sig(5, 7), 4).unwrap();
        assert_eq!((m.len(), m[0].len()), (12, 8));
        assert_eq!(m[0][0].terms()[0].0, MultiIndex::var(5, 22));
        // entries are ∂u_i/∂t_j
        let s = sig(3, 5);
        let w = u_weights(s);
        let m = transition_matrix(s, 4).unwrap();
        for (i, row) in m.iter().enumerate() {
            let u = power_sum_T(w[i] as u32, SymmetricWindow::full(4));
            for (j, e) in row.iter().enumerate() {
                assert_eq!(&u.partial_derivative(j + 1), e);
            }
        }
    }
}
