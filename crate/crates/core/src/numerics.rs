//! Complex double-precision evaluation on y^r = f(x): Frobenius–Stickelberger
//! matrices, their determinants, and the coefficients of μ_n.

use crate::error::{Error, Result};
use crate::semigroup::{monomial_basis, nongap_sequence, CurveSignature, WeierstrassMonomial};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// On-curve residual bound, relative to max(1, |y|^r).
pub const ON_CURVE_TOL: f64 = 1e-10;
/// Relative tolerance for zero checks.
pub const ZERO_TOL: f64 = 1e-9;
/// |ψ_n| / (Hadamard bound) below this is treated as a special divisor.
pub const DEFAULT_SPECIAL_TOL: f64 = 1e-12;
/// Minimum separation between input points.
pub const MIN_SEPARATION: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveInstance {
    pub sig: CurveSignature,
    /// λ_0..λ_{s−1}; f(x) = x^s + λ_{s−1}x^{s−1} + … + λ_0.
    pub lambdas: Vec<Complex64>,
}

impl CurveInstance {
    pub fn new(sig: CurveSignature, lambdas: Vec<Complex64>) -> Result<Self> {
        if lambdas.len() != sig.s() as usize {
            return Err(Error::Precondition(format!(
                "expected {} coefficients λ_0..λ_{}, got {}",
                sig.s(),
                sig.s() - 1,
                lambdas.len()
            )));
        }
        if lambdas.iter().any(|l| !l.re.is_finite() || !l.im.is_finite()) {
            return Err(Error::Precondition("non-finite coefficient".into()));
        }
        Ok(CurveInstance { sig, lambdas })
    }

    /// w-degree of λ_i, (s−i)·r.
    pub fn lambda_degree(&self, i: usize) -> u64 {
        (self.sig.s() as u64 - i as u64) * self.sig.r() as u64
    }

    pub fn f(&self, x: Complex64) -> Complex64 {
        self.lambdas.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, l| acc * x + l)
    }

    pub fn residual(&self, x: Complex64, y: Complex64) -> f64 {
        (y.powu(self.sig.r()) - self.f(x)).norm()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffinePoint {
    pub x: Complex64,
    pub y: Complex64,
    pub residual: f64,
}

impl AffinePoint {
    /// Checks the point lies on the curve.
    pub fn new(curve: &CurveInstance, x: Complex64, y: Complex64) -> Result<Self> {
        let residual = curve.residual(x, y);
        let scale = y.norm().powi(curve.sig.r() as i32).max(1.0);
        if !(residual <= ON_CURVE_TOL * scale) {
            return Err(Error::Numeric(format!(
                "point ({x}, {y}) is off the curve: residual {residual:e}"
            )));
        }
        Ok(AffinePoint { x, y, residual })
    }

    pub fn monomial(&self, m: &WeierstrassMonomial) -> Complex64 {
        self.x.powu(m.a) * self.y.powu(m.b)
    }
}

/// y = ω^branch · (principal r-th root of f(x)), ω = e^{2πi/r}.
pub fn lift_points(curve: &CurveInstance, xs: &[Complex64], branch: u32) -> Result<Vec<AffinePoint>> {
    let r = curve.sig.r();
    if branch >= r {
        return Err(Error::OutOfRange {
            what: "branch",
            value: branch as i64,
            lo: 0,
            hi: r as i64 - 1,
        });
    }
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * branch as f64 / r as f64);
    xs.iter()
        .map(|&x| {
            let fx = curve.f(x);
            let scale = curve.lambdas.iter().map(|l| l.norm()).fold(1.0, f64::max) * x.norm().max(1.0).powi(curve.sig.s() as i32);
            if fx.norm() <= 1e-14 * scale {
                return Err(Error::Ramification(format!("{x}")));
            }
            AffinePoint::new(curve, x, omega * fx.powf(1.0 / r as f64))
        })
        .collect()
}

fn check_distinct(points: &[AffinePoint]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        for q in &points[..i] {
            if (p.x - q.x).norm() + (p.y - q.y).norm() < MIN_SEPARATION {
                return Err(Error::Precondition(format!(
                    "points ({}, {}) and ({}, {}) closer than {MIN_SEPARATION:e}",
                    q.x, q.y, p.x, p.y
                )));
            }
        }
    }
    Ok(())
}

/// Ψ_n[i][j] = φ_j(P_i). Repeated points are allowed here (the matrix is
/// then singular).
pub fn fs_matrix(curve: &CurveInstance, points: &[AffinePoint]) -> DMatrix<Complex64> {
    let n = points.len();
    let basis = monomial_basis(curve.sig, n);
    DMatrix::from_fn(n, n, |i, j| points[i].monomial(&basis[j]))
}

/// ψ_n = det Ψ_n; 1 for no points.
pub fn fs_det(curve: &CurveInstance, points: &[AffinePoint]) -> Complex64 {
    if points.is_empty() {
        return Complex64::new(1.0, 0.0);
    }
    fs_matrix(curve, points).lu().determinant()
}

fn hadamard_bound(m: &DMatrix<Complex64>) -> f64 {
    m.row_iter().map(|r| r.norm()).product()
}

fn condition_number(m: &DMatrix<Complex64>) -> f64 {
    let sv = m.clone().singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuCoefficients {
    pub n: usize,
    /// μ_{n,0..n−1} in μ_n(P) = φ_n(P) + Σ_k (−1)^{n−k} μ_{n,k} φ_k(P).
    pub coeffs: Vec<Complex64>,
    pub fs_det: Complex64,
    pub condition: f64,
    /// Pole order N(n) of μ_n.
    pub pole_order: u64,
    /// N(n) − n: zeros of μ_n beyond the input points.
    pub extra_zeros: u64,
}

impl MuCoefficients {
    pub fn eval(&self, curve: &CurveInstance, p: &AffinePoint) -> Complex64 {
        let basis = monomial_basis(curve.sig, self.n + 1);
        let n = self.n;
        self.coeffs.iter().enumerate().fold(p.monomial(&basis[n]), |acc, (k, c)| {
            let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
            acc + c * p.monomial(&basis[k]) * sign
        })
    }

    /// Σ|terms| of μ_n at p, the scale for relative zero checks.
    pub fn scale(&self, curve: &CurveInstance, p: &AffinePoint) -> f64 {
        let basis = monomial_basis(curve.sig, self.n + 1);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (c * p.monomial(&basis[k])).norm())
            .sum::<f64>()
            + p.monomial(&basis[self.n]).norm()
    }
}

pub fn mu_coeffs(curve: &CurveInstance, points: &[AffinePoint]) -> Result<MuCoefficients> {
    mu_coeffs_with(curve, points, DEFAULT_SPECIAL_TOL)
}

/// Solves Ψ_n c = −(φ_n(P_i))_i by partial-pivot LU.
pub fn mu_coeffs_with(curve: &CurveInstance, points: &[AffinePoint], special_tol: f64) -> Result<MuCoefficients> {
    check_distinct(points)?;
    let n = points.len();
    let pole_order = nongap_sequence(curve.sig, n + 1).get(n);
    if n == 0 {
        return Ok(MuCoefficients {
            n,
            coeffs: vec![],
            fs_det: Complex64::new(1.0, 0.0),
            condition: 1.0,
            pole_order,
            extra_zeros: pole_order,
        });
    }
    let m = fs_matrix(curve, points);
    let lu = m.clone().lu();
    let det = lu.determinant();
    let threshold = special_tol * hadamard_bound(&m);
    if !(det.norm() > threshold) {
        return Err(Error::SpecialDivisor {
            det_abs: det.norm(),
            threshold,
        });
    }
    let basis = monomial_basis(curve.sig, n + 1);
    let rhs = DMatrix::from_fn(n, 1, |i, _| -points[i].monomial(&basis[n]));
    let c = lu
        .solve(&rhs)
        .ok_or_else(|| Error::Numeric("singular Frobenius–Stickelberger matrix".into()))?;
    let coeffs = (0..n)
        .map(|k| if (n - k) % 2 == 0 { c[k] } else { -c[k] })
        .collect();
    Ok(MuCoefficients {
        n,
        coeffs,
        fs_det: det,
        condition: condition_number(&m),
        pole_order,
        extra_zeros: pole_order - n as u64,
    })
}
