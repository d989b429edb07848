//! Python bindings: curve signatures, stratum data, Schur expansions,
//! certification, polynomials and μ_n numerics.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use strata_core::certify::{self, CertifyOptions, DerivativeCertificate};
use strata_core::numerics::{self, AffinePoint, CurveInstance};
use strata_core::partition;
use strata_core::poly::{Family, Rational, SparsePolynomial};
use strata_core::schur::{schur_in_T_with, DEFAULT_MAX_EXPAND_GENUS};
use strata_core::semigroup::{self, CurveSignature};
use strata_core::Error;

create_exception!(strata, CertificationError, PyException);
create_exception!(strata, NumericError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::Certification { message, witness } => {
            CertificationError::new_err(format!("{message}\n{}", witness.join("\n")))
        }
        Error::SpecialDivisor { .. } | Error::Numeric(_) => NumericError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.to_string(),))
}

fn rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    v.str()?.to_str()?.parse().map_err(|e| PyValueError::new_err(format!("{e}")))
}

fn certificate<'py>(py: Python<'py>, c: &DerivativeCertificate) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("k", c.k)?;
    d.set_item("index_multiset", c.index_multiset.clone())?;
    d.set_item("zero", c.is_zero())?;
    d.set_item("constant", c.constant().map(|q| fraction(py, q)).transpose()?)?;
    d.set_item("mode", if c.mode == certify::Mode::Expanded { "expanded" } else { "sampled" })?;
    d.set_item("trials", c.points.len())?;
    Ok(d)
}

#[pyclass(name = "Curve", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCurve {
    sig: CurveSignature,
}

#[pymethods]
impl PyCurve {
    #[new]
    fn new(r: u32, s: u32) -> PyResult<Self> {
        Ok(PyCurve {
            sig: CurveSignature::new(r, s).map_err(err)?,
        })
    }

    #[getter]
    fn r(&self) -> u32 {
        self.sig.r()
    }

    #[getter]
    fn s(&self) -> u32 {
        self.sig.s()
    }

    #[getter]
    fn genus(&self) -> usize {
        self.sig.genus()
    }

    #[getter]
    fn hyperelliptic(&self) -> bool {
        self.sig.is_hyperelliptic()
    }

    fn __repr__(&self) -> String {
        format!("Curve{}", self.sig)
    }

    #[pyo3(signature = (count=None))]
    fn nongaps(&self, count: Option<usize>) -> Vec<u64> {
        semigroup::nongap_sequence(self.sig, count.unwrap_or(self.sig.genus() + 1)).values
    }

    fn gaps(&self) -> Vec<u64> {
        semigroup::gaps(self.sig)
    }

    #[pyo3(signature = (count=None))]
    fn monomials(&self, count: Option<usize>) -> Vec<String> {
        semigroup::monomial_basis(self.sig, count.unwrap_or(self.sig.genus() + 1))
            .iter()
            .map(|m| m.to_string())
            .collect()
    }

    fn young_diagram(&self) -> Vec<u32> {
        semigroup::young_diagram(self.sig).parts().to_vec()
    }

    fn u_weights(&self) -> Vec<u64> {
        semigroup::u_weights(self.sig)
    }

    fn n_k(&self, k: usize) -> PyResult<usize> {
        partition::n_k(self.sig, k).map_err(err)
    }

    #[allow(non_snake_case)]
    fn N_k(&self, k: usize) -> PyResult<u64> {
        partition::N_k_tail(self.sig, k).map_err(err)
    }

    fn natural(&self, k: usize) -> PyResult<Vec<usize>> {
        partition::natural_k(self.sig, k).map_err(err)
    }

    fn profile<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyDict>> {
        let p = partition::stratum_profile(self.sig, k).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("k", p.k)?;
        d.set_item("n_k", p.n_k)?;
        d.set_item("N_k", p.big_n_k)?;
        d.set_item("a", p.a.clone())?;
        d.set_item("b", p.b.clone())?;
        d.set_item("hooks", p.characteristics().hooks())?;
        d.set_item("natural", p.natural)?;
        d.set_item("m_plus", p.m_plus)?;
        d.set_item("m_minus", p.m_minus)?;
        Ok(d)
    }

    fn hierarchy<'py>(&self, py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyDict>> {
        let h = certify::build_hierarchy(self.sig, k).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("sequence", h.sequence.clone())?;
        d.set_item("matrices", h.matrices.iter().map(|m| m.entries.clone()).collect::<Vec<_>>())?;
        d.set_item("h0_count", h.h0_count())?;
        Ok(d)
    }

    /// s_Λ (or s_{Λ^(k)}) in u-coordinates, or in T when a truncation
    /// involves other power sums.
    #[pyo3(signature = (k=None, max_expand_genus=DEFAULT_MAX_EXPAND_GENUS))]
    fn schur(&self, k: Option<usize>, max_expand_genus: usize) -> PyResult<PyPolynomial> {
        let lam = semigroup::young_diagram(self.sig);
        let d = match k {
            Some(k) => partition::truncate_upper(&lam, k).map_err(err)?,
            None => lam,
        };
        let form = schur_in_T_with(&d, self.sig, max_expand_genus).map_err(err)?;
        Ok(PyPolynomial {
            inner: form.as_u.unwrap_or(form.as_T),
        })
    }

    #[pyo3(signature = (k, trials=3, seed=0, inject_fault=false))]
    fn certify_natural<'py>(
        &self,
        py: Python<'py>,
        k: usize,
        trials: usize,
        seed: u64,
        inject_fault: bool,
    ) -> PyResult<Bound<'py, PyDict>> {
        let opts = CertifyOptions {
            trials,
            seed,
            inject_fault,
            ..Default::default()
        };
        let c = py.detach(|| certify::certify_natural(self.sig, k, &opts)).map_err(err)?;
        let d = certificate(py, &c.certificate)?;
        d.set_item("natural", c.natural.clone())?;
        d.set_item("sign", c.sign)?;
        d.set_item("factorial_prediction", fraction(py, &c.factorial_prediction)?)?;
        d.set_item("factorial_matches", c.factorial_matches)?;
        d.set_item("proper_subsets", c.proper_subsets.len())?;
        Ok(d)
    }

    #[pyo3(signature = (k, l, trials=3, seed=0))]
    fn certify_g_power<'py>(
        &self,
        py: Python<'py>,
        k: usize,
        l: usize,
        trials: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let opts = CertifyOptions {
            trials,
            seed,
            ..Default::default()
        };
        let c = py.detach(|| certify::certify_g_power(self.sig, k, l, &opts)).map_err(err)?;
        let d = certificate(py, &c.certificate)?;
        d.set_item("j_l", c.j_l.clone())?;
        d.set_item("power", c.power)?;
        d.set_item("lower_powers_zero", c.lower_powers.len())?;
        Ok(d)
    }

    #[pyo3(signature = (k, trials=3, seed=0))]
    fn sub_vanishing_sweep<'py>(&self, py: Python<'py>, k: usize, trials: usize, seed: u64) -> PyResult<Bound<'py, PyDict>> {
        let opts = CertifyOptions {
            trials,
            seed,
            ..Default::default()
        };
        let r = py.detach(|| certify::sub_vanishing_sweep(self.sig, k, &opts)).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("n_k", r.n_k)?;
        d.set_item("checked", r.checked)?;
        d.set_item("total", r.total)?;
        Ok(d)
    }
}

#[pyclass(name = "Polynomial", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: SparsePolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Parses e.g. "1/3*u2^3 - u1"; `family` is one of "t", "T", "u".
    #[new]
    #[pyo3(signature = (text, family="t"))]
    fn new(text: &str, family: &str) -> PyResult<Self> {
        let mut chars = family.chars();
        let f = match (chars.next(), chars.next()) {
            (Some(c), None) => Family::from_symbol(c),
            _ => None,
        }
        .ok_or_else(|| PyValueError::new_err(format!("unknown family {family:?}")))?;
        Ok(PyPolynomial {
            inner: SparsePolynomial::parse(text, f).map_err(err)?,
        })
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().symbol()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?}, family={:?})", self.inner.to_string(), self.family())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: self.inner.checked_add(&other.inner).map_err(err)?,
        })
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: self.inner.checked_sub(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPolynomial {
            inner: self.inner.checked_mul(&other.inner).map_err(err)?,
        })
    }

    /// None for the zero polynomial.
    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    /// ∂/∂(variable `var`), variables numbered from 1.
    fn partial(&self, var: usize) -> Self {
        PyPolynomial {
            inner: self.inner.partial_derivative(var),
        }
    }

    /// Exact value at variable values given as ints, Fractions or strings.
    fn evaluate<'py>(&self, py: Python<'py>, values: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        let v = values.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        fraction(py, &self.inner.evaluate_dense(&v).map_err(err)?)
    }
}

/// Coefficients μ_{n,0..n−1} of μ_n through `points` on y^r = f(x).
#[pyfunction]
fn mu_coeffs<'py>(
    py: Python<'py>,
    r: u32,
    s: u32,
    lambdas: Vec<Complex64>,
    points: Vec<(Complex64, Complex64)>,
) -> PyResult<Bound<'py, PyDict>> {
    let sig = CurveSignature::new(r, s).map_err(err)?;
    let curve = CurveInstance::new(sig, lambdas).map_err(err)?;
    let pts = points
        .iter()
        .map(|&(x, y)| AffinePoint::new(&curve, x, y))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let mu = numerics::mu_coeffs(&curve, &pts).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("coeffs", mu.coeffs.clone())?;
    d.set_item("fs_det", mu.fs_det)?;
    d.set_item("condition", mu.condition)?;
    d.set_item("pole_order", mu.pole_order)?;
    d.set_item("residuals", pts.iter().map(|p| mu.eval(&curve, p).norm()).collect::<Vec<_>>())?;
    Ok(d)
}

/// Points over `xs` on the given branch of y = f(x)^{1/r}.
#[pyfunction]
#[pyo3(signature = (r, s, lambdas, xs, branch=0))]
fn lift_points(r: u32, s: u32, lambdas: Vec<Complex64>, xs: Vec<Complex64>, branch: u32) -> PyResult<Vec<(Complex64, Complex64)>> {
    let sig = CurveSignature::new(r, s).map_err(err)?;
    let curve = CurveInstance::new(sig, lambdas).map_err(err)?;
    Ok(numerics::lift_points(&curve, &xs, branch)
        .map_err(err)?
        .into_iter()
        .map(|p| (p.x, p.y))
        .collect())
}

#[pymodule]
fn strata(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurve>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_function(wrap_pyfunction!(mu_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(lift_points, m)?)?;
    m.add("CertificationError", m.py().get_type::<CertificationError>())?;
    m.add("NumericError", m.py().get_type::<NumericError>())?;
    Ok(())
}
