//! Python bindings: hit/spike-kernel sweeps, the generating-function catalog,
//! the `P_n` modules and the verification suites.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use a1hit_core::a1::{self, A1Module};
use a1hit_core::hit::{self, SWEEP_LIMITS};
use a1hit_core::poly::{apply_sq, Monomial, PolyElement};
use a1hit_core::series::{self, RationalSeries};
use a1hit_core::verify::{self, Window};

fn py_err(e: a1hit_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Dimensions of `P`, `I(k)`, `D(k)` and `U(k)` in one bidegree.
#[pyclass(name = "BidegreeCell", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCell {
    pub n: usize,
    pub d: usize,
    pub k: u32,
    pub dim_p: usize,
    pub dim_i: usize,
    pub dim_d: usize,
    pub dim_u: usize,
    pub degenerate: bool,
    pub reps: Vec<String>,
}

#[pymethods]
impl PyCell {
    fn __repr__(&self) -> String {
        format!(
            "BidegreeCell(k={}, n={}, d={}, dimP={}, dimI={}, dimD={}, dimU={})",
            self.k, self.n, self.d, self.dim_p, self.dim_i, self.dim_d, self.dim_u
        )
    }
}

impl From<hit::BidegreeCell> for PyCell {
    fn from(c: hit::BidegreeCell) -> Self {
        PyCell {
            n: c.n,
            d: c.d,
            k: c.k,
            dim_p: c.dim_p,
            dim_i: c.dim_i,
            dim_d: c.dim_d,
            dim_u: c.dim_u,
            degenerate: c.degenerate,
            reps: c.representatives.iter().flatten().map(ToString::to_string).collect(),
        }
    }
}

/// Sweep the window `n_min..=n_max`, `d_min..=d_max`.
#[pyfunction]
#[pyo3(signature = (k, n_max, d_max, reps = false, n_min = 1, d_min = 1))]
fn sweep(py: Python<'_>, k: u32, n_max: usize, d_max: usize, reps: bool, n_min: usize, d_min: usize) -> PyResult<Vec<PyCell>> {
    let table = py
        .detach(|| hit::sweep(k, n_min..=n_max, d_min..=d_max, reps, SWEEP_LIMITS))
        .map_err(py_err)?;
    Ok(table.cells.into_iter().map(PyCell::from).collect())
}

#[pyfunction]
#[pyo3(signature = (k, n, d, reps = true))]
fn u_cell(k: u32, n: usize, d: usize, reps: bool) -> PyResult<PyCell> {
    hit::u_cell(k, n, d, reps).map(PyCell::from).map_err(py_err)
}

/// `dim I(k)^{n,d}`.
#[pyfunction]
fn hit_dim(k: u32, n: usize, d: usize) -> PyResult<usize> {
    hit::hit_space(k, n, d).map(|s| s.dim()).map_err(py_err)
}

/// `dim D(k)^{n,d}`.
#[pyfunction]
fn spike_kernel_dim(k: u32, n: usize, d: usize) -> PyResult<usize> {
    hit::spike_kernel_space(k, n, d).map(|s| s.dim()).map_err(py_err)
}

/// `dim P^{n,d} / I(k)^{n,d}`.
#[pyfunction]
fn unhit_dim(k: u32, n: usize, d: usize) -> PyResult<usize> {
    hit::unhit_dim(k, n, d).map_err(py_err)
}

/// `Sq^k` of a monomial given by its exponents, as a list of exponent lists.
#[pyfunction]
fn sq(k: usize, exponents: Vec<u32>) -> Vec<Vec<u32>> {
    apply_sq(k, &PolyElement::monomial(Monomial::new(exponents)))
        .support()
        .map(|m| m.exponents().to_vec())
        .collect()
}

/// A rational generating function with exact arithmetic.
#[pyclass(name = "Series", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PySeries(RationalSeries);

#[pymethods]
impl PySeries {
    /// Look up a catalog entry.
    #[staticmethod]
    #[pyo3(signature = (name, n = None))]
    fn named(name: &str, n: Option<usize>) -> PyResult<Self> {
        series::named_series(name, n).map(PySeries).map_err(py_err)
    }

    #[staticmethod]
    fn catalog() -> Vec<&'static str> {
        series::CATALOG.to_vec()
    }

    /// Coefficient of `s^n t^d`.
    fn coeff(&self, n: u32, d: i32) -> PyResult<i64> {
        self.0.coeff(n, d).map_err(py_err)
    }

    /// Nonzero coefficients on the box `n <= s_max`, `d <= t_max`, keyed by `(n, d)`.
    fn coefficients(&self, s_max: u32, t_max: i32) -> PyResult<BTreeMap<(u32, i32), i64>> {
        let table = self.0.expand(s_max, t_max).map_err(py_err)?;
        Ok(table.entries(s_max).into_iter().filter(|&(_, _, c)| c != 0).map(|(n, d, c)| ((n, d), c)).collect())
    }

    fn __add__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.0.add(&other.0).map(PySeries).map_err(py_err)
    }

    fn __sub__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.0.sub(&other.0).map(PySeries).map_err(py_err)
    }

    fn __mul__(&self, other: &PySeries) -> PyResult<PySeries> {
        self.0.mul(&other.0).map(PySeries).map_err(py_err)
    }

    fn __eq__(&self, other: &PySeries) -> PyResult<bool> {
        series::series_equal(&self.0, &other.0).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }
}

/// A finite A(1)-module given by a basis and `Sq^1`, `Sq^2` arrows.
#[pyclass(name = "A1Module", frozen)]
pub struct PyA1Module {
    inner: A1Module,
    dump: Option<String>,
}

#[pymethods]
impl PyA1Module {
    fn labels(&self) -> Vec<(String, i32)> {
        self.inner.basis().iter().map(|b| (b.label.clone(), b.degree)).collect()
    }

    fn valid_window(&self) -> (i32, i32) {
        self.inner.valid_window()
    }

    /// Graded dimensions, keyed by degree.
    fn hilbert(&self) -> BTreeMap<i32, usize> {
        self.inner.hilbert().nonzero().into_iter().collect()
    }

    /// Nonzero graded dimensions of `U(1)` on the valid window.
    fn u1(&self) -> PyResult<BTreeMap<i32, usize>> {
        Ok(self.inner.u1().map_err(py_err)?.nonzero().into_iter().collect())
    }

    /// Nonzero graded dimensions of the Margolis homology `H(Q_i)`.
    fn margolis(&self, i: u8) -> PyResult<BTreeMap<i32, usize>> {
        Ok(self.inner.margolis(i).map_err(py_err)?.nonzero().into_iter().collect())
    }

    /// Violated relations as `(relation, degree)` pairs.
    fn validate(&self) -> Vec<(String, i32)> {
        self.inner.validate().violations.into_iter().map(|v| (v.relation, v.degree)).collect()
    }

    /// JSON presentation, for modules built by `build_pn`.
    fn to_json(&self) -> Option<String> {
        self.dump.clone()
    }
}

#[pyfunction]
#[pyo3(signature = (n, top = 40))]
fn build_pn(n: usize, top: i32) -> PyResult<PyA1Module> {
    let inner = a1::build_pn(n, top).map_err(py_err)?;
    let dump = a1::pn_dump(n, top).map_err(py_err)?;
    Ok(PyA1Module { inner, dump: Some(serde_json::to_string(&dump).expect("dump serializes")) })
}

#[pyfunction]
fn regular_module() -> PyA1Module {
    PyA1Module { inner: a1::regular_module(), dump: None }
}

/// Result of a verification suite.
#[pyclass(name = "Report", frozen, get_all)]
pub struct PyReport {
    pub suite: String,
    pub passed: bool,
    pub text: String,
    pub json: String,
}

#[pyfunction]
#[pyo3(signature = (suite, n_max = None, d_max = None))]
fn run_suite(py: Python<'_>, suite: &str, n_max: Option<usize>, d_max: Option<usize>) -> PyResult<PyReport> {
    let report = py
        .detach(|| verify::run_suite(suite, Window { n_max, d_max }, SWEEP_LIMITS))
        .map_err(py_err)?;
    Ok(PyReport { suite: report.suite.clone(), passed: report.passed, text: report.to_string(), json: report.to_json() })
}

#[pyfunction]
fn suites() -> Vec<&'static str> {
    verify::SUITES.to_vec()
}

#[pymodule]
pub fn a1hit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCell>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyA1Module>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(u_cell, m)?)?;
    m.add_function(wrap_pyfunction!(hit_dim, m)?)?;
    m.add_function(wrap_pyfunction!(spike_kernel_dim, m)?)?;
    m.add_function(wrap_pyfunction!(unhit_dim, m)?)?;
    m.add_function(wrap_pyfunction!(sq, m)?)?;
    m.add_function(wrap_pyfunction!(build_pn, m)?)?;
    m.add_function(wrap_pyfunction!(regular_module, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    Ok(())
}
