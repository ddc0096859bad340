//! Python bindings: rings and their elements for interactive arithmetic, and
//! documents whose commands return the same reports as the `spbw` binary
//! (decoded into dicts).

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyTypeError, PyValueError};
use pyo3::prelude::*;

use skewpbw::{catalog, commands, dsl, Report, Side};

create_exception!(pyskewpbw, SkewPbwError, PyException);

fn err(e: skewpbw::Error) -> PyErr {
    SkewPbwError::new_err(e.to_string())
}

fn side(s: &str) -> PyResult<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => Err(PyValueError::new_err(format!("side must be 'left' or 'right', not {:?}", s))),
    }
}

fn report(py: Python<'_>, rep: skewpbw::Result<Report>) -> PyResult<Py<PyAny>> {
    let rep = rep.map_err(err)?;
    Ok(py.import("json")?.call_method1("loads", (rep.to_json(),))?.unbind())
}

/// A skew PBW extension with its multiplication.
#[pyclass(frozen, name = "Ring", module = "pyskewpbw")]
struct PyRing {
    inner: Arc<skewpbw::Ring>,
}

#[pymethods]
impl PyRing {
    /// A built-in preset by name; see `catalog_names()`.
    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        let pres = catalog::preset(name).map_err(err)?;
        Ok(PyRing {
            inner: Arc::new(skewpbw::Ring::new(pres)),
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    /// Number of generators.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// True when the coefficients commute with the generators.
    #[getter]
    fn central(&self) -> bool {
        self.inner.central()
    }

    fn one(&self) -> PyPoly {
        self.wrap(self.inner.one())
    }

    /// The i-th generator, counting from 1.
    fn var(&self, i: usize) -> PyResult<PyPoly> {
        if i == 0 || i > self.inner.n() {
            return Err(PyValueError::new_err(format!("generator index {} out of 1..={}", i, self.inner.n())));
        }
        Ok(self.wrap(self.inner.var(i - 1)))
    }

    /// Parses an expression such as `"x2*x1 - q*x3 + 1"` into normal form.
    fn parse(&self, expr: &str) -> PyResult<PyPoly> {
        Ok(self.wrap(dsl::parse_poly(&self.inner, expr).map_err(err)?))
    }

    /// The presentation in the text format accepted by `Document`.
    fn to_text(&self) -> String {
        dsl::print_ring(self.inner.presentation())
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?}, n={})", self.inner.name(), self.inner.n())
    }
}

impl PyRing {
    fn wrap(&self, p: skewpbw::Poly) -> PyPoly {
        PyPoly {
            ring: self.inner.clone(),
            inner: p,
        }
    }
}

/// An element of a ring, kept in standard (PBW) normal form.
#[pyclass(frozen, name = "Poly", module = "pyskewpbw")]
struct PyPoly {
    ring: Arc<skewpbw::Ring>,
    inner: skewpbw::Poly,
}

impl PyPoly {
    fn same_ring(&self, o: &PyPoly) -> PyResult<()> {
        if Arc::ptr_eq(&self.ring, &o.ring) || self.ring.presentation() == o.ring.presentation() {
            Ok(())
        } else {
            Err(PyTypeError::new_err("operands belong to different rings"))
        }
    }

    fn with(&self, p: skewpbw::Poly) -> PyPoly {
        PyPoly {
            ring: self.ring.clone(),
            inner: p,
        }
    }

    // Integers on either side of an operator are promoted to constants.
    fn coerce(&self, o: &Bound<'_, PyAny>) -> PyResult<skewpbw::Poly> {
        if let Ok(p) = o.cast::<PyPoly>() {
            let p = p.get();
            self.same_ring(p)?;
            return Ok(p.inner.clone());
        }
        if let Ok(k) = o.extract::<i64>() {
            return Ok(self.ring.one().scale(&skewpbw::Scalar::from_int(k)));
        }
        Err(PyTypeError::new_err("expected Poly or int"))
    }
}

#[pymethods]
impl PyPoly {
    fn __add__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(self.with(self.inner.add(&self.coerce(o)?)))
    }

    fn __radd__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        self.__add__(o)
    }

    fn __sub__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(self.with(self.inner.sub(&self.coerce(o)?)))
    }

    fn __rsub__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(self.with(self.coerce(o)?.sub(&self.inner)))
    }

    fn __mul__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(self.with(self.ring.mul(&self.inner, &self.coerce(o)?)))
    }

    fn __rmul__(&self, o: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
        Ok(self.with(self.ring.mul(&self.coerce(o)?, &self.inner)))
    }

    fn __pow__(&self, e: u32, _modulo: Option<&Bound<'_, PyAny>>) -> PyPoly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = self.ring.mul(&acc, &self.inner);
        }
        self.with(acc)
    }

    fn __neg__(&self) -> PyPoly {
        self.with(self.inner.neg())
    }

    fn __eq__(&self, o: &Bound<'_, PyAny>) -> bool {
        self.coerce(o).map(|p| p == self.inner).unwrap_or(false)
    }

    fn __bool__(&self) -> bool {
        !self.inner.is_zero()
    }

    /// Total degree, or None for zero.
    #[getter]
    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __str__(&self) -> String {
        self.ring.fmt(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.ring.fmt(&self.inner))
    }
}

/// A parsed `.spbw` document: rings, matrices and complexes. Every command
/// returns the report as a dict with keys command, ring, checks and values.
#[pyclass(frozen, name = "Document", module = "pyskewpbw")]
struct PyDocument {
    inner: dsl::Document,
}

#[pymethods]
impl PyDocument {
    #[new]
    fn new(src: &str) -> PyResult<Self> {
        Ok(PyDocument {
            inner: dsl::Document::parse(src).map_err(err)?,
        })
    }

    /// From a file path or `@name` for a preset.
    #[staticmethod]
    fn load(input: &str) -> PyResult<Self> {
        Ok(PyDocument {
            inner: commands::load(input).map_err(err)?,
        })
    }

    fn rings(&self) -> Vec<PyRing> {
        self.inner.rings().iter().map(|r| PyRing { inner: r.clone() }).collect()
    }

    fn ring(&self, name: &str) -> Option<PyRing> {
        self.inner.ring(name).map(|r| PyRing { inner: r.clone() })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn validate(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        report(py, commands::validate(&self.inner))
    }

    #[pyo3(signature = (expr, ring=None))]
    fn normalize(&self, py: Python<'_>, expr: &str, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, commands::normalize(&self.inner, ring, expr))
    }

    #[pyo3(signature = (factors, ring=None))]
    fn mul(&self, py: Python<'_>, factors: Vec<String>, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, commands::mul(&self.inner, ring, &factors))
    }

    #[pyo3(signature = (n=2, ring=None))]
    fn hilbert(&self, py: Python<'_>, n: u32, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, commands::hilbert(&self.inner, ring, n))
    }

    #[pyo3(signature = (m=50, ring=None))]
    fn gk(&self, py: Python<'_>, m: u32, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, py.detach(|| commands::gk(&self.inner, ring, m)))
    }

    #[pyo3(signature = (element, gens, side="left", degree_bound=None, ring=None))]
    fn member(
        &self,
        py: Python<'_>,
        element: &str,
        gens: Vec<String>,
        side: &str,
        degree_bound: Option<u32>,
        ring: Option<&str>,
    ) -> PyResult<Py<PyAny>> {
        let side = self::side(side)?;
        report(py, py.detach(|| commands::member(&self.inner, ring, side, element, &gens, degree_bound)))
    }

    #[pyo3(signature = (gens, side="left", degree_bound=None, ring=None))]
    fn gb(&self, py: Python<'_>, gens: Vec<String>, side: &str, degree_bound: Option<u32>, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        let side = self::side(side)?;
        report(py, py.detach(|| commands::gb(&self.inner, ring, side, &gens, degree_bound)))
    }

    #[pyo3(signature = (matrix=None))]
    fn idem_check(&self, py: Python<'_>, matrix: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, commands::idem_check(&self.inner, matrix))
    }

    #[pyo3(signature = (matrix=None))]
    fn qs_diagonalize(&self, py: Python<'_>, matrix: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, py.detach(|| commands::qs_diagonalize(&self.inner, matrix)))
    }

    #[pyo3(signature = (complex=None))]
    fn resolution_verify(&self, py: Python<'_>, complex: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, commands::resolution_verify(&self.inner, complex))
    }

    /// Returns `(label, report)`, label one of SAS_Trivial, SAS_Verified,
    /// NotSAS, Inconclusive.
    #[pyo3(signature = (complex=None, probe_bound=skewpbw::homology::DEFAULT_PROBE_BOUND))]
    fn sas_check(&self, py: Python<'_>, complex: Option<&str>, probe_bound: u32) -> PyResult<(String, Py<PyAny>)> {
        let (verdict, rep) = py.detach(|| commands::sas_check(&self.inner, complex, probe_bound)).map_err(err)?;
        Ok((verdict.label().to_string(), report(py, Ok(rep))?))
    }

    #[pyo3(signature = (degree=2, ring=None))]
    fn center(&self, py: Python<'_>, degree: u32, ring: Option<&str>) -> PyResult<Py<PyAny>> {
        report(py, py.detach(|| commands::center(&self.inner, ring, degree)))
    }
}

/// Names of the built-in presets.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    catalog::names().iter().map(|s| s.to_string()).collect()
}

/// The report for `spbw catalog list`.
#[pyfunction]
fn catalog_list(py: Python<'_>) -> PyResult<Py<PyAny>> {
    report(py, commands::catalog_list())
}

#[pymodule]
fn pyskewpbw(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyDocument>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_list, m)?)?;
    m.add("SkewPbwError", m.py().get_type::<SkewPbwError>())?;
    Ok(())
}
