//! Python bindings. Elements are immutable value objects; reports come back
//! as plain dicts.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ultracrystal::crystal::{CrystalElt, ExtInt};
use ultracrystal::perfect::{self, BElt, Context};
use ultracrystal::{geom, omega, trop, ud};

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn check_index(i: usize) -> PyResult<usize> {
    if i < 3 {
        Ok(i)
    } else {
        Err(PyIndexError::new_err(format!("index {i} out of range 0..3")))
    }
}

fn to_dict<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (s,))
}

fn fin(v: ExtInt) -> Option<i64> {
    v.fin()
}

/// Element of `B_l` (or `B_∞` when `level` is None), in coordinates `t = 3b`.
#[pyclass(name = "BElement", skip_from_py_object, frozen, eq, hash, module = "ultracrystal")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyB(BElt);

#[pymethods]
impl PyB {
    #[new]
    #[pyo3(signature = (t, level=None))]
    fn new(t: [i64; 6], level: Option<i64>) -> PyResult<Self> {
        let ctx = level.map_or(Context::Limit, Context::Level);
        BElt::new(t, ctx).map(PyB).map_err(value_err)
    }

    #[getter]
    fn t(&self) -> [i64; 6] {
        self.0.t()
    }

    #[getter]
    fn level(&self) -> Option<i64> {
        match self.0.context() {
            Context::Level(l) => Some(l),
            Context::Limit => None,
        }
    }

    fn s(&self) -> i64 {
        self.0.s()
    }

    fn f(&self, i: usize) -> PyResult<Option<PyB>> {
        Ok(self.0.try_f(check_index(i)?).map_err(value_err)?.map(PyB))
    }

    fn e(&self, i: usize) -> PyResult<Option<PyB>> {
        Ok(self.0.try_e(check_index(i)?).map_err(value_err)?.map(PyB))
    }

    fn eps(&self, i: usize) -> PyResult<i64> {
        Ok(self.0.eps_i(check_index(i)?))
    }

    fn phi(&self, i: usize) -> PyResult<i64> {
        Ok(self.0.phi_i(check_index(i)?))
    }

    /// Weight as `(Λ0, Λ1, Λ2)` coefficients.
    fn weight(&self) -> [i64; 3] {
        self.0.weight().lambda
    }

    fn case_f(&self) -> PyResult<usize> {
        self.0.case_f().map_err(value_err)
    }

    fn case_e(&self) -> PyResult<usize> {
        self.0.case_e().map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("BElement({:?}, level={:?})", self.0.t(), self.level())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Point of the ultra-discretized crystal on `ℤ⁶`.
#[pyclass(name = "XPoint", skip_from_py_object, frozen, eq, hash, module = "ultracrystal")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyX(ud::XPoint);

#[pymethods]
impl PyX {
    #[new]
    fn new(x: [i64; 6]) -> Self {
        PyX(ud::XPoint::new(x))
    }

    #[getter]
    fn x(&self) -> [i64; 6] {
        self.0.x
    }

    /// `ẽ_i^n`; `n = -1` is `f̃_i`.
    fn act(&self, i: usize, n: i64) -> PyResult<PyX> {
        Ok(PyX(ud::act(check_index(i)?, n, &self.0)))
    }

    fn f(&self, i: usize) -> PyResult<PyX> {
        self.act(i, -1)
    }

    fn e(&self, i: usize) -> PyResult<PyX> {
        self.act(i, 1)
    }

    fn eps(&self, i: usize) -> PyResult<Option<i64>> {
        Ok(fin(CrystalElt::eps(&self.0, check_index(i)?)))
    }

    fn phi(&self, i: usize) -> PyResult<Option<i64>> {
        Ok(fin(CrystalElt::phi(&self.0, check_index(i)?)))
    }

    fn wt(&self, i: usize) -> PyResult<i64> {
        Ok(ud::wt(check_index(i)?, &self.0))
    }

    /// The isomorphism onto `B_∞`.
    fn omega(&self) -> PyB {
        PyB(omega::omega(&self.0))
    }

    /// Which branch of `f̃_0` applies, as `"f1"` … `"f6"`.
    fn f0_case(&self) -> PyResult<String> {
        omega::classify_f(&self.0).map(|c| c.to_string()).map_err(|e| PyValueError::new_err(format!("{e:?}")))
    }

    fn __repr__(&self) -> String {
        format!("XPoint({:?})", self.0.x)
    }
}

#[pyfunction]
fn enumerate(level: i64) -> PyResult<Vec<PyB>> {
    Ok(perfect::enumerate(level).map_err(value_err)?.into_iter().map(PyB).collect())
}

#[pyfunction]
fn minimal_elements(level: i64) -> PyResult<Vec<PyB>> {
    Ok(perfect::minimal_elements(level).map_err(value_err)?.into_iter().map(PyB).collect())
}

#[pyfunction]
fn omega_inv(b: &PyB) -> PyX {
    PyX(omega::omega_inv(&b.0))
}

#[pyfunction]
fn perfect_check(py: Python<'_>, level: i64) -> PyResult<Bound<'_, PyAny>> {
    to_dict(py, &perfect::perfect_check(level).map_err(value_err)?)
}

#[pyfunction]
#[pyo3(signature = (radius=2))]
fn verify_iso(py: Python<'_>, radius: i64) -> PyResult<Bound<'_, PyAny>> {
    let rep = py.detach(|| omega::verify_iso(radius));
    to_dict(py, &rep)
}

#[pyfunction]
#[pyo3(signature = (radius=2, span=2))]
fn verify_ud(py: Python<'_>, radius: i64, span: i64) -> PyResult<Bound<'_, PyAny>> {
    let rep = py.detach(|| ud::verify_ud(radius, span));
    to_dict(py, &rep)
}

#[pyfunction]
#[pyo3(signature = (samples=50, seed=0))]
fn verify_geom(py: Python<'_>, samples: usize, seed: u64) -> PyResult<Bound<'_, PyAny>> {
    let (ax, sc) = py.detach(|| (geom::axioms_check(samples, seed), geom::schubert::cross_check(samples, seed)));
    let d = PyDict::new(py);
    d.set_item("pass", ax.pass && sc.pass)?;
    d.set_item("axioms", to_dict(py, &ax)?)?;
    d.set_item("schubert", to_dict(py, &sc)?)?;
    Ok(d.into_any())
}

/// Tropicalize a subtraction-free expression, optionally fixing variables
/// first, and return the simplified max-plus form as text.
#[pyfunction]
#[pyo3(signature = (expr, fixed=None, simplified=true))]
fn tropicalize(expr: &str, fixed: Option<std::collections::BTreeMap<String, i64>>, simplified: bool) -> PyResult<String> {
    let e = trop::parse(expr).map_err(value_err)?;
    let mut t = trop::ud(&e);
    for (k, v) in fixed.unwrap_or_default() {
        t = t.specialize(&k, v);
    }
    Ok(if simplified { trop::simplify(&t) } else { t }.to_string())
}

#[pyfunction]
fn trop_eval(expr: &str, at: std::collections::BTreeMap<String, i64>) -> PyResult<i64> {
    let e = trop::parse(expr).map_err(value_err)?;
    trop::ud(&e).eval(&at).map_err(value_err)
}

#[pymodule]
#[pyo3(name = "ultracrystal")]
fn ultracrystal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyB>()?;
    m.add_class::<PyX>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_elements, m)?)?;
    m.add_function(wrap_pyfunction!(omega_inv, m)?)?;
    m.add_function(wrap_pyfunction!(perfect_check, m)?)?;
    m.add_function(wrap_pyfunction!(verify_iso, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ud, m)?)?;
    m.add_function(wrap_pyfunction!(verify_geom, m)?)?;
    m.add_function(wrap_pyfunction!(tropicalize, m)?)?;
    m.add_function(wrap_pyfunction!(trop_eval, m)?)?;
    Ok(())
}
