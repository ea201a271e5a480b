//! Python module `bckcode`.
//!
//! Algebras are wrapped in [`Algebra`]; codes cross the boundary as lists of
//! 0/1 strings and structured reports as plain dicts.

use bckcode_core as core;
use bckcode_core::{BckAlgebra, BlockCode, CayleyAlgebra};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(
    bckcode,
    BckError,
    PyValueError,
    "Invalid input or failed hypothesis."
);

fn to_py_err(err: core::Error) -> PyErr {
    match err {
        core::Error::Internal(msg) => PyRuntimeError::new_err(msg),
        other => BckError::new_err(other.to_string()),
    }
}

/// Reports go through JSON so the dict shape matches the CLI's `--json` data.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn code_from(words: Vec<String>) -> PyResult<BlockCode> {
    BlockCode::from_strs(&words).map_err(to_py_err)
}

/// A finite algebra given by its Cayley table; element 0 is θ.
#[pyclass(name = "Algebra", module = "bckcode", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Algebra {
    inner: CayleyAlgebra,
}

impl Algebra {
    fn bck(&self) -> PyResult<BckAlgebra> {
        BckAlgebra::new(self.inner.clone()).map_err(to_py_err)
    }
}

impl From<BckAlgebra> for Algebra {
    fn from(alg: BckAlgebra) -> Self {
        Algebra {
            inner: alg.into_inner(),
        }
    }
}

#[pymethods]
impl Algebra {
    #[new]
    #[pyo3(signature = (table, names=None))]
    fn new(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> PyResult<Self> {
        let mut inner = CayleyAlgebra::new(table).map_err(to_py_err)?;
        if let Some(names) = names {
            inner = inner.with_names(names).map_err(to_py_err)?;
        }
        Ok(Algebra { inner })
    }

    /// Parses the algebra file format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        core::format::parse_algebra(text)
            .map(|inner| Algebra { inner })
            .map_err(to_py_err)
    }

    fn to_text(&self) -> String {
        core::format::write_algebra(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.to_rows()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        (0..self.inner.order())
            .map(|x| self.inner.name(x))
            .collect()
    }

    fn op(&self, x: usize, y: usize) -> PyResult<usize> {
        let n = self.inner.order();
        if x >= n || y >= n {
            return Err(to_py_err(core::Error::ElementOutOfRange {
                element: x.max(y),
                order: n,
            }));
        }
        Ok(self.inner.op(x, y))
    }

    fn check_axioms<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &core::check_axioms(&self.inner))
    }

    fn is_bck(&self) -> bool {
        core::check_axioms(&self.inner).is_bck
    }

    /// Raises `BckError` unless the table is a BCK-algebra.
    fn is_commutative(&self) -> PyResult<bool> {
        Ok(core::is_commutative(&self.bck()?))
    }

    fn is_implicative(&self) -> PyResult<bool> {
        Ok(core::is_implicative(&self.bck()?))
    }

    /// `leq[x][y]` is `x ≤ y`.
    fn induced_order(&self) -> PyResult<Vec<Vec<bool>>> {
        Ok(core::induced_order(&self.bck()?)
            .map_err(to_py_err)?
            .to_rows())
    }

    fn canonical_code(&self) -> PyResult<Vec<String>> {
        Ok(core::canonical_code(&self.bck()?).to_strings())
    }

    /// Code of the BCK-function given as `(label, element)` pairs.
    fn generate_code(&self, function: Vec<(String, usize)>) -> PyResult<Vec<String>> {
        let alg = self.bck()?;
        let f = core::BckFunction::new(&alg, function).map_err(to_py_err)?;
        Ok(core::generate_code(&f).to_strings())
    }

    /// The table with element `x` renamed `perm[x]`; `perm[0]` must be 0.
    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner
            .relabel(&perm)
            .map(|inner| Algebra { inner })
            .map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(order={}, table={:?})",
            self.inner.order(),
            self.inner.to_rows()
        )
    }
}

#[pyfunction]
fn pointwise_function_algebra(k: usize) -> PyResult<Algebra> {
    core::pointwise_function_algebra(k)
        .map(Algebra::from)
        .map_err(to_py_err)
}

#[pyfunction]
fn construct_from_code(code: Vec<String>) -> PyResult<Algebra> {
    let built = core::construct_from_code(&code_from(code)?).map_err(to_py_err)?;
    Ok(built.algebra.into())
}

#[pyfunction]
fn verify_roundtrip<'py>(py: Python<'py>, code: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &core::verify_roundtrip(&code_from(code)?).map_err(to_py_err)?,
    )
}

#[pyfunction]
fn lift_code<'py>(py: Python<'py>, code: Vec<String>) -> PyResult<(Algebra, Bound<'py, PyAny>)> {
    let lift = core::lift_code(&code_from(code)?).map_err(to_py_err)?;
    let report = to_py(py, &core::report::LiftReport::from(&lift))?;
    Ok((lift.algebra.into(), report))
}

#[pyfunction]
fn is_cn_member(code: Vec<String>) -> PyResult<bool> {
    Ok(core::is_cn_member(&code_from(code)?))
}

#[pyfunction]
fn cn_count(n: usize) -> u64 {
    core::cn_count(n)
}

#[pyfunction]
fn enumerate_cn(n: usize) -> PyResult<Vec<Vec<String>>> {
    Ok(core::enumerate_cn(n)
        .map_err(to_py_err)?
        .map(|c| c.code().to_strings())
        .collect())
}

#[pyfunction]
fn omega(n: usize) -> PyResult<Vec<String>> {
    Ok(core::omega(n).map_err(to_py_err)?.code().to_strings())
}

#[pyfunction]
fn family_algebra<'py>(py: Python<'py>, n: usize) -> PyResult<(Algebra, Bound<'py, PyAny>)> {
    let family = core::family_algebra(n).map_err(to_py_err)?;
    let report = to_py(py, &core::report::FamilyReport::from(&family))?;
    Ok((family.algebra.into(), report))
}

#[pyfunction]
fn enumerate_bck(py: Python<'_>, n: usize) -> PyResult<Vec<Algebra>> {
    let algs = py.detach(|| core::enumerate_bck(n)).map_err(to_py_err)?;
    Ok(algs.into_iter().map(Algebra::from).collect())
}

#[pyfunction]
fn census<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let report = py.detach(|| core::census(n)).map_err(to_py_err)?;
    to_py(py, &report)
}

/// An isomorphism `a → b` as a list, or `None`.
#[pyfunction]
fn are_isomorphic(a: &Algebra, b: &Algebra) -> Option<Vec<usize>> {
    core::are_isomorphic(&a.inner, &b.inner)
}

#[pyfunction]
fn code_similar(a: &Algebra, b: &Algebra) -> PyResult<bool> {
    Ok(core::code_similar(&a.bck()?, &b.bck()?))
}

#[pymodule]
fn bckcode(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BckError", m.py().get_type::<BckError>())?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(pointwise_function_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(construct_from_code, m)?)?;
    m.add_function(wrap_pyfunction!(verify_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(lift_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_cn_member, m)?)?;
    m.add_function(wrap_pyfunction!(cn_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cn, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(family_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bck, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(code_similar, m)?)?;
    Ok(())
}
