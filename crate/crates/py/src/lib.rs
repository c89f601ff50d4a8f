//! Python bindings. Structured results (reports, verdicts, spectra) come back
//! as plain dicts and lists decoded from the crate's JSON forms.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use cospectral::construction::ConstructedPair;
use cospectral::iso::{self, Strategy};
use cospectral::report::{self, VerifyOptions};
use cospectral::search::{parse_density, parse_dims, run_search, SearchConfig};
use cospectral::spectra;
use cospectral::{BipartiteGraph, ZMatrix};

fn value_error(e: cospectral::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix(rows: Vec<Vec<i64>>) -> PyResult<ZMatrix> {
    ZMatrix::from_rows(&rows).map_err(value_error)
}

fn rows(m: &ZMatrix) -> Vec<Vec<i64>> {
    m.to_rows_i64().expect("0/1 entries")
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn strategy(exhaustive: bool) -> Strategy {
    if exhaustive {
        Strategy::Exhaustive
    } else {
        Strategy::Auto
    }
}

/// A bipartite graph given by its biadjacency matrix.
#[pyclass(name = "Graph", module = "pycospectral", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: BipartiteGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(biadj: Vec<Vec<i64>>) -> PyResult<Self> {
        let inner = BipartiteGraph::new(matrix(biadj)?).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn left(&self) -> usize {
        self.inner.left()
    }

    #[getter]
    fn right(&self) -> usize {
        self.inner.right()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn biadj(&self) -> Vec<Vec<i64>> {
        rows(self.inner.biadj())
    }

    fn full_adjacency(&self) -> Vec<Vec<i64>> {
        rows(&self.inner.full_adjacency())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_balanced(&self) -> bool {
        self.inner.is_balanced()
    }

    fn biregular_degrees(&self) -> Option<(usize, usize)> {
        self.inner.biregular_degrees()
    }

    /// `{"adjacency": [...], "normalized": [...]}`, ascending coefficients as
    /// exact `"p/q"` strings.
    fn spectrum(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let cert = spectra::certify(&self.inner).map_err(value_error)?;
        to_py(py, &cert)
    }

    fn normalized_laplacian_eigenvalues(&self) -> PyResult<Vec<f64>> {
        let cert = spectra::certify(&self.inner).map_err(value_error)?;
        Ok(cert.normalized_laplacian_eigenvalues())
    }

    fn property_pi(&self) -> bool {
        iso::property_pi(&self.inner)
    }

    /// A vertex permutation swapping the two sides, if one exists.
    fn interchanging_automorphism(&self) -> Option<Vec<usize>> {
        iso::has_interchanging_automorphism(&self.inner).map(|w| w.interchanging_automorphism())
    }

    #[pyo3(signature = (name = "g"))]
    fn to_dot(&self, name: &str) -> String {
        self.inner.to_dot(name)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(left={}, right={}, edges={})",
            self.inner.left(),
            self.inner.right(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// The graphs with biadjacency `V⊗B` and `V⊗Bᵀ`.
#[pyclass(name = "Pair", module = "pycospectral", frozen)]
struct PyPair {
    inner: ConstructedPair,
}

#[pymethods]
impl PyPair {
    #[new]
    fn new(v: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> PyResult<Self> {
        let inner = cospectral::construct_pair(&matrix(v)?, &matrix(b)?).map_err(value_error)?;
        Ok(PyPair { inner })
    }

    #[getter]
    fn g1(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.g1().clone(),
        }
    }

    #[getter]
    fn g2(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.g2().clone(),
        }
    }

    /// `(m, n, p, q)`.
    #[getter]
    fn dims(&self) -> (usize, usize, usize, usize) {
        self.inner.dims()
    }

    fn cospectral_adjacency(&self) -> bool {
        spectra::cospectral_adjacency(&self.inner)
    }

    fn cospectral_normalized(&self) -> PyResult<bool> {
        spectra::cospectral_normalized(&self.inner).map_err(value_error)
    }

    fn eta_certificate(&self) -> String {
        iso::property_eta_certificate(self.inner.v(), self.inner.b()).to_string()
    }

    /// Vertex map `g1 → g2` respecting the canonical bipartitions, if any.
    fn partite_respecting_iso(&self) -> Option<Vec<usize>> {
        iso::partite_respecting_iso(&self.inner).map(|f| f.vertex_map)
    }

    #[pyo3(signature = (exhaustive = false))]
    fn decide_isomorphism(&self, py: Python<'_>, exhaustive: bool) -> PyResult<Py<PyAny>> {
        let verdict = iso::decide_pair_isomorphism_with(&self.inner, strategy(exhaustive));
        to_py(py, &verdict)
    }

    #[pyo3(signature = (exhaustive = false, cross_check = false))]
    fn report(&self, py: Python<'_>, exhaustive: bool, cross_check: bool) -> PyResult<Py<PyAny>> {
        let opts = VerifyOptions {
            strategy: strategy(exhaustive),
            cross_check,
            timings: false,
        };
        let r = report::verify_pair(self.inner.v(), self.inner.b(), &opts).map_err(value_error)?;
        to_py(py, &r)
    }

    fn __repr__(&self) -> String {
        let (m, n, p, q) = self.inner.dims();
        format!("Pair(v={m}x{n}, b={p}x{q})")
    }
}

/// `det(xI - A)`, ascending coefficients as exact strings.
#[pyfunction]
fn charpoly(a: Vec<Vec<i64>>) -> PyResult<Vec<String>> {
    let p = cospectral::charpoly::charpoly(&matrix(a)?).map_err(value_error)?;
    Ok(p.coeffs().iter().map(ToString::to_string).collect())
}

/// `(row_perm, col_perm)` with `b[i][j] = a[row_perm[i]][col_perm[j]]`.
#[pyfunction]
fn perm_equivalent(a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    let w = iso::perm_equivalent(&matrix(a)?, &matrix(b)?);
    Ok(w.map(|w| (w.row_perm, w.col_perm)))
}

#[pyfunction]
fn pet_witness(a: Vec<Vec<i64>>) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    let w = iso::pet_witness(&matrix(a)?).map_err(value_error)?;
    Ok(w.map(|w| (w.row_perm, w.col_perm)))
}

/// Isomorphism witness between two adjacency matrices, if any.
#[pyfunction]
fn graph_isomorphic(a: Vec<Vec<i64>>, b: Vec<Vec<i64>>) -> PyResult<Option<Vec<usize>>> {
    Ok(iso::graph_isomorphic(&matrix(a)?, &matrix(b)?).witness)
}

#[pyfunction]
fn reproduce_example(py: Python<'_>) -> PyResult<Py<PyAny>> {
    let r = report::reproduce_example(false).map_err(value_error)?;
    to_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (samples = 100, seed = 0, dims = "1-4", density = "0.5", biregular = false, symmetric_b = false, exhaustive = false))]
#[allow(clippy::too_many_arguments)]
fn search(
    py: Python<'_>,
    samples: u64,
    seed: u64,
    dims: &str,
    density: &str,
    biregular: bool,
    symmetric_b: bool,
    exhaustive: bool,
) -> PyResult<Py<PyAny>> {
    let [m, n, p, q] = parse_dims(dims).map_err(value_error)?;
    let cfg = SearchConfig {
        m,
        n,
        p,
        q,
        density: parse_density(density).map_err(value_error)?,
        biregular,
        symmetric_b,
        samples,
        seed,
        strategy: strategy(exhaustive),
    };
    let outcome = py
        .detach(|| run_search(&cfg, false))
        .map_err(value_error)?;
    to_py(py, &outcome)
}

#[pymodule]
fn pycospectral(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(perm_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(pet_witness, m)?)?;
    m.add_function(wrap_pyfunction!(graph_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_example, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
