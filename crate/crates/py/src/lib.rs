//! Python bindings. Graphs are wrapped as a class; reports, predictions
//! and certificates cross the boundary as plain dicts built from their JSON
//! form.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;
use serde::Serialize;

use spectra::acceptance::run_battery as run_core_battery;
use spectra::{generators, io, linalg, predictor, verifier, CoronaMode};

fn value_error(e: spectra::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_mode(mode: &str) -> PyResult<CoronaMode> {
    mode.parse().map_err(PyValueError::new_err)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "corona_spectra", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: spectra::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = spectra::Graph::from_edge_list(n, edges).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Builds a graph from a generator spec such as `gen:cycle:6`.
    #[staticmethod]
    fn generate(spec: &str) -> PyResult<Self> {
        let inner = generators::from_spec(spec).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Parses the `n m` header plus edge-line text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let inner = io::parse_edge_list(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn to_edge_list(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Common degree if the graph is regular, else `None`.
    fn regular_degree(&self) -> Option<usize> {
        self.inner.check_regular().ok().map(|c| c.degree)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.order(), self.inner.size())
    }
}

fn unwrap_graphs(hs: Vec<PyGraph>) -> Vec<spectra::Graph> {
    hs.into_iter().map(|h| h.inner).collect()
}

/// Attachments: a single graph replicated at every attachment point, or
/// one graph per point.
#[derive(FromPyObject)]
enum Attachments {
    One(PyGraph),
    Many(Vec<PyGraph>),
}

impl Attachments {
    fn expand(self, mode: CoronaMode, g: &spectra::Graph) -> Vec<spectra::Graph> {
        match self {
            Attachments::One(h) => vec![h.inner; mode.attach_points(g.order(), g.size())],
            Attachments::Many(hs) => unwrap_graphs(hs),
        }
    }
}

/// Builds the corona; returns the graph and its block layout.
#[pyfunction]
fn build_corona<'py>(
    py: Python<'py>,
    mode: &str,
    g: &PyGraph,
    h: Attachments,
) -> PyResult<(PyGraph, Bound<'py, PyAny>)> {
    let mode = parse_mode(mode)?;
    let hs = h.expand(mode, &g.inner);
    let layout = spectra::build_corona(mode, &g.inner, &hs).map_err(value_error)?;
    let info = to_py(py, &layout)?;
    Ok((PyGraph { inner: layout.graph }, info))
}

/// Ascending normalized Laplacian eigenvalues.
#[pyfunction]
fn laplacian_spectrum(g: &PyGraph) -> PyResult<Vec<f64>> {
    Ok(linalg::laplacian_spectrum(&g.inner).map_err(value_error)?.into_values())
}

#[pyfunction]
fn adjacency_spectrum(g: &PyGraph) -> PyResult<Vec<f64>> {
    Ok(linalg::adjacency_spectrum(&g.inner).map_err(value_error)?.into_values())
}

/// Closed-form corona spectrum as `{"parts": ..., "flattened": [...]}`.
#[pyfunction]
fn predict<'py>(py: Python<'py>, mode: &str, g: &PyGraph, h: Attachments) -> PyResult<Bound<'py, PyAny>> {
    let mode = parse_mode(mode)?;
    let hs = h.expand(mode, &g.inner);
    let base = predictor::RegularGraphSpec::from_graph(&g.inner).map_err(value_error)?;
    let attach = predictor::AttachmentSpec::from_graphs(&hs).map_err(value_error)?;
    let p = predictor::predict(mode, &base, &attach).map_err(value_error)?;
    to_py(py, &p)
}

#[pyfunction]
#[pyo3(signature = (mode, g, h, tol = 1e-8))]
fn verify<'py>(
    py: Python<'py>,
    mode: &str,
    g: &PyGraph,
    h: Attachments,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let mode = parse_mode(mode)?;
    let hs = h.expand(mode, &g.inner);
    let report = verifier::verify_theorem(mode, &g.inner, &hs, tol).map_err(value_error)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (a, b, tol = 1e-8))]
fn check_cospectral<'py>(py: Python<'py>, a: &PyGraph, b: &PyGraph, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let cert = verifier::check_cospectral(&a.inner, &b.inner, tol).map_err(value_error)?;
    to_py(py, &cert)
}

#[pyfunction]
#[pyo3(signature = (mode, g1, g2, h, tol = 1e-8))]
fn cospectral_corona_pair<'py>(
    py: Python<'py>,
    mode: &str,
    g1: &PyGraph,
    g2: &PyGraph,
    h: &PyGraph,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let mode = parse_mode(mode)?;
    let cert =
        verifier::cospectral_corona_pair(mode, &g1.inner, &g2.inner, &h.inner, tol).map_err(value_error)?;
    to_py(py, &cert)
}

/// Runs the acceptance battery; returns `{"passed", "criteria", "reports"}`.
#[pyfunction]
#[pyo3(signature = (tol = 1e-8))]
fn run_battery<'py>(py: Python<'py>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let result = py.detach(|| run_core_battery(tol));
    #[derive(Serialize)]
    struct Summary<'a> {
        passed: bool,
        criteria: &'a [spectra::acceptance::CriterionOutcome],
        reports: &'a [spectra::VerificationReport],
    }
    to_py(
        py,
        &Summary {
            passed: result.all_passed(),
            criteria: &result.criteria,
            reports: &result.reports,
        },
    )
}

#[pymodule]
fn corona_spectra(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(build_corona, m)?)?;
    m.add_function(wrap_pyfunction!(laplacian_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(adjacency_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(cospectral_corona_pair, m)?)?;
    m.add_function(wrap_pyfunction!(run_battery, m)?)?;
    Ok(())
}
