//! Python bindings: algebras, complexes, verdicts, mutation and the built-in demos.
//!
//! Reports come back as plain dicts and lists.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};
use serde::Serialize;
use serde_json::Value;
use silting_core::algebra::self_injectivity_report;
use silting_core::complex::{hom_table, minimize, ProjComplex};
use silting_core::demo::{run_paper_demo, run_preprojective_demo, DemoOptions};
use silting_core::fixtures::{build_paper_family, paper_algebra, preprojective, DynkinType};
use silting_core::io::{emit_dot, parse_algebra, parse_complex, print_algebra, print_complex, AlgebraFile};
use silting_core::linalg::PrimeField;
use silting_core::mutation::{interval_enumerate, mutate, summands_of, Side};
use silting_core::silting::{silting_check, tilting_check, SiltingCertificate};

create_exception!(silting, SiltingError, PyException);

fn err(e: silting_core::Error) -> PyErr {
    SiltingError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(json_to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, json_to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, report: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(report).map_err(|e| SiltingError::new_err(e.to_string()))?;
    json_to_py(py, &v)
}

fn field(p: u32) -> PyResult<PrimeField> {
    PrimeField::new(p).map_err(err)
}

/// A finite-dimensional algebra given by a quiver with relations.
#[pyclass(name = "Algebra", module = "silting", frozen)]
struct PyAlgebra {
    inner: Arc<silting_core::algebra::Algebra>,
    text: Option<String>,
}

#[pymethods]
impl PyAlgebra {
    /// Parses the text format used by the command line tool.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let file = parse_algebra(text).map_err(err)?;
        Ok(PyAlgebra { inner: Arc::new(file.build().map_err(err)?), text: Some(print_algebra(&file)) })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| SiltingError::new_err(format!("{path}: {e}")))?;
        Self::parse(&text)
    }

    /// The algebra A(n): two parallel arrows between consecutive vertices with x^2 = y^2 = 0.
    #[staticmethod]
    #[pyo3(signature = (n, p = 101))]
    fn double_arrow_chain(n: usize, p: u32) -> PyResult<Self> {
        let presentation = silting_core::fixtures::paper_presentation(n).map_err(err)?;
        let text = print_algebra(&AlgebraFile { field: field(p)?, presentation });
        Ok(PyAlgebra { inner: Arc::new(paper_algebra(n, field(p)?).map_err(err)?), text: Some(text) })
    }

    /// The twisted trivial extension of A(n), with generic basis labels.
    #[staticmethod]
    #[pyo3(signature = (n, p = 101))]
    fn lambda_(n: usize, p: u32) -> PyResult<Self> {
        let fam = build_paper_family(n, field(p)?).map_err(err)?;
        Ok(PyAlgebra { inner: fam.lambda.clone(), text: None })
    }

    #[staticmethod]
    #[pyo3(signature = (dynkin_type, p = 101))]
    fn preprojective(dynkin_type: &str, p: u32) -> PyResult<Self> {
        let ty = DynkinType::parse(dynkin_type).map_err(err)?;
        Ok(PyAlgebra { inner: Arc::new(preprojective(ty, field(p)?).map_err(err)?), text: None })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix()
    }

    fn self_injectivity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self_injectivity_report(&self.inner))
    }

    /// The presentation in the text format, when the algebra was built from one.
    fn text(&self) -> Option<String> {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, vertices={})", self.inner.dim(), self.inner.num_vertices())
    }
}

/// A bounded complex of finitely generated projective modules.
#[pyclass(name = "Complex", module = "silting", frozen)]
struct PyComplex {
    inner: ProjComplex,
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(algebra: &PyAlgebra, text: &str) -> PyResult<Self> {
        Ok(PyComplex { inner: parse_complex(text, algebra.inner.clone()).map_err(err)? })
    }

    #[staticmethod]
    fn regular(algebra: &PyAlgebra) -> Self {
        PyComplex { inner: ProjComplex::regular(algebra.inner.clone()) }
    }

    fn text(&self) -> String {
        print_complex(&self.inner)
    }

    fn shift(&self, m: i32) -> Self {
        PyComplex { inner: self.inner.shift(m) }
    }

    fn minimize(&self) -> Self {
        PyComplex { inner: minimize(&self.inner) }
    }

    fn g_vector(&self) -> Vec<i64> {
        self.inner.g_vector()
    }

    /// `(m, dim Hom(self, other[m]))` over the window where the Hom complex is nonzero.
    fn hom_table(&self, other: &PyComplex) -> Vec<(i32, usize)> {
        hom_table(&self.inner, &other.inner)
    }

    fn summands(&self) -> PyResult<Vec<PyComplex>> {
        Ok(summands_of(&self.inner).map_err(err)?.into_iter().map(|inner| PyComplex { inner }).collect())
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Complex(lo={}, hi={}, g={:?})", self.inner.lo(), self.inner.hi(), self.inner.g_vector())
    }
}

fn certificate(name: &str) -> PyResult<SiltingCertificate> {
    Ok(match name {
        "regular" => SiltingCertificate::Regular,
        "mutation-chain" => SiltingCertificate::MutationChain,
        "spherical-twist" => SiltingCertificate::SphericalTwist,
        "base-change" => SiltingCertificate::BaseChange,
        "unverified" => SiltingCertificate::Unverified,
        _ => return Err(SiltingError::new_err(format!("unknown certificate '{name}'"))),
    })
}

#[pyfunction(name = "silting_check")]
#[pyo3(signature = (complex, certificate = "unverified"))]
fn py_silting_check<'py>(py: Python<'py>, complex: &PyComplex, certificate: &str) -> PyResult<Bound<'py, PyAny>> {
    let cert = self::certificate(certificate)?;
    let report = silting_check(&complex.inner, cert).map_err(err)?;
    let out = to_py(py, &report)?;
    out.set_item("verdict", report.verdict())?;
    Ok(out)
}

#[pyfunction(name = "tilting_check")]
fn py_tilting_check<'py>(py: Python<'py>, complex: &PyComplex) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &tilting_check(&complex.inner).map_err(err)?)
}

/// Irreducible mutation at the 0-based summand `at`.
#[pyfunction(name = "mutate")]
#[pyo3(signature = (complex, at, side = "left"))]
fn py_mutate(complex: &PyComplex, at: usize, side: &str) -> PyResult<PyComplex> {
    let side: Side = side.parse().map_err(err)?;
    let step = mutate(&complex.inner, at, side).map_err(err)?;
    Ok(PyComplex { inner: step.result_complex() })
}

/// Two-term silting complexes reachable from the regular complex; returns a dict with the
/// sorted g-vectors of every node and the DOT rendering of the graph.
#[pyfunction]
#[pyo3(signature = (algebra, node_bound = 10_000))]
fn two_term_interval<'py>(py: Python<'py>, algebra: &PyAlgebra, node_bound: usize) -> PyResult<Bound<'py, PyAny>> {
    let g = interval_enumerate(&ProjComplex::regular(algebra.inner.clone()), node_bound, usize::MAX).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("complete", g.complete)?;
    dict.set_item("nodes", g.nodes.iter().map(|n| n.g_vectors.clone()).collect::<Vec<_>>())?;
    dict.set_item("edges", g.edges.iter().map(|e| (e.from, e.to)).collect::<Vec<_>>())?;
    dict.set_item("dot", emit_dot(&g))?;
    Ok(dict.into_any())
}

#[pyfunction]
#[pyo3(signature = (n = 4, p = 101, depth = 2))]
fn paper_demo<'py>(py: Python<'py>, n: usize, p: u32, depth: usize) -> PyResult<Bound<'py, PyAny>> {
    let opts = DemoOptions { neighborhood_depth: depth, ..DemoOptions::default() };
    let report = py.detach(|| run_paper_demo(n, p, &opts)).map_err(err)?;
    to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (dynkin_type, p = 101, node_bound = 10_000))]
fn preprojective_demo<'py>(
    py: Python<'py>,
    dynkin_type: &str,
    p: u32,
    node_bound: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let ty = DynkinType::parse(dynkin_type).map_err(err)?;
    let report = py.detach(|| run_preprojective_demo(ty, p, node_bound)).map_err(err)?;
    to_py(py, &report)
}

#[pymodule]
fn silting(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SiltingError", m.py().get_type::<SiltingError>())?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(py_silting_check, m)?)?;
    m.add_function(wrap_pyfunction!(py_tilting_check, m)?)?;
    m.add_function(wrap_pyfunction!(py_mutate, m)?)?;
    m.add_function(wrap_pyfunction!(two_term_interval, m)?)?;
    m.add_function(wrap_pyfunction!(paper_demo, m)?)?;
    m.add_function(wrap_pyfunction!(preprojective_demo, m)?)?;
    Ok(())
}
