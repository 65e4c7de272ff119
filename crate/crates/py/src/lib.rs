//! Python bindings: the graph type, the seven constructors, and the
//! analysis operations, exposed as the `srgq_py` extension module.
//!
//! Scalar results come back as native Python values; exact field elements
//! are rendered as strings (`"p/q"` or `"p/q + r/s*sqrt5"`) since Python
//! has no native `Q(sqrt 5)` type.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use srgq::analyzer;
use srgq::constructors;
use srgq::error::Error;
use srgq::gewirtz;
use srgq::graph::SrgParams;
use srgq::iso;
use srgq::json;
use srgq::parity as sign_parity;
use srgq::plus;
use srgq::quad;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } | Error::Structure(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Immutable simple undirected graph with canonical edge ids.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: srgq::Graph,
}

#[pymethods]
impl Graph {
    /// Build from a vertex count and an edge list.
    #[staticmethod]
    fn build(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Graph> {
        Ok(Graph {
            inner: srgq::Graph::build(n, &edges).map_err(py_err)?,
        })
    }

    /// One of the seven named graphs, or `trapezohedral:<n>`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Graph> {
        Ok(Graph {
            inner: constructors::by_name(name).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Graph> {
        Ok(Graph {
            inner: json::graph_from_json(text).map_err(py_err)?,
        })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).ones().collect())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    /// `(n, k, lambda, mu)` when strongly regular, else `None`.
    fn srg_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        self.inner
            .srg_parameters()
            .map(|p| (p.n, p.k, p.lambda, p.mu))
    }

    /// Canonical 4-cycles as vertex quadruples.
    fn four_cycles(&self) -> Vec<(usize, usize, usize, usize)> {
        self.inner
            .four_cycles()
            .into_iter()
            .map(|c| (c.vertices[0], c.vertices[1], c.vertices[2], c.vertices[3]))
            .collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components()
    }

    fn every_vertex_on_five_cycle(&self) -> bool {
        self.inner.every_vertex_on_five_cycle()
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<(Graph, Vec<usize>)> {
        let (g, map) = self.inner.induced(&vertices).map_err(py_err)?;
        Ok((Graph { inner: g }, map))
    }

    fn is_isomorphic(&self, other: &Graph) -> PyResult<bool> {
        iso::are_isomorphic(&self.inner, &other.inner).map_err(py_err)
    }

    fn to_json(&self) -> String {
        json::graph_to_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        json::graph_to_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A plus graph with its back-mapping to source edge ids.
#[pyclass(frozen)]
struct PlusGraph {
    inner: plus::PlusGraph,
}

#[pymethods]
impl PlusGraph {
    #[getter]
    fn graph(&self) -> Graph {
        Graph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn edge_of_vertex(&self) -> Vec<usize> {
        self.inner.edge_of_vertex.clone()
    }

    /// Source edge ids of each connected component.
    fn component_sources(&self) -> Vec<Vec<usize>> {
        plus::plus_components(&self.inner)
            .into_iter()
            .map(|c| c.source_edges)
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "PlusGraph(vertices={}, edges={})",
            self.inner.graph.vertex_count(),
            self.inner.graph.edge_count()
        )
    }
}

/// The plus graph of `g`: one vertex per edge, adjacency per opposite
/// 4-cycle edges.
#[pyfunction]
fn plus_graph(g: &Graph) -> PlusGraph {
    PlusGraph {
        inner: plus::plus_graph(&g.inner),
    }
}

/// The relative plus graph on an edge-id subset.
#[pyfunction]
fn relative_plus(edge_ids: Vec<usize>, g: &Graph) -> PyResult<PlusGraph> {
    Ok(PlusGraph {
        inner: plus::relative_plus(&edge_ids, &g.inner).map_err(py_err)?,
    })
}

/// Build and solve the odd-4-cycle parity system. Returns a dict with
/// `rows`, `columns`, `status`, and either `witness` (bit list) or
/// `certificate_rows` plus `cycles`.
#[pyfunction]
#[pyo3(signature = (g, force = false))]
fn parity<'py>(py: Python<'py>, g: &Graph, force: bool) -> PyResult<Bound<'py, PyDict>> {
    let sys = sign_parity::build_odd_four_cycle_system(&g.inner, force).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("rows", sys.rows.len())?;
    out.set_item("columns", sys.columns)?;
    match sign_parity::solve_gf2(&sys) {
        sign_parity::Solution::Feasible(signs) => {
            out.set_item("status", "feasible")?;
            out.set_item("witness", signs.to_bit_vec())?;
        }
        sign_parity::Solution::Infeasible(cert) => {
            let verified = sign_parity::verify_certificate(&sys, &cert).map_err(py_err)?;
            out.set_item("status", "infeasible")?;
            out.set_item("certificate_rows", cert.rows.clone())?;
            let cycles: Vec<Vec<usize>> =
                cert.cycles.iter().map(|c| c.vertices.to_vec()).collect();
            out.set_item("cycles", cycles)?;
            out.set_item("certificate_verified", verified)?;
        }
    }
    Ok(out)
}

/// Check the built-in Clebsch witness: pattern, idempotency, rank, and the
/// resulting psd rank bounds.
#[pyfunction]
fn certify_q2_clebsch(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let g = constructors::clebsch();
    let m = quad::clebsch_witness_matrix();
    let cert = quad::two_eigenvalue_certificate(&m, &g).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("pattern", cert.pattern_ok)?;
    out.set_item("idempotent", cert.idempotent_ok)?;
    out.set_item("nontrivial", cert.nontrivial)?;
    out.set_item("rank", cert.rank)?;
    out.set_item(
        "multiplicities",
        (cert.multiplicity_of_zero(), cert.multiplicity_of_one()),
    )?;
    out.set_item("pass", cert.pass)?;
    if cert.pass {
        let bounds = quad::psd_rank_bounds(&g, Some(&m)).map_err(py_err)?;
        out.set_item("psd_rank_bounds", bounds)?;
    }
    Ok(out)
}

/// Exact adjacency spectrum of SRG parameters, as `(value, multiplicity)`
/// pairs with exact string values.
#[pyfunction]
fn spectrum(n: usize, k: usize, lambda: usize, mu: usize) -> PyResult<Vec<(String, usize)>> {
    let params = SrgParams { n, k, lambda, mu };
    let values = analyzer::srg_adjacency_spectrum(&params).map_err(py_err)?;
    Ok(values.iter().map(|(v, m)| (v.to_string(), *m)).collect())
}

/// Recover and fully verify the point/line/T decomposition of
/// SRG(56,10,0,2).
#[pyfunction]
#[pyo3(signature = (g, budget = None))]
fn decompose<'py>(py: Python<'py>, g: &Graph, budget: Option<u64>) -> PyResult<Bound<'py, PyDict>> {
    let budget = budget.unwrap_or(gewirtz::DEFAULT_SEARCH_BUDGET);
    let dec = gewirtz::find_plt_decomposition(&g.inner, budget).map_err(py_err)?;
    let traps = gewirtz::trapezohedral_subgraphs(&g.inner, &dec).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("P", dec.p.clone())?;
    out.set_item("L", dec.l.clone())?;
    out.set_item("T", dec.t.clone())?;
    out.set_item(
        "tau_cycles",
        dec.tau_cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
    )?;
    out.set_item("pairings", dec.pairings.clone())?;
    out.set_item("trapezohedral_subgraphs", traps.len())?;
    out.set_item(
        "matchings_ok",
        gewirtz::verify_matchings(&g.inner, &dec).map_err(py_err)?,
    )?;
    Ok(out)
}

/// Full analysis of a named graph as a JSON string (the same document the
/// command-line `report` writes).
#[pyfunction]
fn report_json(name: &str) -> PyResult<String> {
    let g = constructors::by_name(name).map_err(py_err)?;
    let report = analyzer::analyze(&g, name).map_err(py_err)?;
    serde_json::to_string_pretty(&report).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// The concluded q-value for a named graph: "2", "3", or "open".
#[pyfunction]
fn verdict(name: &str) -> PyResult<String> {
    let g = constructors::by_name(name).map_err(py_err)?;
    let report = analyzer::analyze(&g, name).map_err(py_err)?;
    Ok(report.verdict.to_string())
}

/// The seven graph names in conventional order.
#[pyfunction]
fn graph_names() -> Vec<String> {
    constructors::SEVEN_GRAPHS
        .iter()
        .map(|(name, _)| name.to_string())
        .collect()
}

#[pymodule]
fn srgq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<PlusGraph>()?;
    m.add_function(wrap_pyfunction!(plus_graph, m)?)?;
    m.add_function(wrap_pyfunction!(relative_plus, m)?)?;
    m.add_function(wrap_pyfunction!(parity, m)?)?;
    m.add_function(wrap_pyfunction!(certify_q2_clebsch, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(report_json, m)?)?;
    m.add_function(wrap_pyfunction!(verdict, m)?)?;
    m.add_function(wrap_pyfunction!(graph_names, m)?)?;
    Ok(())
}
