//! Python bindings. Structured results cross the boundary as JSON documents
//! and arrive as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sqtriplet::io::{complex_from_json, complex_to_json, solution_to_value, table_to_value};
use sqtriplet::{DegreeTriplet, FreeSqComplex};

fn err(e: sqtriplet::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).expect("serializable");
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn triplet(n: usize, a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> PyResult<DegreeTriplet> {
    DegreeTriplet::new(n, &a, &b, &c).map_err(err)
}

/// Betti numbers of the triplet `(A, B, C)` of type `n`, as a dict.
#[pyfunction]
fn solve_betti(py: Python<'_>, n: usize, a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> PyResult<Py<PyAny>> {
    let s = sqtriplet::solve_betti(&triplet(n, a, b, c)?).map_err(err)?;
    to_py(py, &solution_to_value(&s))
}

#[pyfunction]
fn is_balanced(n: usize, a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> PyResult<bool> {
    Ok(sqtriplet::is_balanced(&triplet(n, a, b, c)?))
}

/// Balanced triplets of type `n` as `(A, B, C)` tuples.
#[pyfunction]
fn enumerate_balanced(n: usize) -> Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    sqtriplet::enumerate_balanced(n)
        .iter()
        .map(|t| (t.set_a().to_vec(), t.set_b().to_vec(), t.set_c().to_vec()))
        .collect()
}

/// Entries as strings, so that they read back exactly with `fractions.Fraction`.
#[pyfunction]
fn transition_matrix(n: usize) -> Vec<Vec<String>> {
    let m = sqtriplet::transition_matrix(n);
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

#[pyfunction]
fn herzog_kuhl(degrees: Vec<i64>) -> PyResult<Vec<String>> {
    let v = sqtriplet::herzog_kuhl(&degrees).map_err(err)?;
    Ok(v.iter().map(ToString::to_string).collect())
}

/// `(ranks, concordant)` for the pinching construction on `A ⊆ [0, n]`.
#[pyfunction]
fn construction_betti(degrees: Vec<i64>, n: usize) -> PyResult<(Vec<String>, bool)> {
    let (r, ok) = sqtriplet::construction_betti(&degrees, n).map_err(err)?;
    Ok((r.iter().map(ToString::to_string).collect(), ok))
}

#[pyclass(name = "Complex", frozen)]
struct Complex {
    inner: FreeSqComplex,
}

#[pymethods]
impl Complex {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = complex_from_json(text).map_err(err)?;
        Ok(Complex { inner })
    }

    /// `S <- S(-2)^3` in three variables.
    #[staticmethod]
    fn example23() -> Self {
        Complex { inner: FreeSqComplex::example23() }
    }

    fn to_json(&self) -> String {
        complex_to_json(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Violations as strings; empty when the complex is valid.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(ToString::to_string).collect()
    }

    fn is_minimal(&self) -> bool {
        self.inner.is_minimal()
    }

    fn minimalize(&self) -> Self {
        Complex { inner: self.inner.minimalize() }
    }

    fn dualize(&self) -> Self {
        Complex { inner: self.inner.dualize() }
    }

    fn ad(&self) -> Self {
        Complex { inner: sqtriplet::ad(&self.inner) }
    }

    fn translate(&self, k: i64) -> Self {
        Complex { inner: self.inner.translate(k) }
    }

    /// `(position, [total degree of each generator])`, highest position last.
    fn ranks(&self) -> Vec<(i64, Vec<usize>)> {
        self.inner
            .terms()
            .iter()
            .map(|(&p, gens)| (p, gens.iter().map(|g| g.len()).collect()))
            .collect()
    }

    /// Dict with `betti`, `homology` and `cohomology` tables.
    fn invariants(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let inv = self.inner.invariants();
        to_py(
            py,
            &serde_json::json!({
                "betti": table_to_value(&inv.betti),
                "homology": table_to_value(&inv.homology),
                "cohomology": table_to_value(&inv.cohomology),
            }),
        )
    }

    /// `(degree_sequence, is_pure, is_linear)`.
    fn profile(&self) -> PyResult<(Vec<usize>, bool, bool)> {
        let p = self.inner.singly_graded_profile().map_err(err)?;
        Ok((p.degree_sequence, p.is_pure, p.is_linear))
    }

    fn __eq__(&self, other: &Complex) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Complex(n={}, rank={})", self.inner.n(), self.inner.total_rank())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pymodule]
fn sqtriplet_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(solve_betti, m)?)?;
    m.add_function(wrap_pyfunction!(is_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(transition_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(herzog_kuhl, m)?)?;
    m.add_function(wrap_pyfunction!(construction_betti, m)?)?;
    m.add_class::<Complex>()?;
    Ok(())
}
