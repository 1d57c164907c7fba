//! Python bindings: the homology engine, path and tableau counts, and
//! the basis/matrix exports, driven in-process.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pomega::pcomplex::{euler_characteristic, slash_euler_from_report, HomologyReport, PComplex};
use pomega::specht;
use pomega::subsets::{boundary_matrix, KSubset};
use pomega::tableaux::{
    self, count_paths_formula, dim_h0_formula, dim_simple_erdmann, enumerate_paths, is_p_standard,
    standard_tableaux, PathBound,
};
use pomega::verify::{run_suite, SuiteParams, DEFAULT_SEED};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bound(x: Option<usize>) -> PathBound {
    match x {
        Some(v) => PathBound::Finite(v),
        None => PathBound::Unbounded,
    }
}

/// The p-complex of k-subsets of [n] over GF(p) with its homology table.
#[pyclass]
struct OmegaComplex {
    complex: PComplex,
    report: HomologyReport,
}

#[pymethods]
impl OmegaComplex {
    #[new]
    fn new(n: usize, p: u64) -> PyResult<Self> {
        let complex = PComplex::omega(n, p).map_err(err)?;
        let report = complex.full_report();
        Ok(Self { complex, report })
    }

    #[getter]
    fn n(&self) -> usize {
        self.report.n
    }

    #[getter]
    fn p(&self) -> u64 {
        self.report.p
    }

    fn slash_dim(&self, k: usize, a: usize) -> usize {
        self.report.slash_dim(k, a)
    }

    fn backslash_dim(&self, k: usize, a: usize) -> usize {
        self.report.backslash_dim(k, a)
    }

    fn p_homology_dim(&self, k: usize, r: usize) -> usize {
        self.report.p_homology_dim(k, r)
    }

    fn total_slash_at(&self, k: usize) -> usize {
        self.report.total_slash_at(k)
    }

    fn slash_shift_rank(&self, k: isize, a: usize) -> usize {
        self.complex.slash_shift_rank(k, a)
    }

    /// Whether the two cyclotomic dimension counts agree.
    fn euler_agrees(&self) -> bool {
        euler_characteristic(&self.complex) == slash_euler_from_report(&self.report)
    }

    fn report_json(&self) -> String {
        self.report.to_json()
    }

    fn __repr__(&self) -> String {
        format!("OmegaComplex(n={}, p={})", self.report.n, self.report.p)
    }
}

/// Count of (s,t)-bounded open paths by the closed form.
#[pyfunction]
fn count_paths(n: usize, k: usize, s: usize, t: usize) -> u64 {
    count_paths_formula(n, k, s, t)
}

/// Bounded paths as R/U strings; None means an unbounded side.
#[pyfunction]
#[pyo3(signature = (n, k, s=None, t=None))]
fn path_strings(n: usize, k: usize, s: Option<usize>, t: Option<usize>) -> Vec<String> {
    enumerate_paths(n, k, bound(s), bound(t))
        .iter()
        .map(|p| p.to_string())
        .collect()
}

/// Slash-0 dimension by the alternating binomial sum (0 off-window).
#[pyfunction]
fn dim_h0(n: usize, k: usize, p: u64) -> u64 {
    dim_h0_formula(n, k, p)
}

/// Two-row simple-module dimension; raises off-window.
#[pyfunction]
fn dim_simple(n: usize, k: usize, p: u64) -> PyResult<u64> {
    dim_simple_erdmann(n, k, p).map_err(err)
}

/// The p-standard tableaux of shape (n-k, k) as (row1, row2) pairs.
#[pyfunction]
fn p_standard_tableaux(n: usize, k: usize, p: u64) -> PyResult<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut out = Vec::new();
    for t in standard_tableaux(n, k) {
        if is_p_standard(&t, p).map_err(err)? {
            out.push((t.row1().to_vec(), t.row2().to_vec()));
        }
    }
    Ok(out)
}

/// Density vector of a subset of [n].
#[pyfunction]
fn density(n: usize, elements: Vec<usize>) -> PyResult<Vec<usize>> {
    let omega = KSubset::new(n, &elements).map_err(err)?;
    Ok(tableaux::density(&omega).values().to_vec())
}

#[pyfunction]
fn threshold(n: usize, elements: Vec<usize>) -> PyResult<usize> {
    let omega = KSubset::new(n, &elements).map_err(err)?;
    Ok(tableaux::threshold(&omega))
}

/// JSON export of the p-standard quotient basis at a window position.
#[pyfunction]
fn h0_basis_json(n: usize, k: usize, p: u64) -> PyResult<String> {
    Ok(specht::h0_basis(n, k, p).map_err(err)?.to_json())
}

#[pyfunction]
fn radical_dim(n: usize, k: usize, p: u64) -> PyResult<usize> {
    specht::radical_dim(n, k, p).map_err(err)
}

/// Boundary matrix in the exchange format.
#[pyfunction]
fn boundary_matrix_json(n: usize, k: usize, p: u64) -> PyResult<String> {
    let m = boundary_matrix(n, k, p).map_err(err)?;
    Ok(serde_json::to_string(&m).expect("matrix serialises"))
}

/// Rewrite a polytabloid combination over the standard-polytabloid
/// basis; terms are ((row1, row2), coefficient) pairs.
#[pyfunction]
fn straighten(
    n: usize,
    k: usize,
    p: u64,
    terms: Vec<((Vec<usize>, Vec<usize>), u64)>,
) -> PyResult<Vec<((Vec<usize>, Vec<usize>), u64)>> {
    let parsed: Vec<_> = terms
        .into_iter()
        .map(|((r1, r2), c)| (tableaux::TwoRowTableau::new(n, r1, r2), c))
        .collect();
    let out = specht::straighten(n, k, p, &parsed).map_err(err)?;
    Ok(out
        .into_iter()
        .map(|(t, c)| ((t.row1().to_vec(), t.row2().to_vec()), c))
        .collect())
}

/// Run one verification suite; returns (pass, cases, witness).
#[pyfunction]
#[pyo3(signature = (name, n_max=8, seed=DEFAULT_SEED, samples=200, primes=None))]
fn verify_suite(
    name: &str,
    n_max: usize,
    seed: u64,
    samples: u64,
    primes: Option<Vec<u64>>,
) -> PyResult<(bool, u64, Option<String>)> {
    let params = SuiteParams {
        n_max,
        primes: primes.unwrap_or_else(|| vec![3, 5, 7]),
        seed,
        samples,
    };
    let outcome = run_suite(name, &params).map_err(err)?;
    Ok((outcome.pass, outcome.cases, outcome.witness))
}

#[pymodule]
fn pomega_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<OmegaComplex>()?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(path_strings, m)?)?;
    m.add_function(wrap_pyfunction!(dim_h0, m)?)?;
    m.add_function(wrap_pyfunction!(dim_simple, m)?)?;
    m.add_function(wrap_pyfunction!(p_standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(density, m)?)?;
    m.add_function(wrap_pyfunction!(threshold, m)?)?;
    m.add_function(wrap_pyfunction!(h0_basis_json, m)?)?;
    m.add_function(wrap_pyfunction!(radical_dim, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_matrix_json, m)?)?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
