//! Python bindings for `lattice-bounce`.

use std::collections::BTreeMap;

use lattice_bounce::identities::{self, Suite, VerifyConfig};
use lattice_bounce::oracle::{self, Budget};
use lattice_bounce::{beta_one, bounce_gf, catalog, Error, Restriction, SeriesParams, Slope, StepWord};
use num_bigint::BigInt;
use pyo3::exceptions::{PyIndexError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn to_py(err: Error) -> PyErr {
    match err {
        Error::NonUnitConstantTerm(_) | Error::ValuationMismatch { .. } => {
            PyZeroDivisionError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn slope(alpha: u32, beta: u32) -> PyResult<Slope> {
    Slope::new(alpha, beta).map_err(to_py)
}

fn restriction(name: Option<&str>) -> PyResult<Option<Restriction>> {
    name.map(|n| n.parse().map_err(PyValueError::new_err)).transpose()
}

/// Truncated power series with integer coefficients.
#[pyclass(name = "Series", module = "latbounce", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PySeries(lattice_bounce::Series);

#[pymethods]
impl PySeries {
    /// Coefficients of x^0, x^1, ...; `order` defaults to len(coeffs) - 1.
    #[new]
    #[pyo3(signature = (coeffs, order=None))]
    fn new(coeffs: Vec<BigInt>, order: Option<usize>) -> Self {
        let order = order.unwrap_or(coeffs.len().saturating_sub(1));
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigInt::from(0));
        PySeries(lattice_bounce::Series::new(coeffs))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    fn truncate(&self, order: usize) -> PyResult<Self> {
        if order > self.0.order() {
            return Err(PyValueError::new_err(format!(
                "cannot extend a series of order {} to {order}",
                self.0.order()
            )));
        }
        Ok(PySeries(self.0.truncate(order)))
    }

    fn reciprocal(&self) -> PyResult<Self> {
        self.0.reciprocal().map(PySeries).map_err(to_py)
    }

    /// Quotient that first cancels the common power of x.
    fn div_cancel(&self, other: &Self) -> PyResult<Self> {
        self.0.div_cancel(&other.0).map(PySeries).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.order() + 1
    }

    fn __getitem__(&self, k: usize) -> PyResult<BigInt> {
        self.0
            .get(k)
            .cloned()
            .ok_or_else(|| PyIndexError::new_err(format!("x^{k} is beyond order {}", self.0.order())))
    }

    fn __add__(&self, other: &Self) -> Self {
        PySeries(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PySeries(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PySeries(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PySeries(-&self.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.div(&other.0).map(PySeries).map_err(to_py)
    }

    fn __pow__(&self, exp: u32, _modulo: Option<u32>) -> Self {
        PySeries(self.0.pow(exp))
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

/// Bounce statistics of a single path.
#[pyclass(name = "BounceProfile", module = "latbounce", frozen, get_all)]
pub struct PyBounceProfile {
    left: u32,
    right: u32,
    horizontal_crosses: Option<u32>,
    first: char,
    last: char,
    bounce_free: bool,
}

#[pymethods]
impl PyBounceProfile {
    #[getter]
    fn restriction(&self) -> String {
        format!("{}{}", self.first, self.last).to_ascii_lowercase()
    }

    fn __repr__(&self) -> String {
        format!(
            "BounceProfile(left={}, right={}, horizontal_crosses={:?}, first='{}', last='{}')",
            self.left, self.right, self.horizontal_crosses, self.first, self.last
        )
    }
}

/// Series B_{l,r} for 0 <= l <= max_left, 0 <= r <= max_right.
#[pyclass(name = "BounceTable", module = "latbounce", frozen)]
pub struct PyBounceTable(lattice_bounce::BounceTable);

#[pymethods]
impl PyBounceTable {
    #[getter]
    fn max_left(&self) -> u32 {
        self.0.max_left()
    }

    #[getter]
    fn max_right(&self) -> u32 {
        self.0.max_right()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn entry(&self, left: u32, right: u32) -> PyResult<PySeries> {
        self.check(left, right)?;
        Ok(PySeries(self.0.entry(left, right).clone()))
    }

    fn count(&self, left: u32, right: u32, k: usize) -> PyResult<BigInt> {
        self.check(left, right)?;
        if k > self.0.order() {
            return Err(PyIndexError::new_err(format!("k = {k} is beyond order {}", self.0.order())));
        }
        Ok(self.0.count(left, right, k).clone())
    }

    /// Sum over all cells; equals the all-paths series when the bounds are large enough.
    fn total(&self) -> PySeries {
        PySeries(self.0.sum())
    }

    /// `(l, r, Series)` triples, l ascending then r ascending.
    fn entries(&self) -> Vec<(u32, u32, PySeries)> {
        self.0
            .entries()
            .map(|(l, r, s)| (l, r, PySeries(s.clone())))
            .collect()
    }
}

impl PyBounceTable {
    fn check(&self, left: u32, right: u32) -> PyResult<()> {
        if left > self.0.max_left() || right > self.0.max_right() {
            return Err(PyIndexError::new_err(format!(
                "({left}, {right}) is outside the table ({}, {})",
                self.0.max_left(),
                self.0.max_right()
            )));
        }
        Ok(())
    }
}

/// Any named series; see `series_names()`.
#[pyfunction]
#[pyo3(signature = (name, alpha, beta=1, order=10, restriction=None, left=0, right=0, bounces=0))]
#[allow(clippy::too_many_arguments)]
fn series(
    name: &str,
    alpha: u32,
    beta: u32,
    order: usize,
    restriction: Option<&str>,
    left: u32,
    right: u32,
    bounces: u32,
) -> PyResult<PySeries> {
    let params = SeriesParams {
        restriction: self::restriction(restriction)?,
        left,
        right,
        bounces,
    };
    catalog::series_by_name(name, slope(alpha, beta)?, order, params)
        .map(PySeries)
        .map_err(to_py)
}

#[pyfunction]
fn series_names() -> Vec<(&'static str, &'static str)> {
    catalog::CATALOGUE.to_vec()
}

#[pyfunction]
#[pyo3(signature = (alpha, beta, max_left, max_right, order, restriction="all"))]
fn bounce_table(
    alpha: u32,
    beta: u32,
    max_left: u32,
    max_right: u32,
    order: usize,
    restriction: &str,
) -> PyResult<PyBounceTable> {
    let r = self::restriction(Some(restriction))?.unwrap_or(Restriction::All);
    let s = slope(alpha, beta)?;
    Ok(PyBounceTable(bounce_gf::bounce_table(s, r, max_left, max_right, order)))
}

/// Classify a path written as a string of E and N steps.
#[pyfunction]
#[pyo3(signature = (path, alpha, beta=1))]
fn classify(path: &str, alpha: u32, beta: u32) -> PyResult<PyBounceProfile> {
    let word: StepWord = path.parse().map_err(to_py)?;
    let p = oracle::classify(&word, slope(alpha, beta)?).map_err(to_py)?;
    Ok(PyBounceProfile {
        left: p.left,
        right: p.right,
        horizontal_crosses: p.horizontal_crosses,
        first: p.first.as_char(),
        last: p.last.as_char(),
        bounce_free: p.bounce_free,
    })
}

/// Brute-force counts {(l, r): paths} for one k.
#[pyfunction]
#[pyo3(signature = (alpha, beta, k, restriction="all"))]
fn count_table(py: Python<'_>, alpha: u32, beta: u32, k: u32, restriction: &str) -> PyResult<BTreeMap<(u32, u32), u64>> {
    let r = self::restriction(Some(restriction))?.unwrap_or(Restriction::All);
    let s = slope(alpha, beta)?;
    let table = py
        .detach(|| oracle::count_table(s, k, r))
        .map_err(to_py)?;
    Ok(table.cells().collect())
}

/// Standard Young tableaux of shape (n + b, n - b - 1), by the hook length formula.
#[pyfunction]
fn syt_two_row_count(n: u32, b: u32) -> PyResult<BigInt> {
    beta_one::syt_two_row_count(n, b).map_err(to_py)
}

/// Standard Young tableaux of a two-row shape, by backtracking.
#[pyfunction]
fn enumerate_syt(first_row: u32, second_row: u32) -> PyResult<u64> {
    let shape = beta_one::TwoRowShape::new(first_row, second_row).map_err(to_py)?;
    let budget = Budget {
        max_syt_cells: 24,
        ..Budget::default()
    };
    oracle::enumerate_syt_with(shape, &budget).map_err(to_py)
}

/// Run one verify suite; returns (passed, number of checks, first failure or None).
#[pyfunction]
#[pyo3(signature = (suite, order=None, max_steps=None, n_max=None))]
fn verify(
    py: Python<'_>,
    suite: &str,
    order: Option<usize>,
    max_steps: Option<u32>,
    n_max: Option<u32>,
) -> PyResult<(bool, usize, Option<String>)> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let mut config = VerifyConfig::default();
    if let Some(v) = order {
        config.order = v;
    }
    if let Some(v) = max_steps {
        config.max_steps = v;
    }
    if let Some(v) = n_max {
        config.n_max = v;
    }
    let report = py
        .detach(|| identities::run_suite(suite, &config))
        .map_err(to_py)?;
    let failure = report.first_failure().map(|c| match &c.mismatch {
        Some(m) => format!("{}: {m}", c.label),
        None => format!("{}: {}", c.label, c.error.as_deref().unwrap_or("failed")),
    });
    Ok((report.passed(), report.checks.len(), failure))
}

#[pymodule]
pub fn latbounce(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyBounceProfile>()?;
    m.add_class::<PyBounceTable>()?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(series_names, m)?)?;
    m.add_function(wrap_pyfunction!(bounce_table, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(count_table, m)?)?;
    m.add_function(wrap_pyfunction!(syt_two_row_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_syt, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
