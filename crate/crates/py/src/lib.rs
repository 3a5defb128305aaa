//! Python bindings for the `implication-tables` crate.

use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyIndexError, PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::implication_tables::monoid::{self, SuiteConfig, Tamper};
use ::implication_tables::{self as core, Bracketing, BruteBudget, Semantics, SeriesName, TruthValue};

fn to_py(e: core::Error) -> PyErr {
    match e {
        core::Error::Domain(_) | core::Error::Unsupported(_) => PyValueError::new_err(e.to_string()),
        core::Error::Range { .. } => PyIndexError::new_err(e.to_string()),
        core::Error::Budget { .. } => PyMemoryError::new_err(e.to_string()),
        core::Error::Consistency(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn semantics(radix: usize) -> PyResult<Semantics> {
    Semantics::from_radix(radix).map_err(to_py)
}

fn value(code: u8) -> PyResult<TruthValue> {
    TruthValue::from_code(code).map_err(to_py)
}

/// One bracketing of `p1 => ... => pn`.
#[pyclass(name = "Bracketing", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBracketing {
    inner: Bracketing,
}

#[pymethods]
impl PyBracketing {
    #[getter]
    fn leaf_count(&self) -> usize {
        self.inner.leaf_count()
    }

    /// Value under a valuation given as truth-value codes.
    #[pyo3(signature = (valuation, radix = 3))]
    fn evaluate(&self, valuation: Vec<u8>, radix: usize) -> PyResult<u8> {
        let v = valuation.into_iter().map(value).collect::<PyResult<Vec<_>>>()?;
        core::evaluate(&self.inner, &core::Valuation(v), semantics(radix)?)
            .map(TruthValue::code)
            .map_err(to_py)
    }

    /// `(t, f, u)` over all rows of this formula's table.
    #[pyo3(signature = (radix = 3))]
    fn counts(&self, radix: usize) -> PyResult<(BigUint, BigUint, BigUint)> {
        Ok(core::tree_counts(&self.inner, semantics(radix)?).tfu())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Bracketing('{}')", self.inner)
    }
}

/// Truncated power series with exact coefficients.
#[pyclass(name = "PowerSeries", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPowerSeries {
    inner: core::PowerSeries,
}

#[pymethods]
impl PyPowerSeries {
    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// `[x^n]` as `(numerator, denominator)`.
    fn coefficient(&self, n: usize) -> PyResult<(BigInt, BigInt)> {
        let c = self.inner.coefficient(n).map_err(to_py)?;
        Ok((c.numer().clone(), c.denom().clone()))
    }

    /// All coefficients as integers; raises if any is not an integer.
    fn integers(&self) -> PyResult<Vec<BigInt>> {
        self.inner
            .to_integers()
            .ok_or_else(|| PyValueError::new_err("series has non-integer coefficients"))
    }

    fn __mul__(&self, other: &PyPowerSeries) -> PyPowerSeries {
        PyPowerSeries {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __add__(&self, other: &PyPowerSeries) -> PyPowerSeries {
        PyPowerSeries {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &PyPowerSeries) -> PyPowerSeries {
        PyPowerSeries {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __eq__(&self, other: &PyPowerSeries) -> bool {
        self.inner == other.inner
    }

    fn sqrt(&self) -> PyResult<PyPowerSeries> {
        Ok(PyPowerSeries {
            inner: self.inner.sqrt().map_err(to_py)?,
        })
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyfunction]
#[pyo3(signature = (a, b, radix = 3))]
fn implies(a: u8, b: u8, radix: usize) -> PyResult<u8> {
    core::implies(value(a)?, value(b)?, semantics(radix)?)
        .map(TruthValue::code)
        .map_err(to_py)
}

#[pyfunction]
fn enumerate_bracketings(n: usize) -> PyResult<Vec<PyBracketing>> {
    Ok(core::enumerate_bracketings(n)
        .map_err(to_py)?
        .into_iter()
        .map(|inner| PyBracketing { inner })
        .collect())
}

#[pyfunction]
fn catalan(n: usize) -> BigUint {
    core::catalan(n)
}

/// `(t, f, u, g)` by enumerating every table entry.
#[pyfunction]
#[pyo3(signature = (n, radix = 3, budget = None))]
fn brute_counts(
    n: usize,
    radix: usize,
    budget: Option<usize>,
) -> PyResult<(BigUint, BigUint, BigUint, BigUint)> {
    let budget = budget.map(BruteBudget::uniform).unwrap_or_default();
    let c = core::brute_counts(n, semantics(radix)?, &budget).map_err(to_py)?;
    Ok((c.t, c.f, c.u, c.g))
}

/// `(t, f, u, g)` for `n = 1..=n_max` from the root-split recurrence.
#[pyfunction]
#[pyo3(signature = (n_max, radix = 3))]
fn recurrence_counts(
    n_max: usize,
    radix: usize,
) -> PyResult<Vec<(BigUint, BigUint, BigUint, BigUint)>> {
    let table = core::recurrence::by_recurrence(semantics(radix)?, n_max).map_err(to_py)?;
    Ok(table.rows.into_iter().map(|c| (c.t, c.f, c.u, c.g)).collect())
}

/// Entry counts keyed by (left value, right value) of the root split.
#[pyfunction]
#[pyo3(signature = (n, radix = 2))]
fn color_class_counts(n: usize, radix: usize) -> PyResult<Vec<((u8, u8), BigUint)>> {
    let classes = core::color_class_counts(n, semantics(radix)?, &BruteBudget::default())
        .map_err(to_py)?;
    Ok(classes
        .into_iter()
        .map(|((a, b), c)| ((a.code(), b.code()), c))
        .collect())
}

/// Closed-form generating function `name` in {u, f, t, g, s, r, g2, i}.
#[pyfunction]
fn closed_form(name: &str, order: usize) -> PyResult<PyPowerSeries> {
    let name = SeriesName::parse(name).map_err(to_py)?;
    Ok(PyPowerSeries {
        inner: core::closed_form(name, order).map_err(to_py)?,
    })
}

/// Series of a monoid element such as `"T^2*F"` or `"R S"`.
#[pyfunction]
#[pyo3(signature = (element, order, radix = 3))]
fn realize(element: &str, order: usize, radix: usize) -> PyResult<PyPowerSeries> {
    let e = core::MonoidElement::parse(semantics(radix)?, element).map_err(to_py)?;
    Ok(PyPowerSeries {
        inner: monoid::realize(&e, order).map_err(to_py)?,
    })
}

/// Runs every monoid check. Returns `(claim, verified, witness)` triples.
#[pyfunction]
#[pyo3(signature = (order = 40, identity_order = 50, k_max = 6, seed = None, tamper = None))]
fn monoid_suite(
    py: Python<'_>,
    order: usize,
    identity_order: usize,
    k_max: u32,
    seed: Option<u64>,
    tamper: Option<&str>,
) -> PyResult<Vec<(String, bool, Option<String>)>> {
    let mut cfg = SuiteConfig {
        order,
        identity_order,
        k_max,
        ..SuiteConfig::default()
    };
    if let Some(seed) = seed {
        cfg.sample.seed = seed;
    }
    cfg.tamper = tamper.map(Tamper::parse).transpose().map_err(to_py)?;
    let reports = py.detach(|| monoid::run_suite(&cfg)).map_err(to_py)?;
    Ok(reports
        .into_iter()
        .map(|r| {
            let witness = r.witness().map(|w| w.to_string());
            (r.claim, witness.is_none(), witness)
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "implication_tables")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBracketing>()?;
    m.add_class::<PyPowerSeries>()?;
    m.add_function(wrap_pyfunction!(implies, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bracketings, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(brute_counts, m)?)?;
    m.add_function(wrap_pyfunction!(recurrence_counts, m)?)?;
    m.add_function(wrap_pyfunction!(color_class_counts, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(monoid_suite, m)?)?;
    Ok(())
}
