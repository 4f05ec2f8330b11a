//! Python bindings for the h-fold sumset library.
//!
//! The module exposes the normalized-set type plus the main operations:
//! representation counts, threshold sumsets, fringe structure with verified
//! h-ranges, generalized Frobenius numbers, duality, lemma sweeps, witness
//! construction, and seeded corpus sampling. Library errors are raised as
//! `ValueError` with the library's message text.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hfold::{CountMode, FringeReport, NormalizationRecord, NormalizedSet};

fn verr(e: hfold::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A set `{0 = a_0 < a_1 < ... < a_k}` with gcd 1.
#[pyclass(frozen, name = "NormalizedSet", skip_from_py_object)]
#[derive(Clone)]
struct PySet {
    inner: NormalizedSet,
}

#[pymethods]
impl PySet {
    /// Construct from a strictly increasing list starting at 0 with gcd 1.
    #[new]
    fn new(elements: Vec<i64>) -> PyResult<Self> {
        NormalizedSet::new(elements)
            .map(|inner| Self { inner })
            .map_err(verr)
    }

    fn elements(&self) -> Vec<i64> {
        self.inner.elements().to_vec()
    }

    /// Number of nonzero elements.
    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn a_max(&self) -> i64 {
        self.inner.a_max()
    }

    /// The dual set `A* = a_max - A`.
    fn dual(&self) -> Self {
        Self { inner: hfold::dual_set(&self.inner) }
    }

    fn __repr__(&self) -> String {
        format!("NormalizedSet({:?})", self.inner.elements())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.elements().len()
    }
}

/// The affine map `B = offset + scale * A` relating a raw input set to its
/// normalized form.
#[pyclass(frozen, name = "Normalization")]
struct PyNormalization {
    record: NormalizationRecord,
}

#[pymethods]
impl PyNormalization {
    #[getter]
    fn set(&self) -> PySet {
        PySet { inner: self.record.normalized().clone() }
    }

    #[getter]
    fn offset(&self) -> i64 {
        self.record.offset()
    }

    #[getter]
    fn scale(&self) -> i64 {
        self.record.scale()
    }

    fn is_identity(&self) -> bool {
        self.record.is_identity()
    }

    /// Map sums of the normalized set at fold `h` back to the raw set's
    /// coordinate space: `n -> h * offset + scale * n`.
    fn denormalize(&self, h: u32, values: Vec<i64>) -> PyResult<Vec<i64>> {
        hfold::denormalize_sumset(&self.record, h, &values).map_err(verr)
    }

    fn __repr__(&self) -> String {
        format!(
            "Normalization(set={:?}, offset={}, scale={})",
            self.record.normalized().elements(),
            self.record.offset(),
            self.record.scale(),
        )
    }
}

/// Normalize a strictly increasing list: translate the minimum to 0 and
/// divide by the gcd of the gaps.
#[pyfunction]
fn normalize(elements: Vec<i64>) -> PyResult<PyNormalization> {
    let raw = hfold::RawSet::new(elements).map_err(verr)?;
    let record = hfold::normalize(&raw).map_err(verr)?;
    Ok(PyNormalization { record })
}

/// Representation counts `r_{A,h}(n)` for `n` in `[0, h * a_max]`.
/// Exact arbitrary-precision counts when `cap` is None, saturating counts
/// otherwise.
#[pyfunction]
#[pyo3(signature = (set, h, cap=None))]
fn rep_counts(py: Python<'_>, set: &PySet, h: u32, cap: Option<u32>) -> PyResult<Py<PyAny>> {
    let mode = match cap {
        None => CountMode::Exact,
        Some(c) => CountMode::Capped(c),
    };
    let table = hfold::rep_count_table(&set.inner, h, mode).map_err(verr)?;
    match mode {
        CountMode::Exact => {
            let counts: Vec<BigUint> = table.exact_counts().expect("exact mode").to_vec();
            Ok(counts.into_pyobject(py)?.into_any().unbind())
        }
        CountMode::Capped(_) => {
            let (_, cells) = table.capped_counts().expect("capped mode");
            Ok(cells.to_vec().into_pyobject(py)?.into_any().unbind())
        }
    }
}

/// Exhaustive-enumeration ground truth for `r_{A,h}`; refuses when the
/// number of multisets exceeds the enumeration budget.
#[pyfunction]
fn rep_count_oracle(set: &PySet, h: u32) -> PyResult<Vec<BigUint>> {
    let table = hfold::rep_count_oracle(&set.inner, h).map_err(verr)?;
    Ok(table.exact_counts().expect("oracle is exact").to_vec())
}

/// Members of the threshold sumset `(hA)^(t) = { n : r_{A,h}(n) >= t }`.
#[pyfunction]
#[pyo3(signature = (set, h, t=1))]
fn threshold_sumset(set: &PySet, h: u32, t: u32) -> PyResult<Vec<i64>> {
    Ok(hfold::threshold_sumset(&set.inner, h, t).map_err(verr)?.to_vec())
}

/// `(h_t, c'_t, d'_t)`: the fold threshold and fringe-width bounds for `t`.
#[pyfunction]
#[pyo3(signature = (set, t=1))]
fn threshold_bounds(set: &PySet, t: u32) -> PyResult<(i64, i64, i64)> {
    let b = hfold::threshold_bounds(&set.inner, t).map_err(verr)?;
    Ok((b.h_t(), b.c_prime_t(), b.d_prime_t()))
}

fn fold_onset(set: &NormalizedSet, t: u32) -> PyResult<u32> {
    if set.k() == 1 {
        return Ok(1);
    }
    let h_t = hfold::threshold_bounds(set, t).map_err(verr)?.h_t();
    u32::try_from(h_t).map_err(|_| PyValueError::new_err(format!("h_t = {h_t} exceeds u32")))
}

/// Verify the fringe decomposition for every fold in `[h_lo, h_hi]` and
/// return the verified report as a JSON string. Raises on any mismatch.
#[pyfunction]
fn verify_structure(set: &PySet, t: u32, h_lo: u32, h_hi: u32) -> PyResult<String> {
    let cert = hfold::verify_structure(&set.inner, t, h_lo, h_hi).map_err(verr)?;
    let report = FringeReport::from_certificate(&cert);
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Convenience wrapper: verify over `[h_t, h_t + window]` and return the
/// report as a JSON string.
#[pyfunction]
#[pyo3(signature = (set, t=1, window=2))]
fn structure_json(set: &PySet, t: u32, window: u32) -> PyResult<String> {
    let h_t = fold_onset(&set.inner, t)?;
    verify_structure(set, t, h_t, h_t + window)
}

/// Smallest fold at which the decomposition empirically matches, searching
/// down from `h_t` after confirming agreement on `[h_t, h_t + beyond]`.
#[pyfunction]
#[pyo3(signature = (set, t=1, beyond=8))]
fn empirical_onset(set: &PySet, t: u32, beyond: u32) -> PyResult<u32> {
    hfold::empirical_onset(&set.inner, t, beyond).map_err(verr)
}

/// The generalized Frobenius number `FN_t(A) = c_t - 1`.
#[pyfunction]
#[pyo3(signature = (set, t=1))]
fn frobenius_number(set: &PySet, t: u32) -> PyResult<i64> {
    hfold::frobenius_number(&set.inner, t).map_err(verr)
}

/// `[FN_1(A), ..., FN_t_max(A)]`.
#[pyfunction]
fn frobenius_sequence(set: &PySet, t_max: u32) -> PyResult<Vec<i64>> {
    hfold::frobenius_sequence(&set.inner, t_max).map_err(verr)
}

/// `t` distinct representations of `n` as a sum of `h` elements, one vector
/// of multiplicities over the nonzero elements per representation (unused
/// parts are zeros).
#[pyfunction]
#[pyo3(signature = (set, n, h, t=1))]
fn witnesses(set: &PySet, n: i64, h: u32, t: u32) -> PyResult<Vec<Vec<i64>>> {
    let ws = hfold::construct_witnesses(&set.inner, t, h, n).map_err(verr)?;
    Ok(ws.vectors().to_vec())
}

/// True when `(hA)^(t)` contains `[c'_t, h * a_max - d'_t]` for every
/// `h <= h_max`.
#[pyfunction]
fn check_interval_lemma(set: &PySet, t: u32, h_max: u32) -> PyResult<bool> {
    hfold::check_interval_lemma_sweep(&set.inner, t, h_max).map_err(verr)
}

/// True when `(hA)^(t) + a_max` is contained in `((h+1)A)^(t)` for every
/// `h < h_max`.
#[pyfunction]
fn check_inclusion_lemma(set: &PySet, t: u32, h_max: u32) -> PyResult<bool> {
    hfold::check_inclusion_lemma_sweep(&set.inner, t, h_max).map_err(verr)
}

/// True when `(hA*)^(t)` is the reflection of `(hA)^(t)` for every
/// `h <= h_max`.
#[pyfunction]
fn check_duality(set: &PySet, t: u32, h_max: u32) -> PyResult<bool> {
    hfold::check_duality_sweep(&set.inner, t, h_max).map_err(verr)
}

/// Deterministically sample `count` distinct normalized sets with at most
/// `k_max` nonzero elements, all bounded by `a_max`.
#[pyfunction]
#[pyo3(signature = (seed, count, k_max=4, a_max=10))]
fn sample_sets(seed: u64, count: usize, k_max: usize, a_max: i64) -> PyResult<Vec<PySet>> {
    let sets = hfold::sample_sets(seed, count, k_max, a_max).map_err(verr)?;
    Ok(sets.into_iter().map(|inner| PySet { inner }).collect())
}

#[pymodule]
fn hfold_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySet>()?;
    m.add_class::<PyNormalization>()?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(rep_counts, m)?)?;
    m.add_function(wrap_pyfunction!(rep_count_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_sumset, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(verify_structure, m)?)?;
    m.add_function(wrap_pyfunction!(structure_json, m)?)?;
    m.add_function(wrap_pyfunction!(empirical_onset, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_number, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(check_interval_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(check_inclusion_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(check_duality, m)?)?;
    m.add_function(wrap_pyfunction!(sample_sets, m)?)?;
    Ok(())
}
