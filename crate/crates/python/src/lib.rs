use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use infonorm_core::special::{self, BivalentOutcome};
use infonorm_core::{Error, ExtendedInformation, NormalizationProfile, RenyiMode};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Singularity(_) => PyArithmeticError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn ext(p: Vec<f64>, s: f64) -> PyResult<ExtendedInformation> {
    ExtendedInformation::from_slice(&p, s).map_err(to_py)
}

#[pyclass(name = "NormalizationProfile", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyProfile {
    delta: f64,
    under: f64,
    over: f64,
    h: f64,
    theta: f64,
    alpha: f64,
    beta: f64,
}

impl From<NormalizationProfile> for PyProfile {
    fn from(p: NormalizationProfile) -> Self {
        Self {
            delta: p.delta,
            under: p.under,
            over: p.over,
            h: p.h,
            theta: p.theta,
            alpha: p.alpha,
            beta: p.beta,
        }
    }
}

#[pymethods]
impl PyProfile {
    fn __repr__(&self) -> String {
        format!(
            "NormalizationProfile(delta={}, under={}, over={}, h={}, theta={}, alpha={}, beta={})",
            self.delta, self.under, self.over, self.h, self.theta, self.alpha, self.beta
        )
    }
}

#[pyclass(name = "EntropyReport", frozen, get_all)]
struct PyEntropyReport {
    measure: String,
    order: Option<f64>,
    value: f64,
    profile: PyProfile,
    normalized: Vec<f64>,
}

impl From<infonorm_core::EntropyReport> for PyEntropyReport {
    fn from(r: infonorm_core::EntropyReport) -> Self {
        Self {
            measure: r.measure.name().to_owned(),
            order: r.order(),
            value: r.value,
            profile: r.profile.into(),
            normalized: r.normalized.into_vec(),
        }
    }
}

#[pymethods]
impl PyEntropyReport {
    fn __repr__(&self) -> String {
        format!("EntropyReport(measure={:?}, value={})", self.measure, self.value)
    }
}

#[pyclass(name = "BivalentResult", frozen, get_all)]
struct PyBivalent {
    definedness: f64,
    incompleteness: f64,
    h: f64,
    truth: f64,
    falsity: f64,
    entropy: f64,
}

impl From<BivalentOutcome> for PyBivalent {
    fn from(o: BivalentOutcome) -> Self {
        Self {
            definedness: o.definedness,
            incompleteness: o.incompleteness,
            h: o.h,
            truth: o.pair.truth,
            falsity: o.pair.falsity,
            entropy: o.entropy,
        }
    }
}

#[pyclass(name = "PartitionResult", frozen, get_all)]
struct PyPartition {
    top: (f64, f64),
    incompleteness: f64,
    truth: f64,
    falsity: f64,
    entropy: f64,
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn profile(p: Vec<f64>, s: f64) -> PyResult<PyProfile> {
    Ok(infonorm_core::profile(&ext(p, s)?).into())
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn translate(p: Vec<f64>, s: f64) -> PyResult<Vec<f64>> {
    Ok(infonorm_core::translate(&ext(p, s)?))
}

#[pyfunction]
fn homothety(q: Vec<f64>) -> PyResult<Vec<f64>> {
    infonorm_core::homothety(&q).map(|u| u.into_vec()).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn normalize(p: Vec<f64>, s: f64) -> PyResult<Vec<f64>> {
    Ok(infonorm_core::normalize(&ext(p, s)?).into_vec())
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn normalize_approx(p: Vec<f64>, s: f64) -> PyResult<Vec<f64>> {
    Ok(infonorm_core::normalize_approx(&ext(p, s)?).into_vec())
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn shannon(p: Vec<f64>, s: f64) -> PyResult<PyEntropyReport> {
    Ok(infonorm_core::shannon(&ext(p, s)?).into())
}

#[pyfunction]
#[pyo3(signature = (p, s = 0.0))]
fn onicescu(p: Vec<f64>, s: f64) -> PyResult<PyEntropyReport> {
    Ok(infonorm_core::onicescu(&ext(p, s)?).into())
}

#[pyfunction]
#[pyo3(signature = (p, alpha, s = 0.0))]
fn tsallis(p: Vec<f64>, alpha: f64, s: f64) -> PyResult<PyEntropyReport> {
    infonorm_core::tsallis(&ext(p, s)?, alpha)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (p, alpha, s = 0.0, mode = "standard"))]
fn renyi(p: Vec<f64>, alpha: f64, s: f64, mode: &str) -> PyResult<PyEntropyReport> {
    let mode: RenyiMode = mode.parse().map_err(to_py)?;
    infonorm_core::renyi(&ext(p, s)?, alpha, mode)
        .map(Into::into)
        .map_err(to_py)
}

/// Returns the normalized `(T, I, F)` and the three-valued entropy.
#[pyfunction]
fn neutrosophic3(t: f64, i: f64, f: f64) -> PyResult<(Vec<f64>, f64)> {
    let triple = special::NeutrosophicTriple::new(t, i, f).map_err(to_py)?;
    let out = special::neutrosophic3(&triple);
    Ok((out.normalized.into_vec(), out.entropy))
}

#[pyfunction]
fn neutrosophic2(mu: f64, nu: f64, omega: f64) -> PyResult<PyBivalent> {
    let x = special::NeutrosophicBivalentInput::new(mu, nu, omega).map_err(to_py)?;
    Ok(special::neutrosophic2(&x).into())
}

#[pyfunction]
fn bifuzzy(mu: f64, nu: f64) -> PyResult<PyBivalent> {
    let x = special::BifuzzyPair::new(mu, nu).map_err(to_py)?;
    Ok(special::bifuzzy(&x).into())
}

#[pyfunction]
fn intuitionistic(mu: f64, nu: f64) -> PyResult<PyBivalent> {
    let x = special::IntuitionisticPair::new(mu, nu).map_err(to_py)?;
    Ok(special::intuitionistic(&x).into())
}

#[pyfunction]
fn imprecise_fuzzy(mu: f64, sigma: f64) -> PyResult<PyBivalent> {
    let x = special::ImpreciseFuzzyPair::new(mu, sigma).map_err(to_py)?;
    Ok(special::imprecise_fuzzy(&x).into())
}

#[pyfunction]
fn partition_shannon(w: Vec<f64>) -> PyResult<PyPartition> {
    let w = special::FuzzyPartition::new(w).map_err(to_py)?;
    let out = special::partition_shannon(&w);
    Ok(PyPartition {
        top: out.top,
        incompleteness: out.incompleteness,
        truth: out.pair.truth,
        falsity: out.pair.falsity,
        entropy: out.entropy,
    })
}

/// Returns `(E_K, E_E, E_P)`.
#[pyfunction]
fn partition_nonlog(w: Vec<f64>) -> PyResult<(f64, f64, f64)> {
    let w = special::FuzzyPartition::new(w).map_err(to_py)?;
    let e = special::partition_nonlog(&w).map_err(to_py)?;
    Ok((e.gap, e.distance_ratio, e.complement_ratio))
}

#[pymodule]
fn infonorm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyProfile>()?;
    m.add_class::<PyEntropyReport>()?;
    m.add_class::<PyBivalent>()?;
    m.add_class::<PyPartition>()?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(translate, m)?)?;
    m.add_function(wrap_pyfunction!(homothety, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_approx, m)?)?;
    m.add_function(wrap_pyfunction!(shannon, m)?)?;
    m.add_function(wrap_pyfunction!(onicescu, m)?)?;
    m.add_function(wrap_pyfunction!(tsallis, m)?)?;
    m.add_function(wrap_pyfunction!(renyi, m)?)?;
    m.add_function(wrap_pyfunction!(neutrosophic3, m)?)?;
    m.add_function(wrap_pyfunction!(neutrosophic2, m)?)?;
    m.add_function(wrap_pyfunction!(bifuzzy, m)?)?;
    m.add_function(wrap_pyfunction!(intuitionistic, m)?)?;
    m.add_function(wrap_pyfunction!(imprecise_fuzzy, m)?)?;
    m.add_function(wrap_pyfunction!(partition_shannon, m)?)?;
    m.add_function(wrap_pyfunction!(partition_nonlog, m)?)?;
    Ok(())
}
