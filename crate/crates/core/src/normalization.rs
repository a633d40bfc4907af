//! Definedness profile and the translation/homothety normalization.
//!
//! For an input with index of definedness `delta = sum(p) - 1` and
//! imprecision `s`, let `r = sqrt(delta^2 + n s^2)`. The translation shift
//! `theta = (r - delta) / n` keeps the Euclidean distance to every simplex
//! vertex equal to the distance of `(p, s)` to that vertex lifted into
//! `n + 1` dimensions. The shifted vector sums to `1 + r`, so dividing by
//! that sum lands on the simplex.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::{IDENTITY_TOLERANCE, VALIDATION_TOLERANCE};

/// Checks `value` against `[lo, hi]` widened by the validation band and
/// clamps it into the closed interval.
pub(crate) fn clamp_into(what: &'static str, value: f64, lo: f64, hi: f64) -> Result<f64> {
    if !value.is_finite() || value < lo - VALIDATION_TOLERANCE || value > hi + VALIDATION_TOLERANCE
    {
        return Err(Error::OutOfRange { what, value, lo, hi });
    }
    Ok(value.clamp(lo, hi))
}

pub(crate) fn clamp_unit(what: &'static str, value: f64) -> Result<f64> {
    clamp_into(what, value, 0.0, 1.0)
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Dimension { min: 2, actual: n });
    }
    Ok(())
}

/// Raw information components in `[0, 1]` with no constraint on their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct InformationVector(Vec<f64>);

impl InformationVector {
    /// Validates and clamps the components. At least two are required.
    pub fn new(components: impl Into<Vec<f64>>) -> Result<Self> {
        let mut components = components.into();
        check_dimension(components.len())?;
        for c in components.iter_mut() {
            *c = clamp_unit("component", *c)?;
        }
        Ok(Self(components))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

impl AsRef<[f64]> for InformationVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// An information vector together with its degree of imprecision `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedInformation {
    vector: InformationVector,
    imprecision: f64,
}

impl ExtendedInformation {
    pub fn new(vector: InformationVector, imprecision: f64) -> Result<Self> {
        let imprecision = clamp_unit("imprecision", imprecision)?;
        Ok(Self {
            vector,
            imprecision,
        })
    }

    pub fn precise(vector: InformationVector) -> Self {
        Self {
            vector,
            imprecision: 0.0,
        }
    }

    pub fn from_slice(components: &[f64], imprecision: f64) -> Result<Self> {
        Self::new(InformationVector::new(components)?, imprecision)
    }

    pub fn vector(&self) -> &InformationVector {
        &self.vector
    }

    pub fn components(&self) -> &[f64] {
        self.vector.components()
    }

    pub fn imprecision(&self) -> f64 {
        self.imprecision
    }

    pub fn len(&self) -> usize {
        self.vector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vector.is_empty()
    }
}

/// Diagnostic scalars of one input.
///
/// `p_hat_i = alpha * p_i + beta` is the normalized component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationProfile {
    /// Index of definedness, `sum(p) - 1`.
    pub delta: f64,
    /// Degree of under-definedness, `max(-delta, 0)`.
    pub under: f64,
    /// Degree of over-definedness, `max(delta, 0)`.
    pub over: f64,
    /// Cumulated imprecision, `sqrt(delta^2 + n s^2) - |delta|`.
    pub h: f64,
    /// Translation shift, the nonnegative root of `n t^2 + 2 delta t - s^2 = 0`.
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl NormalizationProfile {
    /// `sqrt(delta^2 + n s^2)`, the amount by which the translated sum exceeds one.
    pub fn radius(&self) -> f64 {
        self.h + self.delta.abs()
    }

    /// Divisor of the closed form, `1 + |delta| + h`.
    pub fn divisor(&self) -> f64 {
        1.0 + self.delta.abs() + self.h
    }
}

/// Computes the definedness and imprecision profile of `x`.
pub fn profile(x: &ExtendedInformation) -> NormalizationProfile {
    let n = x.len() as f64;
    let s = x.imprecision();
    let delta = x.vector().sum() - 1.0;
    let abs_delta = delta.abs();
    let ns2 = n * s * s;
    let radius = (delta * delta + ns2).sqrt();

    // Both h and theta are differences of nearly equal terms when s is small
    // next to |delta|; the rationalized forms avoid the cancellation.
    let h = if ns2 == 0.0 {
        0.0
    } else {
        ns2 / (radius + abs_delta)
    };
    let theta = if delta > 0.0 {
        s * s / (radius + delta)
    } else {
        (radius - delta) / n
    };
    let alpha = 1.0 / (1.0 + radius);

    NormalizationProfile {
        delta,
        under: (-delta).max(0.0),
        over: delta.max(0.0),
        h,
        theta,
        alpha,
        beta: theta * alpha,
    }
}

/// Shifts every component by the translation parameter.
///
/// The result is a plain sequence because components can exceed one.
pub fn translate(x: &ExtendedInformation) -> Vec<f64> {
    let theta = profile(x).theta;
    x.components().iter().map(|p| p + theta).collect()
}

/// Components in `[0, 1]` summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitPartition(Vec<f64>);

impl UnitPartition {
    /// Validates a caller-supplied partition: every component in `[0, 1]`
    /// (clamped from the validation band) and the sum within
    /// [`IDENTITY_TOLERANCE`] of one.
    pub fn new(components: impl Into<Vec<f64>>) -> Result<Self> {
        let mut components = components.into();
        check_dimension(components.len())?;
        for c in components.iter_mut() {
            *c = clamp_unit("partition component", *c)?;
        }
        let sum: f64 = components.iter().sum();
        if (sum - 1.0).abs() > IDENTITY_TOLERANCE {
            return Err(Error::Validation(format!(
                "partition components sum to {sum}, not 1"
            )));
        }
        Ok(Self(components))
    }

    /// Wraps components produced by one of the normalization formulas.
    pub(crate) fn from_normalized(components: Vec<f64>) -> Self {
        debug_assert!(components.len() >= 2);
        Self(components.into_iter().map(|c| c.clamp(0.0, 1.0)).collect())
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl Index<usize> for UnitPartition {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for UnitPartition {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Divides each component by the total.
///
/// Only defined for complete or over-defined vectors (`sum >= 1`);
/// under-defined input has to be translated first.
pub fn homothety(q: &[f64]) -> Result<UnitPartition> {
    check_dimension(q.len())?;
    if let Some(&bad) = q.iter().find(|c| !c.is_finite() || **c < 0.0) {
        return Err(Error::OutOfRange {
            what: "homothety component",
            value: bad,
            lo: 0.0,
            hi: f64::INFINITY,
        });
    }
    let sum: f64 = q.iter().sum();
    if sum < 1.0 - IDENTITY_TOLERANCE {
        return Err(Error::Domain { sum });
    }
    Ok(UnitPartition::from_normalized(
        q.iter().map(|c| c / sum).collect(),
    ))
}

/// Closed-form normalization `(p_i + (2u + h)/n) / (1 + |delta| + h)`.
pub fn normalize(x: &ExtendedInformation) -> UnitPartition {
    let prof = profile(x);
    let n = x.len() as f64;
    let shift = (2.0 * prof.under + prof.h) / n;
    let divisor = prof.divisor();
    UnitPartition::from_normalized(
        x.components()
            .iter()
            .map(|p| (p + shift) / divisor)
            .collect(),
    )
}

/// Normalization with the cumulated imprecision replaced by `s * sqrt(n)`.
///
/// Exact for complete input (`delta = 0`). The numerators still sum to the
/// divisor, so the result is a unit partition either way.
pub fn normalize_approx(x: &ExtendedInformation) -> UnitPartition {
    let n = x.len() as f64;
    let delta = x.vector().sum() - 1.0;
    let under = (-delta).max(0.0);
    let h = x.imprecision() * n.sqrt();
    let shift = (2.0 * under + h) / n;
    let divisor = 1.0 + delta.abs() + h;
    UnitPartition::from_normalized(
        x.components()
            .iter()
            .map(|p| (p + shift) / divisor)
            .collect(),
    )
}
