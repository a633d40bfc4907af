//! Uncertainty measures over unit partitions.
//!
//! Shannon entropy is normalized by `ln(n)` and lies in `[0, 1]`. Tsallis and
//! Rényi entropies are reported unnormalized; both tend to `-sum q ln q` as
//! the order approaches one. `0 ln 0` is taken as zero everywhere.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::normalization::{normalize, profile, ExtendedInformation, NormalizationProfile, UnitPartition};

/// Orders within this distance of one evaluate to the Shannon limit.
pub const ORDER_ONE_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenyiMode {
    /// `ln(sum q^a) / (1 - a)`.
    Standard,
    /// `(1 - ln(sum q^a)) / (1 - a)`, which diverges as `a -> 1`.
    PaperLiteral,
}

impl FromStr for RenyiMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::Standard),
            "paper" | "paper_literal" => Ok(Self::PaperLiteral),
            other => Err(Error::Parameter(format!("unknown Rényi mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Shannon,
    Onicescu,
    Tsallis { order: f64 },
    Renyi { order: f64, mode: RenyiMode },
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Shannon => "shannon",
            Self::Onicescu => "onicescu",
            Self::Tsallis { .. } => "tsallis",
            Self::Renyi { .. } => "renyi",
        }
    }

    pub fn order(&self) -> Option<f64> {
        match *self {
            Self::Shannon | Self::Onicescu => None,
            Self::Tsallis { order } | Self::Renyi { order, .. } => Some(order),
        }
    }

    /// Evaluates the measure on an already normalized vector.
    pub fn evaluate(&self, q: &UnitPartition) -> Result<f64> {
        match *self {
            Self::Shannon => Ok(shannon_unit(q)),
            Self::Onicescu => Ok(onicescu_unit(q)),
            Self::Tsallis { order } => tsallis_unit(q, order),
            Self::Renyi { order, mode } => renyi_unit(q, order, mode),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A measure evaluated on raw extended information.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub measure: Measure,
    pub value: f64,
    pub profile: NormalizationProfile,
    pub normalized: UnitPartition,
}

impl EntropyReport {
    pub fn order(&self) -> Option<f64> {
        self.measure.order()
    }
}

fn neg_x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.ln()
    } else {
        0.0
    }
}

/// `-sum q ln q`, in nats.
pub(crate) fn gibbs(q: &[f64]) -> f64 {
    q.iter().copied().map(neg_x_ln_x).sum()
}

fn power_sum(q: &[f64], order: f64) -> f64 {
    q.iter()
        .map(|&x| if x > 0.0 { x.powf(order) } else { 0.0 })
        .sum()
}

/// `sum q^a - 1` for a unit partition, written as
/// `sum q (exp((a - 1) ln q) - 1)` so it stays accurate as `a -> 1`.
fn power_sum_excess(q: &[f64], order: f64) -> f64 {
    q.iter()
        .map(|&x| {
            if x > 0.0 {
                x * ((order - 1.0) * x.ln()).exp_m1()
            } else {
                0.0
            }
        })
        .sum()
}

fn check_order(order: f64) -> Result<()> {
    if !(order.is_finite() && order > 0.0) {
        return Err(Error::Parameter(format!(
            "order must be a positive finite number, got {order}"
        )));
    }
    Ok(())
}

/// Shannon entropy normalized by `ln(n)`.
pub fn shannon_unit(q: &UnitPartition) -> f64 {
    let n = q.len() as f64;
    (gibbs(q.components()) / n.ln()).clamp(0.0, 1.0)
}

/// Onicescu informational energy, `sum q^2`.
pub fn onicescu_unit(q: &UnitPartition) -> f64 {
    let energy: f64 = q.components().iter().map(|x| x * x).sum();
    let n = q.len() as f64;
    debug_assert!(energy >= 1.0 / n - 1e-12 && energy <= 1.0 + 1e-12);
    energy.clamp(1.0 / n, 1.0)
}

pub fn tsallis_unit(q: &UnitPartition, order: f64) -> Result<f64> {
    check_order(order)?;
    if (order - 1.0).abs() <= ORDER_ONE_BAND {
        return Ok(gibbs(q.components()));
    }
    Ok(-power_sum_excess(q.components(), order) / (order - 1.0))
}

pub fn renyi_unit(q: &UnitPartition, order: f64, mode: RenyiMode) -> Result<f64> {
    check_order(order)?;
    let near_one = (order - 1.0).abs() <= ORDER_ONE_BAND;
    match mode {
        RenyiMode::Standard if near_one => Ok(gibbs(q.components())),
        RenyiMode::Standard => {
            Ok(power_sum_excess(q.components(), order).ln_1p() / (1.0 - order))
        }
        RenyiMode::PaperLiteral if near_one => Err(Error::Singularity(format!(
            "literal Rényi form has a pole at order 1 (got {order})"
        ))),
        RenyiMode::PaperLiteral => {
            Ok((1.0 - power_sum(q.components(), order).ln()) / (1.0 - order))
        }
    }
}

fn report(x: &ExtendedInformation, measure: Measure) -> Result<EntropyReport> {
    let normalized = normalize(x);
    let value = measure.evaluate(&normalized)?;
    Ok(EntropyReport {
        measure,
        value,
        profile: profile(x),
        normalized,
    })
}

/// Evaluates `measure` on the normalization of `x`.
pub fn evaluate(x: &ExtendedInformation, measure: Measure) -> Result<EntropyReport> {
    report(x, measure)
}

pub fn shannon(x: &ExtendedInformation) -> EntropyReport {
    report(x, Measure::Shannon).expect("shannon has no parameters to reject")
}

pub fn onicescu(x: &ExtendedInformation) -> EntropyReport {
    report(x, Measure::Onicescu).expect("onicescu has no parameters to reject")
}

pub fn tsallis(x: &ExtendedInformation, order: f64) -> Result<EntropyReport> {
    report(x, Measure::Tsallis { order })
}

pub fn renyi(x: &ExtendedInformation, order: f64, mode: RenyiMode) -> Result<EntropyReport> {
    report(x, Measure::Renyi { order, mode })
}
