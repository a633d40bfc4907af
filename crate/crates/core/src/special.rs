//! Dedicated closed forms for specific kinds of uncertain information.
//!
//! Each representation maps onto the generic normalization with particular
//! parameters; the functions here evaluate the specialised formulas directly
//! so the two routes can be checked against each other.

use std::f64::consts::{LN_2, SQRT_2};

use crate::error::{Error, Result};
use crate::normalization::{clamp_into, clamp_unit, UnitPartition};
use crate::VALIDATION_TOLERANCE;

fn neg_x_ln_x(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.ln()
    } else {
        0.0
    }
}

/// Bi-valued Shannon entropy of a pair summing to one.
fn bivalued_shannon(a: f64, b: f64) -> f64 {
    (neg_x_ln_x(a) + neg_x_ln_x(b)) / LN_2
}

/// Fuzzy negation `1 - x`.
pub fn negation(x: f64) -> f64 {
    1.0 - x
}

/// Normalized truth/falsity degrees with `truth + falsity = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyPair {
    pub truth: f64,
    pub falsity: f64,
}

impl FuzzyPair {
    fn new(truth: f64, falsity: f64) -> Self {
        Self {
            truth: truth.clamp(0.0, 1.0),
            falsity: falsity.clamp(0.0, 1.0),
        }
    }

    pub fn to_partition(self) -> UnitPartition {
        UnitPartition::from_normalized(vec![self.truth, self.falsity])
    }
}

/// Result of a bi-valued reduction together with the quantities it used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivalentOutcome {
    /// `truth + falsity - 1`.
    pub definedness: f64,
    /// `max(-definedness, 0)`.
    pub incompleteness: f64,
    /// Cumulated imprecision; zero for precise representations.
    pub h: f64,
    pub pair: FuzzyPair,
    pub entropy: f64,
}

// --- three-valued neutrosophic ------------------------------------------

/// Degrees of truth, indeterminacy and falsity, each in `[0, 1]`, no sum
/// constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutrosophicTriple {
    truth: f64,
    indeterminacy: f64,
    falsity: f64,
}

impl NeutrosophicTriple {
    pub fn new(truth: f64, indeterminacy: f64, falsity: f64) -> Result<Self> {
        Ok(Self {
            truth: clamp_unit("truth", truth)?,
            indeterminacy: clamp_unit("indeterminacy", indeterminacy)?,
            falsity: clamp_unit("falsity", falsity)?,
        })
    }

    pub fn truth(&self) -> f64 {
        self.truth
    }

    pub fn indeterminacy(&self) -> f64 {
        self.indeterminacy
    }

    pub fn falsity(&self) -> f64 {
        self.falsity
    }

    /// `(T, I, F)` in that order.
    pub fn components(&self) -> [f64; 3] {
        [self.truth, self.indeterminacy, self.falsity]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeutrosophicOutcome {
    /// `T + I + F - 1`.
    pub definedness: f64,
    /// `max(-definedness, 0)`.
    pub under: f64,
    /// `(T, I, F)` normalized.
    pub normalized: UnitPartition,
    pub entropy: f64,
}

/// Three-valued normalization with the vertices true, neutral and false.
pub fn neutrosophic3(t: &NeutrosophicTriple) -> NeutrosophicOutcome {
    let d = t.truth + t.indeterminacy + t.falsity - 1.0;
    let u = (-d).max(0.0);
    let shift = 2.0 * u / 3.0;
    let divisor = 1.0 + d.abs();
    let normalized: Vec<f64> = t
        .components()
        .iter()
        .map(|c| (c + shift) / divisor)
        .collect();
    let entropy = normalized.iter().copied().map(neg_x_ln_x).sum::<f64>() / 3f64.ln();
    NeutrosophicOutcome {
        definedness: d,
        under: u,
        normalized: UnitPartition::from_normalized(normalized),
        entropy,
    }
}

// --- bi-valued neutrosophic ---------------------------------------------

/// Truth, falsity and imprecision degrees, each in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutrosophicBivalentInput {
    truth: f64,
    falsity: f64,
    imprecision: f64,
}

impl NeutrosophicBivalentInput {
    pub fn new(truth: f64, falsity: f64, imprecision: f64) -> Result<Self> {
        Ok(Self {
            truth: clamp_unit("truth", truth)?,
            falsity: clamp_unit("falsity", falsity)?,
            imprecision: clamp_unit("imprecision", imprecision)?,
        })
    }

    pub fn truth(&self) -> f64 {
        self.truth
    }

    pub fn falsity(&self) -> f64 {
        self.falsity
    }

    pub fn imprecision(&self) -> f64 {
        self.imprecision
    }
}

pub fn neutrosophic2(x: &NeutrosophicBivalentInput) -> BivalentOutcome {
    let delta = x.truth + x.falsity - 1.0;
    let abs_delta = delta.abs();
    let pi = (-delta).max(0.0);
    let w2 = 2.0 * x.imprecision * x.imprecision;
    // sqrt(delta^2 + 2 w^2) - |delta|, rationalized
    let h = if w2 == 0.0 {
        0.0
    } else {
        w2 / ((delta * delta + w2).sqrt() + abs_delta)
    };
    let divisor = 1.0 + abs_delta + h;
    let mu_hat = (x.truth + pi + h / 2.0) / divisor;
    let nu_hat = (x.falsity + pi + h / 2.0) / divisor;
    BivalentOutcome {
        definedness: delta,
        incompleteness: pi,
        h,
        pair: FuzzyPair::new(mu_hat, nu_hat),
        entropy: bivalued_shannon(mu_hat, nu_hat),
    }
}

// --- bifuzzy --------------------------------------------------------------

/// Truth and falsity degrees in `[0, 1]` with no sum constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BifuzzyPair {
    truth: f64,
    falsity: f64,
}

impl BifuzzyPair {
    pub fn new(truth: f64, falsity: f64) -> Result<Self> {
        Ok(Self {
            truth: clamp_unit("truth", truth)?,
            falsity: clamp_unit("falsity", falsity)?,
        })
    }

    pub fn truth(&self) -> f64 {
        self.truth
    }

    pub fn falsity(&self) -> f64 {
        self.falsity
    }
}

pub fn bifuzzy(x: &BifuzzyPair) -> BivalentOutcome {
    let delta = x.truth + x.falsity - 1.0;
    let pi = (-delta).max(0.0);
    let divisor = 1.0 + delta.abs();
    let mu_hat = (x.truth + pi) / divisor;
    let nu_hat = (x.falsity + pi) / divisor;
    BivalentOutcome {
        definedness: delta,
        incompleteness: pi,
        h: 0.0,
        pair: FuzzyPair::new(mu_hat, nu_hat),
        entropy: bivalued_shannon(mu_hat, nu_hat),
    }
}

// --- intuitionistic -------------------------------------------------------

/// Truth and falsity degrees with `truth + falsity <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntuitionisticPair {
    truth: f64,
    falsity: f64,
}

impl IntuitionisticPair {
    pub fn new(truth: f64, falsity: f64) -> Result<Self> {
        let truth = clamp_unit("truth", truth)?;
        let mut falsity = clamp_unit("falsity", falsity)?;
        let sum = truth + falsity;
        if sum > 1.0 + VALIDATION_TOLERANCE {
            return Err(Error::Validation(format!(
                "mu+nu exceeds 1 ({truth} + {falsity} = {sum})"
            )));
        }
        if sum > 1.0 {
            falsity = 1.0 - truth;
        }
        Ok(Self { truth, falsity })
    }

    pub fn truth(&self) -> f64 {
        self.truth
    }

    pub fn falsity(&self) -> f64 {
        self.falsity
    }

    /// Hesitation degree `1 - mu - nu`.
    pub fn incompleteness(&self) -> f64 {
        (1.0 - self.truth - self.falsity).max(0.0)
    }
}

fn intuitionistic_pair(mu: f64, nu: f64) -> (f64, f64, f64) {
    let pi = (1.0 - mu - nu).max(0.0);
    ((mu + pi) / (1.0 + pi), (nu + pi) / (1.0 + pi), pi)
}

/// Entropy through the negations: `nu_bar / (mu_bar + nu_bar)` and its
/// complement, with `x_bar = 1 - x`.
fn negation_form_entropy(mu: f64, nu: f64) -> f64 {
    let mu_bar = negation(mu);
    let nu_bar = negation(nu);
    let total = mu_bar + nu_bar;
    bivalued_shannon(mu_bar / total, nu_bar / total)
}

pub fn intuitionistic(x: &IntuitionisticPair) -> BivalentOutcome {
    let (mu_hat, nu_hat, pi) = intuitionistic_pair(x.truth, x.falsity);
    BivalentOutcome {
        definedness: -pi,
        incompleteness: pi,
        h: 0.0,
        pair: FuzzyPair::new(mu_hat, nu_hat),
        entropy: bivalued_shannon(mu_hat, nu_hat),
    }
}

/// Same value as [`intuitionistic`]`(x).entropy`, computed from negations.
pub fn intuitionistic_entropy_by_negation(x: &IntuitionisticPair) -> f64 {
    negation_form_entropy(x.truth, x.falsity)
}

// --- imprecise fuzzy ------------------------------------------------------

/// Truth degree `mu` with imprecision `sigma` in `[0, 1/2]`; falsity is
/// implied as `1 - mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImpreciseFuzzyPair {
    truth: f64,
    imprecision: f64,
}

impl ImpreciseFuzzyPair {
    pub fn new(truth: f64, imprecision: f64) -> Result<Self> {
        Ok(Self {
            truth: clamp_unit("truth", truth)?,
            imprecision: clamp_into("imprecision", imprecision, 0.0, 0.5)?,
        })
    }

    pub fn truth(&self) -> f64 {
        self.truth
    }

    pub fn falsity(&self) -> f64 {
        1.0 - self.truth
    }

    pub fn imprecision(&self) -> f64 {
        self.imprecision
    }
}

pub fn imprecise_fuzzy(x: &ImpreciseFuzzyPair) -> BivalentOutcome {
    let shift = x.imprecision * SQRT_2;
    let h = 2.0 * shift;
    let mu_hat = (x.truth + shift) / (1.0 + h);
    let nu_hat = (x.falsity() + shift) / (1.0 + h);
    BivalentOutcome {
        definedness: 0.0,
        incompleteness: 0.0,
        h,
        pair: FuzzyPair::new(mu_hat, nu_hat),
        entropy: bivalued_shannon(mu_hat, nu_hat),
    }
}

// --- fuzzy partition ------------------------------------------------------

/// Membership weights of one item over `n >= 2` classes.
///
/// Weights must sum to one within the validation band and are then divided by
/// their sum so the stored partition is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyPartition {
    weights: Vec<f64>,
}

impl FuzzyPartition {
    pub fn new(weights: impl Into<Vec<f64>>) -> Result<Self> {
        let mut weights = weights.into();
        if weights.len() < 2 {
            return Err(Error::Dimension {
                min: 2,
                actual: weights.len(),
            });
        }
        for w in weights.iter_mut() {
            *w = clamp_unit("weight", *w)?;
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > VALIDATION_TOLERANCE {
            return Err(Error::Validation(format!(
                "partition weights sum to {sum}, not 1"
            )));
        }
        for w in weights.iter_mut() {
            *w /= sum;
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weights in decreasing order; equal weights keep their input order.
    pub fn ordered(&self) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..self.weights.len()).collect();
        idx.sort_by(|&a, &b| self.weights[b].total_cmp(&self.weights[a]));
        idx.into_iter().map(|i| self.weights[i]).collect()
    }

    /// The two largest weights `(o1, o2)`.
    pub fn top_two(&self) -> (f64, f64) {
        let o = self.ordered();
        (o[0], o[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionOutcome {
    pub top: (f64, f64),
    /// `1 - o1 - o2`.
    pub incompleteness: f64,
    pub pair: FuzzyPair,
    pub entropy: f64,
}

/// Bi-valued Shannon entropy from the intuitionistic pair `(o1, o2)`.
pub fn partition_shannon(w: &FuzzyPartition) -> PartitionOutcome {
    let (o1, o2) = w.top_two();
    let (mu_hat, nu_hat, pi) = intuitionistic_pair(o1, o2);
    PartitionOutcome {
        top: (o1, o2),
        incompleteness: pi,
        pair: FuzzyPair::new(mu_hat, nu_hat),
        entropy: bivalued_shannon(mu_hat, nu_hat),
    }
}

/// Same value as [`partition_shannon`]`(w).entropy`, computed from negations.
pub fn partition_entropy_by_negation(w: &FuzzyPartition) -> f64 {
    let (o1, o2) = w.top_two();
    negation_form_entropy(o1, o2)
}

/// Non-logarithmic bi-valued partition entropies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonLogEntropies {
    /// `E_K = 1 - |o1 - o2| / (1 + pi)`.
    pub gap: f64,
    /// `E_E`, the ratio of Euclidean distances from the weights to the first
    /// and second vertices.
    pub distance_ratio: f64,
    /// `E_P = (1 - o1) / (1 - o2)`.
    pub complement_ratio: f64,
}

pub fn partition_nonlog(w: &FuzzyPartition) -> Result<NonLogEntropies> {
    let (o1, o2) = w.top_two();
    let pi = (1.0 - o1 - o2).max(0.0);
    let squares: f64 = w.weights.iter().map(|x| x * x).sum();

    let den_e = 1.0 - 2.0 * o2 + squares;
    let den_p = negation(o2);
    if den_e <= 0.0 || den_p <= 0.0 {
        return Err(Error::Singularity(format!(
            "second largest weight {o2} leaves a zero denominator"
        )));
    }
    let num_e = (1.0 - 2.0 * o1 + squares).max(0.0);

    Ok(NonLogEntropies {
        gap: 1.0 - (o1 - o2).abs() / (1.0 + pi),
        distance_ratio: (num_e / den_e).sqrt(),
        complement_ratio: negation(o1) / den_p,
    })
}
