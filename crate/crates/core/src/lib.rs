//! Normalization of incomplete or contradictory information onto the
//! probability simplex, and uncertainty measures over the result.
//!
//! An information vector `p = (p1, ..., pn)` with components in `[0, 1]` may
//! sum to less than one (under-defined) or more than one (over-defined) and
//! may carry an extra imprecision degree `s`. [`normalize`] maps it to a unit
//! partition with the affine map `p_i -> alpha * p_i + beta`, which is the
//! composition of a distance-preserving [`translate`] and a [`homothety`].
//! The [`entropy`] module evaluates Shannon, Onicescu, Tsallis and Rényi
//! measures on the normalized vector, and [`special`] covers neutrosophic,
//! bifuzzy, intuitionistic, imprecise fuzzy and fuzzy-partition inputs.
//!
//! ```
//! use infonorm::{normalize, shannon, ExtendedInformation};
//!
//! let x = ExtendedInformation::from_slice(&[0.6, 0.2], 0.0).unwrap();
//! let q = normalize(&x);
//! assert!((q[0] - 2.0 / 3.0).abs() < 1e-12);
//! assert!((shannon(&x).value - 0.918296).abs() < 1e-6);
//! ```

pub mod entropy;
pub mod error;
pub mod io;
pub mod normalization;
pub mod special;

pub use entropy::{
    evaluate, onicescu, onicescu_unit, renyi, renyi_unit, shannon, shannon_unit, tsallis, tsallis_unit,
    EntropyReport, Measure, RenyiMode,
};
pub use error::{Error, Result};
pub use normalization::{
    homothety, normalize, normalize_approx, profile, translate, ExtendedInformation,
    InformationVector, NormalizationProfile, UnitPartition,
};

/// Half-width of the band outside `[0, 1]` that input values are clamped from.
pub const VALIDATION_TOLERANCE: f64 = 1e-9;

/// Tolerance for algebraic identities such as the partition-of-unity sum.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
