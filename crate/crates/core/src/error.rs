use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Too few components for the entropy normalizer `ln(n)` to be nonzero.
    #[error("expected at least {min} components, got {actual}")]
    Dimension { min: usize, actual: usize },

    /// A value left its admissible range by more than the validation band.
    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// A structural constraint between values does not hold.
    #[error("{0}")]
    Validation(String),

    /// Homothety applied to a vector whose sum is below one.
    #[error("homothety needs a component sum of at least 1, got {sum}; translate first")]
    Domain { sum: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("singular expression: {0}")]
    Singularity(String),
}
