use thiserror::Error;

/// Errors surfaced by the simulation core.
#[derive(Debug, Error)]
pub enum Error {
    /// A value fell outside its declared finite set or range.
    #[error("domain error: {0}")]
    Domain(String),

    /// A run or suite configuration is unusable.
    #[error("configuration error: {0}")]
    Config(String),

    /// An exact expansion would exceed the configured budget.
    #[error("budget error: requested depth {requested} exceeds cap {cap}")]
    Budget { requested: usize, cap: usize },

    /// Observed data has zero probability under the mixture.
    #[error("inconsistency error: {0}")]
    Inconsistency(String),

    /// A predicate program failed to decide an input within its fuel.
    #[error("predicate invalid: {0}")]
    PredicateInvalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
