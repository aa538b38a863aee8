//! Core simulation library: histories, environment models, Bayesian
//! mixtures, expectimax planning, the agent loop, novelty estimation,
//! bound evaluators, and the experiment harness.

pub mod bits;
pub mod error;
pub mod machine;
pub mod novelty;

pub use bits::BitString;
pub use error::{Error, Result};
