//! Effects on `ℚ^d` under the spectral order, in exact arithmetic.
//!
//! An effect is stored as its finite spectral family (thresholds and a
//! nested flag of subspaces); operators are derived from it on demand.

use thiserror::Error;

pub mod effect;
pub mod random;
pub mod subspace;
pub mod verify;

pub use effect::SpectralEffect;
pub use subspace::RationalSubspace;
pub use verify::{verify, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid effect: {0}")]
    InvalidEffect(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
