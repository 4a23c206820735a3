//! Spectral analysis of ranking data on the symmetric group, Markov bases for
//! the permutation-representation toric ideal, and conditional MCMC.
//!
//! Permutations are written as digit strings listing the item in each
//! position: in `"54321"` item 5 is ranked first. Internally `p.image(j)` is the
//! (0-based) item in position `j`, and `(p ∘ q)(j) = p(q(j))`.
//!
//! Numeric code is generic over [`Scalar`]; the crate root fixes the usual
//! instantiations as aliases.

pub mod basisgen;
pub mod dataset;
pub mod error;
pub mod mcmc;
pub mod reptheory;
pub mod scalar;
pub mod symgroup;
pub mod tableaux;

pub use dataset::Dataset;
pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};
pub use symgroup::{Partition, Permutation, MAX_DEGREE};
pub use tableaux::{MagicSquare, Move, Tableau};

/// The Fourier transform at the permutation representation is a magic square.
pub type FourierMatrix = MagicSquare;

/// Exact projection values.
pub type ExactVector = reptheory::GroupVector<Rational>;
pub type FloatVector = reptheory::GroupVector<f64>;

pub type Model = mcmc::ExponentialModel<f64>;
