//! Bloch-vector calculus for generalized qubit measurements.
//!
//! Qubit measurements (POVMs) are represented as weighted vectors inside
//! the Bloch sphere. The crate covers:
//!
//! - representation and physical-validity checking of elements and
//!   complete sets ([`bloch`]);
//! - outcome probabilities from the dot-product rule, with an independent
//!   2x2 Hermitian-matrix oracle for cross-checking ([`oracle`]);
//! - splitting rank-2 elements into rank-1 pairs ([`bloch`]);
//! - construction and numerical verification of the optimal error-free
//!   two-state discrimination measurement ([`usd`]);
//! - seeded Monte Carlo simulation of outcome statistics ([`sampler`]).
//!
//! All types are immutable values and all operations are pure functions,
//! so everything is freely shareable across threads.

pub mod bloch;
pub mod error;
pub mod oracle;
pub mod sampler;
pub mod tolerance;
pub mod usd;
mod vec3;

pub use bloch::{
    pure_probability, BlochState, ElementRank, ElementReport, PovmElement, PovmSet,
    Rank1Decomposition, SetReport,
};
pub use error::{Error, Result};
pub use oracle::{Axis, Complex, HermitianMat2};
pub use sampler::{sample_outcomes, SampleReport, SplitMix64};
pub use vec3::Vec3;
