//! Numeric tolerances used by every validity check in the crate.
//!
//! The underlying algebra is exact; these thresholds exist only to absorb
//! floating-point rounding. They are deliberately centralized so that no
//! check invents its own magic number.

/// Slack on positivity and purity checks (`|v| <= a`, `|r| <= 1`).
pub const EPS_NORM: f64 = 1e-9;

/// Slack on closure sums (`sum v_i = 0`, `sum a_i = 2`, probabilities
/// summing to one).
pub const EPS_SUM: f64 = 1e-9;

/// Slack on pure-arithmetic round trips (Pauli expansion and back,
/// probability computed along two algebraic routes).
pub const EPS_ROUND: f64 = 1e-12;

/// Angular slack, in radians, for antiparallelism and degeneracy checks.
pub const EPS_ANG: f64 = 1e-9;

/// Slack on Hermiticity checks (imaginary residue on the diagonal,
/// `m10 - conj(m01)` residue when importing raw entries).
pub const EPS_HERM: f64 = 1e-9;
