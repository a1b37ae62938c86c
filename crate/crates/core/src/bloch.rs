//! Bloch-vector data model for qubit states and POVM elements.
//!
//! A state is a vector `r` inside the unit ball with density matrix
//! `I/2 + r.sigma/2`. A measurement element is a weight `a` and a vector
//! `v` with operator `a I/2 + v.sigma/2`; positivity reads `|v| <= a` and
//! the element is rank-1 (proportional to a pure-state projector) exactly
//! when `|v| = a`. A complete measurement is a list of elements whose
//! vectors sum to zero and whose weights sum to two.
//!
//! Outcome probabilities come from the dot-product rule
//! `P = (a + v.r)/2`; everything here is cross-checked against the
//! explicit matrix arithmetic in [`crate::oracle`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{Complex, HermitianMat2};
use crate::tolerance::{EPS_NORM, EPS_ROUND, EPS_SUM};
use crate::vec3::Vec3;

/// A qubit density matrix as a Bloch vector of length at most one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochState {
    vector: Vec3,
}

impl BlochState {
    /// The maximally mixed state `I/2`.
    pub const MAXIMALLY_MIXED: BlochState = BlochState { vector: Vec3::ZERO };

    pub fn new(vector: Vec3) -> Result<Self> {
        let norm = vector.norm();
        if norm > 1.0 + EPS_NORM {
            return Err(Error::NotAState {
                reason: format!("Bloch vector norm {norm} exceeds 1"),
            });
        }
        Ok(BlochState { vector })
    }

    pub fn vector(&self) -> Vec3 {
        self.vector
    }

    /// Pure within the positivity slack: `|r| >= 1 - EPS_NORM`.
    pub fn is_pure(&self) -> bool {
        self.vector.norm() >= 1.0 - EPS_NORM
    }

    /// The density matrix `I/2 + r.sigma/2`.
    pub fn to_density(&self) -> HermitianMat2 {
        let (x, y, z) = (self.vector.x(), self.vector.y(), self.vector.z());
        HermitianMat2::new(
            (1.0 + z) / 2.0,
            Complex::new(x / 2.0, -y / 2.0),
            (1.0 - z) / 2.0,
        )
        .expect("state components are finite")
    }

    /// Recover the Bloch vector from a density matrix; `r_k = tr(sigma_k m)`.
    ///
    /// Rejects matrices whose trace is not one within `EPS_SUM` or whose
    /// smaller eigenvalue is below `-EPS_NORM`.
    pub fn from_density(m: &HermitianMat2) -> Result<Self> {
        let trace = m.trace();
        if (trace - 1.0).abs() > EPS_SUM {
            return Err(Error::NotAState {
                reason: format!("trace {trace} is not 1"),
            });
        }
        let (lo, _) = m.eigenvalues();
        if lo < -EPS_NORM {
            return Err(Error::NotAState {
                reason: format!("negative eigenvalue {lo}"),
            });
        }
        let r = pauli_components(m)?;
        BlochState::new(r)
    }
}

/// One measurement operator `a I/2 + v.sigma/2` as weight and vector.
///
/// The constructor admits any finite pair so that invalid operators can be
/// inspected; [`PovmElement::validate`] is the positivity gate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PovmElement {
    weight: f64,
    vector: Vec3,
}

impl PovmElement {
    pub fn new(weight: f64, vector: Vec3) -> Result<Self> {
        if !weight.is_finite() {
            return Err(Error::NonFinite {
                context: "PovmElement::new",
            });
        }
        Ok(PovmElement { weight, vector })
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn vector(&self) -> Vec3 {
        self.vector
    }

    /// The operator matrix `a I/2 + v.sigma/2`; its trace equals `a`.
    pub fn to_matrix(&self) -> HermitianMat2 {
        let (x, y, z) = (self.vector.x(), self.vector.y(), self.vector.z());
        HermitianMat2::new(
            (self.weight + z) / 2.0,
            Complex::new(x / 2.0, -y / 2.0),
            (self.weight - z) / 2.0,
        )
        .expect("element components are finite")
    }

    /// Extract weight and vector from an operator matrix: `a = tr m`,
    /// `v_k = tr(sigma_k m)`. Inverse of [`PovmElement::to_matrix`].
    pub fn from_matrix(m: &HermitianMat2) -> Result<Self> {
        let (lo, _) = m.eigenvalues();
        if lo < -EPS_NORM {
            return Err(Error::NotPositive { min_eigenvalue: lo });
        }
        PovmElement::new(m.trace(), pauli_components(m)?)
    }

    /// Positivity and rank report. Never fails: invalidity is data.
    pub fn validate(&self) -> ElementReport {
        let norm = self.vector.norm();
        let positive = self.weight >= 0.0 && norm <= self.weight + EPS_NORM;
        let rank = if self.weight <= EPS_NORM {
            ElementRank::Zero
        } else if self.weight - norm <= EPS_NORM {
            ElementRank::One
        } else {
            ElementRank::Two
        };
        ElementReport {
            positive,
            rank,
            eigenvalues: ((self.weight - norm) / 2.0, (self.weight + norm) / 2.0),
        }
    }

    /// Outcome probability `(a + v.r)/2` for measuring `state`.
    ///
    /// For an element drawn from a valid complete measurement the value
    /// lies in `[0, 1]`; in general it is bounded by `[0, a]`. Rounding
    /// noise within `EPS_ROUND` of the unit interval is clamped away.
    pub fn probability(&self, state: &BlochState) -> f64 {
        clamp_unit_noise((self.weight + self.vector.dot(state.vector())) / 2.0)
    }

    /// Split into a rank-1 pair along the element's own axis.
    ///
    /// With `b = |v|/a`, the eigenvector weights are `(1 + b)/2` and
    /// `(1 - b)/2`; the two output elements are rank-1 and their matrices
    /// sum back to the input's. A maximally mixed element (`|v| = 0`) has
    /// no preferred axis and splits along +z by convention.
    pub fn decompose(&self) -> Result<Rank1Decomposition> {
        if self.weight <= EPS_NORM {
            return Err(Error::ZeroElement);
        }
        let axis = self.vector.normalized().unwrap_or(Vec3::Z);
        let balance = (self.vector.norm() / self.weight).min(1.0);
        let major_share = (1.0 + balance) / 2.0;
        let minor_share = (1.0 - balance) / 2.0;
        Ok(Rank1Decomposition {
            major: PovmElement {
                weight: self.weight * major_share,
                vector: axis * (self.weight * major_share),
            },
            minor: PovmElement {
                weight: self.weight * minor_share,
                vector: -axis * (self.weight * minor_share),
            },
            axis,
            eigen_weights: (major_share, minor_share),
        })
    }
}

/// Probability `a (1 + cos beta) / 2` for a rank-1 element and a pure
/// state separated by angle `beta`. Matches [`PovmElement::probability`]
/// whenever `|v| = a` and `|r| = 1`.
pub fn pure_probability(weight: f64, angle: f64) -> f64 {
    weight * (1.0 + angle.cos()) / 2.0
}

/// Rank classification of a measurement element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ElementRank {
    /// Weight below the positivity slack; the zero operator.
    Zero,
    /// Proportional to a pure-state projector (`|v| = a`).
    One,
    /// Proportional to a mixed state (`|v| < a`).
    Two,
}

/// Validity data for a single element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElementReport {
    /// `a >= 0` and `|v| <= a + EPS_NORM`.
    pub positive: bool,
    pub rank: ElementRank,
    /// Operator eigenvalues `((a - |v|)/2, (a + |v|)/2)`.
    pub eigenvalues: (f64, f64),
}

/// Validity data for a whole measurement set.
///
/// The general closure law is on the weights (`sum a_i = 2`); the length
/// sum `sum |v_i|` coincides with it only for all-rank-1 sets, so the
/// report carries both sums and only requires the length form when every
/// element is rank-1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SetReport {
    pub elements: Vec<ElementReport>,
    pub vector_sum: Vec3,
    pub weight_sum: f64,
    pub length_sum: f64,
    pub all_positive: bool,
    pub all_rank1: bool,
    /// `|sum v_i| <= EPS_SUM`.
    pub vectors_closed: bool,
    /// `|sum a_i - 2| <= EPS_SUM`.
    pub weights_closed: bool,
    /// `|sum |v_i| - 2| <= EPS_SUM`; required only when `all_rank1`.
    pub lengths_closed: bool,
    pub valid: bool,
}

/// An ordered collection of elements claiming to form a complete
/// measurement. Order is meaningful: outcome labels are positions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PovmSet {
    elements: Vec<PovmElement>,
}

impl PovmSet {
    pub fn new(elements: Vec<PovmElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(PovmSet { elements })
    }

    pub fn elements(&self) -> &[PovmElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Check element positivity and both closure conditions.
    pub fn validate(&self) -> SetReport {
        let reports: Vec<ElementReport> = self.elements.iter().map(PovmElement::validate).collect();
        let vector_sum = self
            .elements
            .iter()
            .fold(Vec3::ZERO, |acc, e| acc + e.vector());
        let weight_sum: f64 = self.elements.iter().map(PovmElement::weight).sum();
        let length_sum: f64 = self.elements.iter().map(|e| e.vector().norm()).sum();

        let all_positive = reports.iter().all(|r| r.positive);
        let all_rank1 = reports.iter().all(|r| r.rank == ElementRank::One);
        let vectors_closed = vector_sum.norm() <= EPS_SUM;
        let weights_closed = (weight_sum - 2.0).abs() <= EPS_SUM;
        let lengths_closed = (length_sum - 2.0).abs() <= EPS_SUM;
        let valid =
            all_positive && vectors_closed && weights_closed && (!all_rank1 || lengths_closed);

        SetReport {
            elements: reports,
            vector_sum,
            weight_sum,
            length_sum,
            all_positive,
            all_rank1,
            vectors_closed,
            weights_closed,
            lengths_closed,
            valid,
        }
    }

    /// One probability per element, in set order. The set is validated
    /// first; entries are clamped to `[0, 1]` and sum to one within
    /// `EPS_SUM` for any valid state.
    pub fn distribution(&self, state: &BlochState) -> Result<Vec<f64>> {
        let report = self.validate();
        if !report.valid {
            return Err(Error::InvalidSet {
                report: Box::new(report),
            });
        }
        Ok(self
            .elements
            .iter()
            .map(|e| e.probability(state).clamp(0.0, 1.0))
            .collect())
    }
}

/// Rank-1 split of an element: `major` along the axis, `minor` opposite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rank1Decomposition {
    pub major: PovmElement,
    pub minor: PovmElement,
    /// Unit decomposition axis.
    pub axis: Vec3,
    /// State eigenvalues `(major, minor)`; they sum to one and differ by
    /// `|v|/a`.
    pub eigen_weights: (f64, f64),
}

/// `(tr(sigma_x m), tr(sigma_y m), tr(sigma_z m))` expanded entrywise.
fn pauli_components(m: &HermitianMat2) -> Result<Vec3> {
    Vec3::new(2.0 * m.m01().re, -2.0 * m.m01().im, m.m00() - m.m11())
}

/// Clamp values that rounding pushed just outside `[0, 1]`; anything
/// further out is returned unchanged (genuinely out-of-range input, the
/// caller's validation concern).
fn clamp_unit_noise(p: f64) -> f64 {
    if (-EPS_ROUND..0.0).contains(&p) {
        0.0
    } else if p > 1.0 && p <= 1.0 + EPS_ROUND {
        1.0
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, Axis};

    fn vec(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z).unwrap()
    }

    fn element(a: f64, v: Vec3) -> PovmElement {
        PovmElement::new(a, v).unwrap()
    }

    fn state(r: Vec3) -> BlochState {
        BlochState::new(r).unwrap()
    }

    /// Three equal-weight rank-1 elements at 120 degrees in the X-Z plane.
    fn trine_set() -> PovmSet {
        let w = 2.0 / 3.0;
        let s = 3.0_f64.sqrt() / 2.0;
        PovmSet::new(vec![
            element(w, vec(0.0, 0.0, 1.0) * w),
            element(w, vec(s, 0.0, -0.5) * w),
            element(w, vec(-s, 0.0, -0.5) * w),
        ])
        .unwrap()
    }

    fn von_neumann_z() -> PovmSet {
        PovmSet::new(vec![element(1.0, Vec3::Z), element(1.0, -Vec3::Z)]).unwrap()
    }

    #[test]
    fn state_rejects_long_vectors() {
        assert!(BlochState::new(vec(0.0, 0.0, 1.1)).is_err());
        assert!(BlochState::new(vec(0.0, 0.0, 1.0)).is_ok());
        assert!(state(Vec3::Z).is_pure());
        assert!(!BlochState::MAXIMALLY_MIXED.is_pure());
    }

    #[test]
    fn density_of_basic_states() {
        let mixed = BlochState::MAXIMALLY_MIXED.to_density();
        assert_eq!(mixed.m00(), 0.5);
        assert_eq!(mixed.m11(), 0.5);
        assert_eq!(mixed.m01(), Complex::ZERO);

        let north = state(Vec3::Z).to_density();
        assert_eq!(north.m00(), 1.0);
        assert_eq!(north.m11(), 0.0);

        // I/2 + sigma_x/2 expanded by hand.
        let plus = state(Vec3::X).to_density();
        assert_eq!(plus.m00(), 0.5);
        assert_eq!(plus.m11(), 0.5);
        assert_eq!(plus.m01(), Complex::real(0.5));
    }

    #[test]
    fn bloch_from_density_matches_trace_formula() {
        let proj0 = HermitianMat2::new(1.0, Complex::ZERO, 0.0).unwrap();
        assert_eq!(BlochState::from_density(&proj0).unwrap().vector(), Vec3::Z);

        let mixed = HermitianMat2::IDENTITY.scale(0.5);
        assert_eq!(
            BlochState::from_density(&mixed).unwrap().vector(),
            Vec3::ZERO
        );

        let m = HermitianMat2::new(0.75, Complex::real(0.25), 0.25).unwrap();
        let r = BlochState::from_density(&m).unwrap().vector();
        // Independent route: trace against the Pauli matrices.
        for (axis, want) in [(Axis::X, r.x()), (Axis::Y, r.y()), (Axis::Z, r.z())] {
            let via_trace = oracle::trace_product(&HermitianMat2::pauli(axis), &m);
            assert!((via_trace - want).abs() < EPS_ROUND);
        }
        assert!((r.x() - 0.5).abs() < EPS_ROUND);
        assert!(r.y().abs() < EPS_ROUND);
        assert!((r.z() - 0.5).abs() < EPS_ROUND);
    }

    #[test]
    fn from_density_rejects_non_states() {
        let wrong_trace = HermitianMat2::new(1.0, Complex::ZERO, 0.1).unwrap();
        assert!(matches!(
            BlochState::from_density(&wrong_trace),
            Err(Error::NotAState { .. })
        ));

        let negative = HermitianMat2::new(1.5, Complex::ZERO, -0.5).unwrap();
        assert!(matches!(
            BlochState::from_density(&negative),
            Err(Error::NotAState { .. })
        ));
    }

    #[test]
    fn element_matrix_examples() {
        let projector = element(1.0, Vec3::Z).to_matrix();
        assert_eq!(projector.m00(), 1.0);
        assert_eq!(projector.m11(), 0.0);
        assert_eq!(projector.trace(), 1.0);

        let identity = element(2.0, Vec3::ZERO).to_matrix();
        assert_eq!(identity.max_entry_distance(&HermitianMat2::IDENTITY), 0.0);

        // (2/3)(I/2) + (2/3) sigma_x / 2, expanded by hand.
        let third = 1.0 / 3.0;
        let m = element(2.0 / 3.0, vec(2.0 / 3.0, 0.0, 0.0)).to_matrix();
        assert!((m.m00() - third).abs() < EPS_ROUND);
        assert!((m.m11() - third).abs() < EPS_ROUND);
        assert!((m.m01().re - third).abs() < EPS_ROUND);
        assert_eq!(m.m01().im, 0.0);
        assert!((m.trace() - 2.0 / 3.0).abs() < EPS_ROUND);
    }

    #[test]
    fn element_from_matrix_examples() {
        let proj0 = HermitianMat2::new(1.0, Complex::ZERO, 0.0).unwrap();
        let e = PovmElement::from_matrix(&proj0).unwrap();
        assert_eq!(e.weight(), 1.0);
        assert_eq!(e.vector(), Vec3::Z);

        let id = PovmElement::from_matrix(&HermitianMat2::IDENTITY).unwrap();
        assert_eq!(id.weight(), 2.0);
        assert_eq!(id.vector(), Vec3::ZERO);

        let m = HermitianMat2::new(0.75, Complex::real(0.25), 0.25).unwrap();
        let e = PovmElement::from_matrix(&m).unwrap();
        assert!((e.weight() - 1.0).abs() < EPS_ROUND);
        assert!((e.vector().x() - 0.5).abs() < EPS_ROUND);
        assert!((e.vector().z() - 0.5).abs() < EPS_ROUND);

        assert!(matches!(
            PovmElement::from_matrix(&HermitianMat2::pauli(Axis::Z)),
            Err(Error::NotPositive { .. })
        ));
    }

    #[test]
    fn element_round_trip() {
        let e = element(0.8, vec(0.3, -0.2, 0.4));
        let back = PovmElement::from_matrix(&e.to_matrix()).unwrap();
        assert!((back.weight() - e.weight()).abs() < EPS_ROUND);
        assert!((back.vector() - e.vector()).norm() < EPS_ROUND);
    }

    #[test]
    fn element_validation_examples() {
        let r = element(1.0, Vec3::Z).validate();
        assert!(r.positive);
        assert_eq!(r.rank, ElementRank::One);

        let r = element(1.0, vec(0.0, 0.0, 1.5)).validate();
        assert!(!r.positive);
        assert!((r.eigenvalues.0 + 0.25).abs() < EPS_ROUND);

        let r = element(1.0, vec(0.0, 0.0, 0.5)).validate();
        assert!(r.positive);
        assert_eq!(r.rank, ElementRank::Two);
        assert!((r.eigenvalues.0 - 0.25).abs() < EPS_ROUND);
        assert!((r.eigenvalues.1 - 0.75).abs() < EPS_ROUND);

        let r = element(0.0, Vec3::ZERO).validate();
        assert!(r.positive);
        assert_eq!(r.rank, ElementRank::Zero);

        assert!(!element(-0.5, Vec3::ZERO).validate().positive);
    }

    #[test]
    fn eigenvalues_match_matrix_oracle() {
        for e in [
            element(1.0, vec(0.0, 0.0, 0.5)),
            element(0.7, vec(0.1, 0.2, -0.3)),
            element(2.0, Vec3::ZERO),
        ] {
            let report = e.validate();
            let (lo, hi) = e.to_matrix().eigenvalues();
            assert!((report.eigenvalues.0 - lo).abs() < EPS_ROUND);
            assert!((report.eigenvalues.1 - hi).abs() < EPS_ROUND);
        }
    }

    #[test]
    fn set_validation_examples() {
        let report = von_neumann_z().validate();
        assert!(report.valid);
        assert!(report.all_rank1);

        let report = trine_set().validate();
        assert!(report.valid);
        assert!(report.all_rank1);
        assert!((report.weight_sum - 2.0).abs() < EPS_SUM);
        assert!((report.length_sum - 2.0).abs() < EPS_SUM);

        let duplicated = PovmSet::new(vec![element(1.0, Vec3::Z), element(1.0, Vec3::Z)]).unwrap();
        let report = duplicated.validate();
        assert!(!report.valid);
        assert!(!report.vectors_closed);
        assert!(report.weights_closed);
    }

    #[test]
    fn set_completeness_agrees_with_matrix_oracle() {
        for set in [von_neumann_z(), trine_set()] {
            let mats: Vec<HermitianMat2> = set.elements().iter().map(|e| e.to_matrix()).collect();
            assert!(oracle::sums_to_identity(&mats));
            assert!(set.validate().valid);
        }
    }

    #[test]
    fn probability_examples() {
        let up = element(1.0, Vec3::Z);
        assert_eq!(up.probability(&state(Vec3::Z)), 1.0);
        assert_eq!(up.probability(&state(-Vec3::Z)), 0.0);

        let e = element(2.0 / 3.0, vec(2.0 / 3.0, 0.0, 0.0));
        assert!((e.probability(&state(Vec3::X)) - 2.0 / 3.0).abs() < EPS_ROUND);
    }

    #[test]
    fn pure_probability_examples() {
        use std::f64::consts::{FRAC_PI_2, PI};
        assert_eq!(pure_probability(1.0, 0.0), 1.0);
        assert_eq!(pure_probability(1.0, PI), 0.0);
        assert!((pure_probability(1.0, FRAC_PI_2) - 0.5).abs() < EPS_ROUND);

        // Same value along the dot-product route with orthogonal unit vectors.
        let via_dot = element(1.0, Vec3::X).probability(&state(Vec3::Z));
        assert!((pure_probability(1.0, FRAC_PI_2) - via_dot).abs() < EPS_ROUND);
    }

    #[test]
    fn distribution_examples() {
        let probs = von_neumann_z().distribution(&state(Vec3::Z)).unwrap();
        assert_eq!(probs, vec![1.0, 0.0]);

        // Maximally mixed state: a_i / 2 per element.
        let probs = trine_set()
            .distribution(&BlochState::MAXIMALLY_MIXED)
            .unwrap();
        for p in &probs {
            assert!((p - 1.0 / 3.0).abs() < EPS_ROUND);
        }

        // State aligned with the first trine vector: cos(120deg) = -1/2
        // gives (2/3, 1/6, 1/6); cross-checked against the matrix oracle.
        let aligned = state(Vec3::Z);
        let probs = trine_set().distribution(&aligned).unwrap();
        let expected = [2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0];
        let density = aligned.to_density();
        for (i, (p, want)) in probs.iter().zip(expected).enumerate() {
            assert!((p - want).abs() < EPS_ROUND, "outcome {i}");
            let via_trace = oracle::trace_product(&trine_set().elements()[i].to_matrix(), &density);
            assert!((p - via_trace).abs() < EPS_ROUND);
        }
        let total: f64 = probs.iter().sum();
        assert!((total - 1.0).abs() < EPS_SUM);
    }

    #[test]
    fn distribution_rejects_invalid_set() {
        let bad = PovmSet::new(vec![element(1.0, Vec3::Z), element(1.0, Vec3::Z)]).unwrap();
        assert!(matches!(
            bad.distribution(&BlochState::MAXIMALLY_MIXED),
            Err(Error::InvalidSet { .. })
        ));
    }

    #[test]
    fn decompose_rank2_element() {
        // Eigendecomposition of diag(3/4, 1/4).
        let d = element(1.0, vec(0.0, 0.0, 0.5)).decompose().unwrap();
        assert!((d.major.weight() - 0.75).abs() < EPS_ROUND);
        assert!((d.major.vector().z() - 0.75).abs() < EPS_ROUND);
        assert!((d.minor.weight() - 0.25).abs() < EPS_ROUND);
        assert!((d.minor.vector().z() + 0.25).abs() < EPS_ROUND);
        assert_eq!(d.axis, Vec3::Z);

        let (lo, hi) = element(1.0, vec(0.0, 0.0, 0.5)).to_matrix().eigenvalues();
        assert!((d.eigen_weights.0 - hi).abs() < EPS_ROUND);
        assert!((d.eigen_weights.1 - lo).abs() < EPS_ROUND);
        assert!((d.eigen_weights.0 + d.eigen_weights.1 - 1.0).abs() < EPS_SUM);
    }

    #[test]
    fn decompose_rank1_and_degenerate() {
        let d = element(1.0, Vec3::Z).decompose().unwrap();
        assert!((d.major.weight() - 1.0).abs() < EPS_ROUND);
        assert!(d.minor.weight().abs() < EPS_ROUND);

        // Identity element: splits into the +z/-z projector pair.
        let d = element(2.0, Vec3::ZERO).decompose().unwrap();
        assert_eq!(d.axis, Vec3::Z);
        assert!((d.major.weight() - 1.0).abs() < EPS_ROUND);
        assert!((d.minor.weight() - 1.0).abs() < EPS_ROUND);
        assert!((d.major.vector() - Vec3::Z).norm() < EPS_ROUND);
        assert!((d.minor.vector() + Vec3::Z).norm() < EPS_ROUND);

        assert!(matches!(
            element(0.0, Vec3::ZERO).decompose(),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn decomposition_reconstructs_matrix_and_probability() {
        let e = element(0.9, vec(0.2, -0.1, 0.3));
        let d = e.decompose().unwrap();
        let recombined = d.major.to_matrix() + d.minor.to_matrix();
        assert!(recombined.max_entry_distance(&e.to_matrix()) < EPS_ROUND);
        assert_eq!(d.major.validate().rank, ElementRank::One);
        assert_eq!(d.minor.validate().rank, ElementRank::One);

        let s = state(vec(0.1, 0.5, -0.3));
        let split = d.major.probability(&s) + d.minor.probability(&s);
        assert!((e.probability(&s) - split).abs() < EPS_ROUND);
    }
}
