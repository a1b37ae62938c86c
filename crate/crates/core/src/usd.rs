//! Optimal error-free discrimination of two pure states.
//!
//! Given two known pure states, a three-outcome measurement can identify
//! the received state without ever being wrong, at the price of an
//! inconclusive outcome. The two detection vectors point antiparallel to
//! the states (so the wrong detector can never fire), share the largest
//! weight positivity allows, and the third element closes the set.
//!
//! With `alpha` the angle between the state vectors, the shared weight is
//! `a = 1/(1 + cos(alpha/2))` and the success probability
//! `(1 - cos alpha) / (2 (1 + cos(alpha/2)))`, which simplifies to
//! `1 - cos(alpha/2)`. A grid search over the same three-element family
//! confirms the closed form numerically.

use serde::Serialize;

use crate::bloch::{BlochState, PovmElement, PovmSet};
use crate::error::{Error, Result};
use crate::tolerance::{EPS_ANG, EPS_NORM, EPS_ROUND};
use crate::vec3::Vec3;

/// Index of the outcome that fires only for the second state.
pub const OUTCOME_DETECT_PHI: usize = 0;
/// Index of the outcome that fires only for the first state.
pub const OUTCOME_DETECT_PSI: usize = 1;
/// Index of the outcome carrying no information.
pub const OUTCOME_INCONCLUSIVE: usize = 2;

/// A constructed discrimination measurement for two pure states.
///
/// The set holds exactly three elements in the order
/// (detect-phi, detect-psi, inconclusive).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UsdDesign {
    psi: Vec3,
    phi: Vec3,
    angle: f64,
    weight: f64,
    inconclusive_weight: f64,
    success_probability: f64,
    degenerate: bool,
    povm: PovmSet,
}

impl UsdDesign {
    /// First input state (unit vector).
    pub fn psi(&self) -> Vec3 {
        self.psi
    }

    /// Second input state (unit vector).
    pub fn phi(&self) -> Vec3 {
        self.phi
    }

    /// Angle between the two state vectors, in [0, pi].
    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// Shared weight of the two detection elements.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// Weight of the inconclusive element, `2(1 - a)`.
    pub fn inconclusive_weight(&self) -> f64 {
        self.inconclusive_weight
    }

    /// Probability of a conclusive outcome for either input state.
    pub fn success_probability(&self) -> f64 {
        self.success_probability
    }

    /// True when the inputs were (numerically) identical; the design is
    /// then the continuous limit `a = 1/2`, success probability zero.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn povm(&self) -> &PovmSet {
        &self.povm
    }

    /// Evaluate the design's defining properties on its own input states.
    /// Violations are reported data, not errors.
    pub fn verify(&self) -> ErrorFreeReport {
        let psi = BlochState::new(self.psi).expect("unit vector is a state");
        let phi = BlochState::new(self.phi).expect("unit vector is a state");
        let elements = self.povm.elements();

        let report = ErrorFreeReport {
            p_detect_phi_given_psi: elements[OUTCOME_DETECT_PHI].probability(&psi),
            p_detect_psi_given_phi: elements[OUTCOME_DETECT_PSI].probability(&phi),
            p_detect_phi_given_phi: elements[OUTCOME_DETECT_PHI].probability(&phi),
            p_detect_psi_given_psi: elements[OUTCOME_DETECT_PSI].probability(&psi),
            p_inconclusive_given_psi: elements[OUTCOME_INCONCLUSIVE].probability(&psi),
            p_inconclusive_given_phi: elements[OUTCOME_INCONCLUSIVE].probability(&phi),
            error_free: false,
            success_symmetric: false,
            inconclusive_balanced: false,
        };

        ErrorFreeReport {
            error_free: report.p_detect_phi_given_psi <= EPS_ROUND
                && report.p_detect_psi_given_phi <= EPS_ROUND,
            success_symmetric: (report.p_detect_phi_given_phi - self.success_probability).abs()
                <= EPS_ROUND
                && (report.p_detect_psi_given_psi - self.success_probability).abs() <= EPS_ROUND,
            inconclusive_balanced: (report.p_inconclusive_given_psi
                - report.p_inconclusive_given_phi)
                .abs()
                <= EPS_ROUND,
            ..report
        }
    }
}

/// Probabilities of each outcome on each input state, with the three
/// defining checks: the wrong detector never fires, both conclusive
/// probabilities equal the design's success probability, and the
/// inconclusive outcome is blind to which state was sent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorFreeReport {
    pub p_detect_phi_given_psi: f64,
    pub p_detect_psi_given_phi: f64,
    pub p_detect_phi_given_phi: f64,
    pub p_detect_psi_given_psi: f64,
    pub p_inconclusive_given_psi: f64,
    pub p_inconclusive_given_phi: f64,
    pub error_free: bool,
    pub success_symmetric: bool,
    pub inconclusive_balanced: bool,
}

impl ErrorFreeReport {
    pub fn all_pass(&self) -> bool {
        self.error_free && self.success_symmetric && self.inconclusive_balanced
    }
}

/// Probability that a projective outcome fires, `(1 + cos beta)/2`, for a
/// pure state at angle `beta` from the outcome vector. Nonzero for every
/// `beta` strictly between 0 and pi — the reason a two-outcome projective
/// measurement cannot discriminate nonorthogonal states without error.
pub fn von_neumann_probability(beta: f64) -> f64 {
    (1.0 + beta.cos()) / 2.0
}

/// Success probability of the optimal design at state angle `alpha`,
/// `(1 - cos alpha) / (2 (1 + cos(alpha/2)))`. Monotone nondecreasing on
/// `[0, pi]` and algebraically equal to `1 - cos(alpha/2)`.
pub fn success_probability(alpha: f64) -> f64 {
    (1.0 - alpha.cos()) / (2.0 * (1.0 + (alpha / 2.0).cos()))
}

/// Construct the optimal error-free discrimination measurement for two
/// pure states given as unit Bloch vectors.
///
/// Identical inputs (angle below `EPS_ANG`) yield the degenerate limit
/// flagged via [`UsdDesign::is_degenerate`] rather than an error, so
/// callers can sweep the full angle range.
pub fn design(psi: Vec3, phi: Vec3) -> Result<UsdDesign> {
    let psi = unit_state(psi)?;
    let phi = unit_state(phi)?;
    let angle = psi.angle_to(phi);
    let weight = 1.0 / (1.0 + (angle / 2.0).cos());

    let detect_phi = PovmElement::new(weight, -psi * weight)?;
    let detect_psi = PovmElement::new(weight, -phi * weight)?;
    // Closure: the third vector is the exact negative of the other two,
    // with the weight the length condition dictates.
    let inconclusive = PovmElement::new(
        2.0 * (1.0 - weight),
        -(detect_phi.vector() + detect_psi.vector()),
    )?;

    Ok(UsdDesign {
        psi,
        phi,
        angle,
        weight,
        inconclusive_weight: inconclusive.weight(),
        success_probability: success_probability(angle),
        degenerate: angle <= EPS_ANG,
        povm: PovmSet::new(vec![detect_phi, detect_psi, inconclusive])?,
    })
}

/// Result of the numerical optimality check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSearch {
    /// Best feasible detection weight found.
    pub weight: f64,
    /// Success probability at that weight.
    pub success_probability: f64,
}

/// Scan detection weights over `[0, 1]` at resolution `step`, keeping
/// only weights where the symmetric three-element construction passes
/// full set validation, and maximize the conclusive probability
/// `a (1 - cos alpha) / 2`.
///
/// Feasibility is decided by the set validator alone (the inconclusive
/// element's positivity caps the weight), so this search is independent
/// of the closed-form weight it confirms. Ties break toward the smaller
/// weight.
pub fn optimal_weight_grid_search(alpha: f64, step: f64) -> Result<GridSearch> {
    assert!(step > 0.0, "step must be positive");
    let psi = Vec3::Z;
    let phi = Vec3::new(alpha.sin(), 0.0, alpha.cos())?;
    let conclusive_gain = (1.0 - alpha.cos()) / 2.0;

    let points = (1.0 / step).ceil() as u64;
    let mut best: Option<GridSearch> = None;
    for i in 0..=points {
        let weight = (i as f64 * step).min(1.0);
        let detect_phi = PovmElement::new(weight, -psi * weight)?;
        let detect_psi = PovmElement::new(weight, -phi * weight)?;
        let inconclusive = PovmElement::new(
            2.0 * (1.0 - weight),
            -(detect_phi.vector() + detect_psi.vector()),
        )?;
        let set = PovmSet::new(vec![detect_phi, detect_psi, inconclusive])?;
        if !set.validate().valid {
            continue;
        }
        let p = weight * conclusive_gain;
        if best.is_none_or(|b| p > b.success_probability) {
            best = Some(GridSearch {
                weight,
                success_probability: p,
            });
        }
    }
    best.ok_or(Error::NoFeasible)
}

fn unit_state(v: Vec3) -> Result<Vec3> {
    let norm = v.norm();
    if (norm - 1.0).abs() > EPS_NORM {
        return Err(Error::NotPure { norm });
    }
    Ok(v.normalized().expect("norm is near one"))
}
