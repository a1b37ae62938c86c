use crate::bloch::SetReport;

/// Errors produced by constructors and operations in this crate.
///
/// Invalidity of a measurement (an element with a negative eigenvalue, a
/// set that does not close) is *data*, reported by the `validate` methods.
/// An `Error` is raised only where an operation cannot produce a meaningful
/// result at all.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A NaN or infinite component was passed to a public constructor.
    #[error("{context}: component is not finite")]
    NonFinite { context: &'static str },

    /// The input does not describe a quantum state (Bloch vector longer
    /// than one, or a matrix with wrong trace / negative eigenvalue).
    #[error("not a quantum state: {reason}")]
    NotAState { reason: String },

    /// The matrix has an eigenvalue below the positivity tolerance.
    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue})")]
    NotPositive { min_eigenvalue: f64 },

    /// A measurement set was required to be valid but failed validation.
    /// The full report is attached for diagnosis.
    #[error("POVM set failed validation")]
    InvalidSet { report: Box<SetReport> },

    /// A POVM set must contain at least one element.
    #[error("POVM set is empty")]
    EmptySet,

    /// The element has (numerically) zero weight and admits no
    /// decomposition.
    #[error("element weight is zero; nothing to decompose")]
    ZeroElement,

    /// A pure state was required but the Bloch vector is not unit length.
    #[error("state is not pure (Bloch vector norm {norm})")]
    NotPure { norm: f64 },

    /// The feasibility grid contained no admissible weight. Cannot occur
    /// for angles in (0, pi]; kept as data rather than a panic.
    #[error("no feasible weight found on the search grid")]
    NoFeasible,
}

pub type Result<T> = std::result::Result<T, Error>;
