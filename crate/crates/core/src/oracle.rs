//! Independent 2x2 Hermitian-matrix arithmetic.
//!
//! This module is the ground truth the Bloch-vector calculus is checked
//! against: probabilities via the trace rule, positivity via closed-form
//! eigenvalues, completeness via an entrywise sum. It deliberately knows
//! nothing about Bloch vectors and keeps its own complex scalars as plain
//! real pairs, so the two computation routes share no code.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::{EPS_HERM, EPS_NORM, EPS_SUM};

/// Complex scalar as an explicit real pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    /// The imaginary unit.
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn modulus_squared(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn scale(self, s: f64) -> Self {
        Complex {
            re: self.re * s,
            im: self.im * s,
        }
    }
}

impl Add for Complex {
    type Output = Complex;

    fn add(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Complex {
    type Output = Complex;

    fn sub(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Complex {
    type Output = Complex;

    fn mul(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for Complex {
    type Output = Complex;

    fn neg(self) -> Complex {
        Complex {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Axis label for the three Pauli matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A 2x2 Hermitian matrix.
///
/// The diagonal is stored as real scalars and the lower-left entry is
/// always the conjugate of the upper-right one, so Hermiticity holds by
/// construction. Importing raw complex entries goes through
/// [`HermitianMat2::from_entries`], which checks the residues instead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HermitianMat2 {
    m00: f64,
    m01: Complex,
    m11: f64,
}

impl HermitianMat2 {
    pub const ZERO: HermitianMat2 = HermitianMat2 {
        m00: 0.0,
        m01: Complex::ZERO,
        m11: 0.0,
    };
    pub const IDENTITY: HermitianMat2 = HermitianMat2 {
        m00: 1.0,
        m01: Complex::ZERO,
        m11: 1.0,
    };

    /// Hermitian-by-construction constructor: real diagonal plus the
    /// upper-right entry. The lower-left entry is implied.
    pub fn new(m00: f64, m01: Complex, m11: f64) -> Result<Self> {
        if m00.is_finite() && m11.is_finite() && m01.re.is_finite() && m01.im.is_finite() {
            Ok(HermitianMat2 { m00, m01, m11 })
        } else {
            Err(Error::NonFinite {
                context: "HermitianMat2::new",
            })
        }
    }

    /// Import four raw complex entries, checking Hermiticity: diagonal
    /// imaginary parts and the `m10 - conj(m01)` residue must be within
    /// `EPS_HERM`.
    pub fn from_entries(m00: Complex, m01: Complex, m10: Complex, m11: Complex) -> Result<Self> {
        let herm_residue = m10 - m01.conj();
        if m00.im.abs() > EPS_HERM
            || m11.im.abs() > EPS_HERM
            || herm_residue.modulus_squared().sqrt() > EPS_HERM
        {
            return Err(Error::NotAState {
                reason: "matrix is not Hermitian".into(),
            });
        }
        Self::new(m00.re, m01, m11.re)
    }

    /// The standard Pauli matrix along `axis`.
    pub fn pauli(axis: Axis) -> Self {
        match axis {
            Axis::X => HermitianMat2 {
                m00: 0.0,
                m01: Complex::ONE,
                m11: 0.0,
            },
            Axis::Y => HermitianMat2 {
                m00: 0.0,
                m01: -Complex::I,
                m11: 0.0,
            },
            Axis::Z => HermitianMat2 {
                m00: 1.0,
                m01: Complex::ZERO,
                m11: -1.0,
            },
        }
    }

    pub fn m00(&self) -> f64 {
        self.m00
    }

    pub fn m01(&self) -> Complex {
        self.m01
    }

    pub fn m10(&self) -> Complex {
        self.m01.conj()
    }

    pub fn m11(&self) -> f64 {
        self.m11
    }

    /// All four entries, row major.
    pub fn entries(&self) -> [[Complex; 2]; 2] {
        [
            [Complex::real(self.m00), self.m01],
            [self.m10(), Complex::real(self.m11)],
        ]
    }

    /// Trace; real for a Hermitian matrix.
    pub fn trace(&self) -> f64 {
        self.m00 + self.m11
    }

    pub fn scale(&self, c: f64) -> Self {
        HermitianMat2 {
            m00: self.m00 * c,
            m01: self.m01.scale(c),
            m11: self.m11 * c,
        }
    }

    /// Closed-form eigenvalues, returned as `(lo, hi)`.
    ///
    /// `tr/2 +- sqrt(((m00-m11)/2)^2 + |m01|^2)`; the discriminant is
    /// nonnegative, so no branch is needed.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mid = (self.m00 + self.m11) / 2.0;
        let half_gap = (self.m00 - self.m11) / 2.0;
        let radius = (half_gap * half_gap + self.m01.modulus_squared()).sqrt();
        (mid - radius, mid + radius)
    }

    /// Positive semidefinite within the `EPS_NORM` slack.
    pub fn is_positive(&self) -> bool {
        self.eigenvalues().0 >= -EPS_NORM
    }

    /// Maximum absolute entry difference to `other`.
    pub fn max_entry_distance(&self, other: &HermitianMat2) -> f64 {
        let d01 = self.m01 - other.m01;
        [
            (self.m00 - other.m00).abs(),
            (self.m11 - other.m11).abs(),
            d01.re.abs(),
            d01.im.abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

impl Add for HermitianMat2 {
    type Output = HermitianMat2;

    fn add(self, rhs: HermitianMat2) -> HermitianMat2 {
        HermitianMat2 {
            m00: self.m00 + rhs.m00,
            m01: self.m01 + rhs.m01,
            m11: self.m11 + rhs.m11,
        }
    }
}

impl Sub for HermitianMat2 {
    type Output = HermitianMat2;

    fn sub(self, rhs: HermitianMat2) -> HermitianMat2 {
        HermitianMat2 {
            m00: self.m00 - rhs.m00,
            m01: self.m01 - rhs.m01,
            m11: self.m11 - rhs.m11,
        }
    }
}

/// `tr(ab)` for Hermitian `a`, `b`; real and symmetric in its arguments.
pub fn trace_product(a: &HermitianMat2, b: &HermitianMat2) -> f64 {
    // tr(ab) = a00 b00 + a11 b11 + a01 b10 + a10 b01
    //        = a00 b00 + a11 b11 + 2 Re(a01 conj(b01))
    a.m00 * b.m00 + a.m11 * b.m11 + 2.0 * (a.m01.re * b.m01.re + a.m01.im * b.m01.im)
}

/// Whether the matrices sum to the identity entrywise within `EPS_SUM`.
pub fn sums_to_identity(mats: &[HermitianMat2]) -> bool {
    let total = mats.iter().fold(HermitianMat2::ZERO, |acc, m| acc + *m);
    total.max_entry_distance(&HermitianMat2::IDENTITY) <= EPS_SUM
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::EPS_ROUND;

    fn ket0_projector() -> HermitianMat2 {
        HermitianMat2::new(1.0, Complex::ZERO, 0.0).unwrap()
    }

    fn ket1_projector() -> HermitianMat2 {
        HermitianMat2::new(0.0, Complex::ZERO, 1.0).unwrap()
    }

    fn plus_projector() -> HermitianMat2 {
        HermitianMat2::new(0.5, Complex::real(0.5), 0.5).unwrap()
    }

    #[test]
    fn pauli_matrices_have_standard_entries() {
        let x = HermitianMat2::pauli(Axis::X);
        assert_eq!(x.m00(), 0.0);
        assert_eq!(x.m01(), Complex::ONE);
        assert_eq!(x.m10(), Complex::ONE);
        assert_eq!(x.m11(), 0.0);

        let y = HermitianMat2::pauli(Axis::Y);
        assert_eq!(y.m01(), Complex::new(0.0, -1.0));
        assert_eq!(y.m10(), Complex::new(0.0, 1.0));

        let z = HermitianMat2::pauli(Axis::Z);
        assert_eq!(z.m00(), 1.0);
        assert_eq!(z.m11(), -1.0);
    }

    #[test]
    fn trace_of_identity_is_dimension() {
        assert_eq!(HermitianMat2::IDENTITY.trace(), 2.0);
    }

    #[test]
    fn add_and_scale_are_entrywise() {
        let z = HermitianMat2::pauli(Axis::Z);
        let doubled = z + z;
        assert_eq!(doubled.m00(), 2.0);
        assert_eq!(doubled.m11(), -2.0);
        let zeroed = HermitianMat2::pauli(Axis::X).scale(0.0);
        assert_eq!(zeroed.max_entry_distance(&HermitianMat2::ZERO), 0.0);
    }

    #[test]
    fn pauli_trace_products() {
        let x = HermitianMat2::pauli(Axis::X);
        let z = HermitianMat2::pauli(Axis::Z);
        assert_eq!(trace_product(&z, &z), 2.0);
        assert_eq!(trace_product(&x, &z), 0.0);
    }

    #[test]
    fn projector_overlap_is_half() {
        // tr(|0><0| |+><+|) = 1/2, multiplied out by hand.
        let p = trace_product(&ket0_projector(), &plus_projector());
        assert!((p - 0.5).abs() < EPS_ROUND);
    }

    #[test]
    fn eigenvalues_closed_form() {
        assert_eq!(HermitianMat2::IDENTITY.eigenvalues(), (1.0, 1.0));
        assert_eq!(HermitianMat2::pauli(Axis::Z).eigenvalues(), (-1.0, 1.0));
        let diag = HermitianMat2::new(0.75, Complex::ZERO, 0.25).unwrap();
        assert_eq!(diag.eigenvalues(), (0.25, 0.75));
    }

    #[test]
    fn eigenvalues_satisfy_characteristic_polynomial() {
        let m = HermitianMat2::new(0.3, Complex::new(0.2, -0.4), -0.7).unwrap();
        let det = m.m00() * m.m11() - m.m01().modulus_squared();
        let tr = m.trace();
        let (lo, hi) = m.eigenvalues();
        for lambda in [lo, hi] {
            assert!((lambda * lambda - tr * lambda + det).abs() < EPS_ROUND);
        }
    }

    #[test]
    fn positivity_detects_negative_eigenvalue() {
        assert!(!HermitianMat2::pauli(Axis::Z).is_positive());
        assert!(HermitianMat2::IDENTITY.is_positive());
        assert!(ket0_projector().is_positive());
    }

    #[test]
    fn projectors_complete_to_identity() {
        assert!(sums_to_identity(&[ket0_projector(), ket1_projector()]));
        assert!(!sums_to_identity(&[ket0_projector(), ket0_projector()]));
    }

    #[test]
    fn from_entries_rejects_non_hermitian() {
        let bad_diag = HermitianMat2::from_entries(
            Complex::new(1.0, 0.5),
            Complex::ZERO,
            Complex::ZERO,
            Complex::ONE,
        );
        assert!(bad_diag.is_err());

        let bad_offdiag = HermitianMat2::from_entries(
            Complex::ONE,
            Complex::new(0.0, 0.3),
            Complex::new(0.0, 0.3),
            Complex::ONE,
        );
        assert!(bad_offdiag.is_err());

        let ok = HermitianMat2::from_entries(
            Complex::ONE,
            Complex::new(0.0, 0.3),
            Complex::new(0.0, -0.3),
            Complex::ONE,
        );
        assert!(ok.is_ok());
    }
}
