//! Real 3-vectors in Bloch coordinates.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::EPS_NORM;

/// A real 3-vector in Bloch coordinates.
///
/// Carries states (length at most one), measurement element vectors and
/// decomposition axes alike. Every public constructor rejects NaN and
/// infinite components, so downstream arithmetic never has to re-check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Vec3 {
    x: f64,
    y: f64,
    z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    /// Unit vector along +x.
    pub const X: Vec3 = Vec3 {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    /// Unit vector along +y.
    pub const Y: Vec3 = Vec3 {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    /// Unit vector along +z.
    pub const Z: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Vec3 { x, y, z })
        } else {
            Err(Error::NonFinite {
                context: "Vec3::new",
            })
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn dot(&self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(*self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in the same direction, or `None` for a (numerically)
    /// zero vector.
    pub fn normalized(&self) -> Option<Vec3> {
        let n = self.norm();
        if n <= EPS_NORM {
            None
        } else {
            Some(Vec3 {
                x: self.x / n,
                y: self.y / n,
                z: self.z / n,
            })
        }
    }

    /// Angle to `other` in radians, in [0, pi]. The cosine is clamped so
    /// rounding on near-(anti)parallel inputs cannot produce NaN.
    pub fn angle_to(&self, other: Vec3) -> f64 {
        let denom = self.norm() * other.norm();
        if denom == 0.0 {
            return 0.0;
        }
        (self.dot(other) / denom).clamp(-1.0, 1.0).acos()
    }

    /// Rotation about a unit `axis` by `angle` radians (Rodrigues' formula).
    pub fn rotated_about(&self, axis: Vec3, angle: f64) -> Vec3 {
        let (sin, cos) = angle.sin_cos();
        let cross = axis.cross(*self);
        let axial = axis * (axis.dot(*self) * (1.0 - cos));
        *self * cos + cross * sin + axial
    }
}

impl Add for Vec3 {
    type Output = Vec3;

    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3 {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl Sub for Vec3 {
    type Output = Vec3;

    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3 {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

impl Neg for Vec3 {
    type Output = Vec3;

    fn neg(self) -> Vec3 {
        Vec3 {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;

    fn mul(self, rhs: f64) -> Vec3 {
        Vec3 {
            x: self.x * rhs,
            y: self.y * rhs,
            z: self.z * rhs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_components() {
        assert!(Vec3::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(Vec3::new(0.0, f64::INFINITY, 0.0).is_err());
        assert!(Vec3::new(0.0, 0.0, f64::NEG_INFINITY).is_err());
        assert!(Vec3::new(0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn angle_between_axes() {
        assert!((Vec3::X.angle_to(Vec3::Z) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((Vec3::Z.angle_to(-Vec3::Z) - std::f64::consts::PI).abs() < 1e-15);
        assert!(Vec3::Z.angle_to(Vec3::Z).abs() < 1e-15);
    }

    #[test]
    fn rotation_preserves_norm_and_moves_axes() {
        let r = Vec3::Z.rotated_about(Vec3::Y, std::f64::consts::FRAC_PI_2);
        assert!((r.x() - 1.0).abs() < 1e-15);
        assert!(r.y().abs() < 1e-15);
        assert!(r.z().abs() < 1e-15);
        assert!((r.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalized_zero_is_none() {
        assert!(Vec3::ZERO.normalized().is_none());
        let n = Vec3::new(0.0, 3.0, 4.0).unwrap().normalized().unwrap();
        assert!((n.norm() - 1.0).abs() < 1e-15);
        assert!((n.z() - 0.8).abs() < 1e-15);
    }
}
