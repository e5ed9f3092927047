use core::ops::{Mul, Neg};

use crate::error::{Result, RotError};
use crate::scalar::Real;
use crate::validate::{Invariant, ValidationReport, Violation};

/// Rotation quaternion `w + xi + yj + zk`, Hamilton convention.
///
/// `q` and `-q` describe the same rotation; every extraction in this crate is
/// invariant under that sign flip.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Quaternion<T> {
    /// Builds a unit quaternion. Inputs whose norm is within the renormalise
    /// tolerance of one are rescaled; anything further off is rejected.
    pub fn new(w: T, x: T, y: T, z: T) -> Result<Self> {
        Self { w, x, y, z }.normalised()
    }

    pub fn identity() -> Self {
        Self {
            w: T::one(),
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    /// Rotation by `angle` about the z-axis.
    pub fn from_z(angle: T) -> Self {
        let (s, c) = (angle * T::lit(0.5)).sin_cos();
        Self {
            w: c,
            x: T::zero(),
            y: T::zero(),
            z: s,
        }
    }

    /// Rotation by `angle` about the x-axis.
    pub fn from_x(angle: T) -> Self {
        let (s, c) = (angle * T::lit(0.5)).sin_cos();
        Self {
            w: c,
            x: s,
            y: T::zero(),
            z: T::zero(),
        }
    }

    /// Rotation by `angle` about the y-axis.
    pub fn from_y(angle: T) -> Self {
        let (s, c) = (angle * T::lit(0.5)).sin_cos();
        Self {
            w: c,
            x: T::zero(),
            y: s,
            z: T::zero(),
        }
    }

    #[inline]
    pub fn norm_squared(&self) -> T {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(&self) -> T {
        self.norm_squared().sqrt()
    }

    #[inline]
    pub fn conjugate(&self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Returns the unit quaternion, renormalising small deviations.
    pub fn normalised(self) -> Result<Self> {
        for (name, v) in [("w", self.w), ("x", self.x), ("y", self.y), ("z", self.z)] {
            if !v.is_finite() {
                return Err(RotError::NonFinite(name));
            }
        }
        let n2 = self.norm_squared();
        if (n2 - T::one()).abs() <= T::lit(T::TOL.unit_norm) {
            return Ok(self);
        }
        let n = n2.sqrt();
        if (n - T::one()).abs() > T::lit(T::TOL.renormalise) {
            let mut report = ValidationReport::default();
            report.push(Violation {
                invariant: Invariant::UnitNorm,
                residual: (n2 - T::one()).abs().as_f64(),
            });
            return Err(RotError::InvalidArgument(report));
        }
        Ok(Self {
            w: self.w / n,
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        })
    }

    /// Representative of `±q` with `w ≥ 0`; when `w = 0` the first non-zero of
    /// `(x, y, z)` is made positive.
    pub fn canonical(self) -> Self {
        let zero = T::zero();
        let flip = if self.w != zero {
            self.w < zero
        } else if self.x != zero {
            self.x < zero
        } else if self.y != zero {
            self.y < zero
        } else {
            self.z < zero
        };
        if flip {
            -self
        } else {
            self
        }
    }

    /// Rotation angle of `self⁻¹ ⊗ other`, in `[0, π]`.
    pub fn geodesic_distance(&self, other: &Self) -> T {
        let d = self.conjugate() * *other;
        let v = (d.x * d.x + d.y * d.y + d.z * d.z).sqrt();
        T::lit(2.0) * v.atan2(d.w.abs())
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl<T: Real> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            w: -self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Hamilton product; `a * b` applies `b` first when acting on vectors.
impl<T: Real> Mul for Quaternion<T> {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let a = self;
        Self {
            w: a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            x: a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            y: a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            z: a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    type Quaternion = crate::quaternion::Quaternion<f64>;
    use core::f64::consts::FRAC_PI_2;

    #[test]
    fn constructor_renormalises_small_drift() {
        let q = Quaternion::new(1.0 + 1e-8, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(q.w, 1.0);
        let q = Quaternion::new(0.6, 0.8 * (1.0 + 2e-7), 0.0, 0.0).unwrap();
        assert!((q.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constructor_rejects_gross_error() {
        let err = Quaternion::new(2.0, 0.0, 0.0, 0.0).unwrap_err();
        match err {
            RotError::InvalidArgument(r) => {
                assert_eq!(r.violations()[0].invariant, Invariant::UnitNorm)
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Quaternion::new(0.0, 0.0, 0.0, 0.0).is_err());
        assert!(Quaternion::new(f64::NAN, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn canonical_sign() {
        let q = Quaternion {
            w: -0.5,
            x: 0.5,
            y: -0.5,
            z: 0.5,
        };
        assert_eq!(q.canonical().w, 0.5);
        let q = Quaternion {
            w: 0.0,
            x: 0.0,
            y: -1.0,
            z: 0.0,
        };
        assert_eq!(
            q.canonical(),
            Quaternion {
                w: 0.0,
                x: 0.0,
                y: 1.0,
                z: 0.0
            }
        );
        let q = Quaternion {
            w: 0.0,
            x: 0.0,
            y: 0.0,
            z: -1.0,
        };
        assert_eq!(q.canonical().z, 1.0);
    }

    #[test]
    fn z_rotations_commute_and_add() {
        let a = Quaternion::from_z(0.3);
        let b = Quaternion::from_z(1.1);
        assert!((a * b).geodesic_distance(&Quaternion::from_z(1.4)) < 1e-15);
        assert!((a * b).geodesic_distance(&(b * a)) < 1e-15);
    }

    #[test]
    fn geodesic_distance_ignores_sign() {
        let q = Quaternion::from_x(FRAC_PI_2);
        assert!(q.geodesic_distance(&-q) < 1e-15);
        assert!((Quaternion::identity().geodesic_distance(&q) - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn hamilton_basis() {
        let i = Quaternion {
            w: 0.0,
            x: 1.0,
            y: 0.0,
            z: 0.0,
        };
        let j = Quaternion {
            w: 0.0,
            x: 0.0,
            y: 1.0,
            z: 0.0,
        };
        let k = Quaternion {
            w: 0.0,
            x: 0.0,
            y: 0.0,
            z: 1.0,
        };
        assert_eq!(i * j, k);
        assert_eq!(j * k, i);
        assert_eq!(k * i, j);
        assert_eq!((i * j * k).w, -1.0);
    }
}
