//! Domain validation for every representation.
//!
//! Violations are data: [`Validate::validate`] never fails, it lists every
//! broken invariant together with how far outside the allowed region the
//! value is.

use core::fmt;

use crate::error::{Result, RotError};
use crate::euler::{EulerZxy, EulerZyx};
use crate::fused::FusedAngles;
use crate::matrix::RotationMatrix;
use crate::quaternion::Quaternion;
use crate::scalar::Real;
use crate::tilt::TiltAngles;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Invariant {
    Finite(&'static str),
    Range {
        field: &'static str,
        lo: f64,
        hi: f64,
    },
    UnitNorm,
    Orthonormal,
    Determinant,
    /// `sin²(pitch) + sin²(roll) ≤ 1`
    SineSum,
    /// `|pitch| + |roll| ≤ π/2`
    SineSumAngle,
    Hemisphere,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Finite(field) => write!(f, "{field} must be finite"),
            Invariant::Range { field, lo, hi } => {
                write!(f, "{field} must lie in [{lo:.6}, {hi:.6}]")
            }
            Invariant::UnitNorm => f.write_str("quaternion must have unit norm"),
            Invariant::Orthonormal => f.write_str("matrix must be orthonormal"),
            Invariant::Determinant => f.write_str("matrix determinant must be +1"),
            Invariant::SineSum => f.write_str("sine sum criterion sin^2(pitch) + sin^2(roll) <= 1"),
            Invariant::SineSumAngle => f.write_str("sine sum criterion |pitch| + |roll| <= pi/2"),
            Invariant::Hemisphere => f.write_str("hemisphere must be -1 or +1"),
        }
    }
}

/// One broken invariant and the amount by which it is exceeded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub invariant: Invariant,
    pub residual: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (residual {:.6e})", self.invariant, self.residual)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn single(invariant: Invariant, residual: f64) -> Self {
        Self {
            violations: vec![Violation {
                invariant,
                residual,
            }],
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(RotError::InvalidArgument(self))
        }
    }

    fn finite<T: Real>(&mut self, field: &'static str, v: T) -> bool {
        if v.is_finite() {
            true
        } else {
            self.push(Violation {
                invariant: Invariant::Finite(field),
                residual: f64::INFINITY,
            });
            false
        }
    }

    /// Checks `lo ≤ v ≤ hi` with the domain slack on both ends. The open end
    /// of `(-π, π]` is accepted since `-π` names the same angle as `π`.
    fn range<T: Real>(&mut self, field: &'static str, v: T, lo: T, hi: T) {
        if !self.finite(field, v) {
            return;
        }
        let slack = T::lit(T::TOL.domain);
        let excess = if v < lo - slack {
            lo - v
        } else if v > hi + slack {
            v - hi
        } else {
            return;
        };
        self.push(Violation {
            invariant: Invariant::Range {
                field,
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            },
            residual: excess.as_f64(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub trait Validate {
    fn validate(&self) -> ValidationReport;

    fn ensure_valid(&self) -> Result<()> {
        self.validate().into_result()
    }
}

impl<T: Real> Validate for Quaternion<T> {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let all_finite = [("w", self.w), ("x", self.x), ("y", self.y), ("z", self.z)]
            .into_iter()
            .fold(true, |ok, (name, v)| r.finite(name, v) && ok);
        if all_finite {
            let dev = (self.norm_squared() - T::one()).abs();
            if dev > T::lit(T::TOL.unit_norm) {
                r.push(Violation {
                    invariant: Invariant::UnitNorm,
                    residual: dev.as_f64(),
                });
            }
        }
        r
    }
}

impl<T: Real> Validate for RotationMatrix<T> {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let mut all_finite = true;
        for &v in self.m.iter().flatten() {
            all_finite &= r.finite("matrix entry", v);
        }
        if all_finite {
            let tol = T::lit(T::TOL.unit_norm);
            let ortho = self.orthonormality_error();
            if ortho > tol {
                r.push(Violation {
                    invariant: Invariant::Orthonormal,
                    residual: ortho.as_f64(),
                });
            }
            let det = (self.determinant() - T::one()).abs();
            if det > tol {
                r.push(Violation {
                    invariant: Invariant::Determinant,
                    residual: det.as_f64(),
                });
            }
        }
        r
    }
}

impl<T: Real> Validate for EulerZyx<T> {
    fn validate(&self) -> ValidationReport {
        let (pi, half_pi) = (T::PI(), T::FRAC_PI_2());
        let mut r = ValidationReport::default();
        r.range("yaw", self.yaw, -pi, pi);
        r.range("pitch", self.pitch, -half_pi, half_pi);
        r.range("roll", self.roll, -pi, pi);
        r
    }
}

impl<T: Real> Validate for EulerZxy<T> {
    fn validate(&self) -> ValidationReport {
        let (pi, half_pi) = (T::PI(), T::FRAC_PI_2());
        let mut r = ValidationReport::default();
        r.range("yaw", self.yaw, -pi, pi);
        r.range("roll", self.roll, -half_pi, half_pi);
        r.range("pitch", self.pitch, -pi, pi);
        r
    }
}

impl<T: Real> Validate for TiltAngles<T> {
    fn validate(&self) -> ValidationReport {
        let pi = T::PI();
        let mut r = ValidationReport::default();
        r.range("yaw", self.yaw, -pi, pi);
        r.range("tilt_axis", self.tilt_axis, -pi, pi);
        r.range("tilt", self.tilt, T::zero(), pi);
        r
    }
}

impl<T: Real> Validate for FusedAngles<T> {
    fn validate(&self) -> ValidationReport {
        let (pi, half_pi) = (T::PI(), T::FRAC_PI_2());
        let mut r = ValidationReport::default();
        r.range("yaw", self.yaw, -pi, pi);
        r.range("pitch", self.pitch, -half_pi, half_pi);
        r.range("roll", self.roll, -half_pi, half_pi);
        if self.pitch.is_finite() && self.roll.is_finite() {
            let (sp, sr) = (self.pitch.sin(), self.roll.sin());
            let excess = sp * sp + sr * sr - T::one();
            if excess > T::lit(T::TOL.sine_sum) {
                r.push(Violation {
                    invariant: Invariant::SineSum,
                    residual: excess.as_f64(),
                });
            }
            let excess = self.pitch.abs() + self.roll.abs() - half_pi;
            if excess > T::lit(T::TOL.sine_sum_angle) {
                r.push(Violation {
                    invariant: Invariant::SineSumAngle,
                    residual: excess.as_f64(),
                });
            }
        }
        r
    }
}
