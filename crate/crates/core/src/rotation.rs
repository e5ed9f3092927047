//! Uniform access to the six representations.

use core::fmt;
use core::str::FromStr;

use crate::angle::angle_diff;
use crate::convert::*;
use crate::error::{Result, RotError};
use crate::euler::{EulerZxy, EulerZyx};
use crate::fused::{FusedAngles, Hemisphere};
use crate::matrix::RotationMatrix;
use crate::quaternion::Quaternion;
use crate::scalar::Real;
use crate::tilt::TiltAngles;
use crate::validate::{Invariant, Validate, ValidationReport};

/// Identifies a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Quaternion,
    RotationMatrix,
    EulerZyx,
    EulerZxy,
    Tilt,
    Fused,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Quaternion,
        Kind::RotationMatrix,
        Kind::EulerZyx,
        Kind::EulerZxy,
        Kind::Tilt,
        Kind::Fused,
    ];

    /// Short name used on the command line and in output headers.
    pub fn name(self) -> &'static str {
        match self {
            Kind::Quaternion => "quat",
            Kind::RotationMatrix => "rotmat",
            Kind::EulerZyx => "euler-zyx",
            Kind::EulerZxy => "euler-zxy",
            Kind::Tilt => "tilt",
            Kind::Fused => "fused",
        }
    }

    /// Names of the flat parameters, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Kind::Quaternion => &["w", "x", "y", "z"],
            Kind::RotationMatrix => &[
                "r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33",
            ],
            Kind::EulerZyx => &["yaw", "pitch", "roll"],
            Kind::EulerZxy => &["yaw", "roll", "pitch"],
            Kind::Tilt => &["yaw", "tilt_axis", "tilt"],
            Kind::Fused => &["yaw", "pitch", "roll", "hemisphere"],
        }
    }

    /// Whether each flat parameter is an angle.
    pub fn angle_mask(self) -> &'static [bool] {
        match self {
            Kind::Quaternion => &[false; 4],
            Kind::RotationMatrix => &[false; 9],
            Kind::EulerZyx | Kind::EulerZxy | Kind::Tilt => &[true; 3],
            Kind::Fused => &[true, true, true, false],
        }
    }

    pub fn param_count(self) -> usize {
        self.param_names().len()
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown representation '{s}' (expected one of quat, rotmat, euler-zyx, euler-zxy, tilt, fused)"))
    }
}

/// A rotation in any of the supported representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnyRotation<T> {
    Quaternion(Quaternion<T>),
    RotationMatrix(RotationMatrix<T>),
    EulerZyx(EulerZyx<T>),
    EulerZxy(EulerZxy<T>),
    Tilt(TiltAngles<T>),
    Fused(FusedAngles<T>),
}

/// Common interface of the concrete representation types.
pub trait Rotation<T: Real>: Sized + Copy + Validate {
    const KIND: Kind;

    fn into_any(self) -> AnyRotation<T>;

    /// `None` if `a` holds a different representation.
    fn from_any(a: AnyRotation<T>) -> Option<Self>;

    fn to_quat(&self) -> Result<Quaternion<T>> {
        self.into_any().to_quat()
    }

    fn to_rotmat(&self) -> Result<RotationMatrix<T>> {
        self.into_any().to_rotmat()
    }

    fn from_quat(q: &Quaternion<T>) -> Result<Extracted<Self>> {
        AnyRotation::from_quat(Self::KIND, q)
            .map(|e| e.map(|a| Self::from_any(a).expect("kind matches")))
    }

    fn from_rotmat(r: &RotationMatrix<T>) -> Result<Extracted<Self>> {
        AnyRotation::from_rotmat(Self::KIND, r)
            .map(|e| e.map(|a| Self::from_any(a).expect("kind matches")))
    }
}

macro_rules! rotation_impl {
    ($ty:ident, $variant:ident) => {
        impl<T: Real> Rotation<T> for $ty<T> {
            const KIND: Kind = Kind::$variant;

            fn into_any(self) -> AnyRotation<T> {
                AnyRotation::$variant(self)
            }

            fn from_any(a: AnyRotation<T>) -> Option<Self> {
                match a {
                    AnyRotation::$variant(v) => Some(v),
                    _ => None,
                }
            }
        }

        impl<T: Real> From<$ty<T>> for AnyRotation<T> {
            fn from(v: $ty<T>) -> Self {
                AnyRotation::$variant(v)
            }
        }
    };
}

rotation_impl!(Quaternion, Quaternion);
rotation_impl!(RotationMatrix, RotationMatrix);
rotation_impl!(EulerZyx, EulerZyx);
rotation_impl!(EulerZxy, EulerZxy);
rotation_impl!(TiltAngles, Tilt);
rotation_impl!(FusedAngles, Fused);

fn regular<T>(a: impl Into<AnyRotation<T>>) -> Extracted<AnyRotation<T>> {
    Extracted::regular(a.into())
}

fn any<T, V: Into<AnyRotation<T>>>(e: Extracted<V>) -> Extracted<AnyRotation<T>> {
    e.map(Into::into)
}

impl<T: Real> AnyRotation<T> {
    pub fn kind(&self) -> Kind {
        match self {
            AnyRotation::Quaternion(_) => Kind::Quaternion,
            AnyRotation::RotationMatrix(_) => Kind::RotationMatrix,
            AnyRotation::EulerZyx(_) => Kind::EulerZyx,
            AnyRotation::EulerZxy(_) => Kind::EulerZxy,
            AnyRotation::Tilt(_) => Kind::Tilt,
            AnyRotation::Fused(_) => Kind::Fused,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            AnyRotation::Quaternion(v) => v.validate(),
            AnyRotation::RotationMatrix(v) => v.validate(),
            AnyRotation::EulerZyx(v) => v.validate(),
            AnyRotation::EulerZxy(v) => v.validate(),
            AnyRotation::Tilt(v) => v.validate(),
            AnyRotation::Fused(v) => v.validate(),
        }
    }

    pub fn to_quat(&self) -> Result<Quaternion<T>> {
        match self {
            AnyRotation::Quaternion(q) => q.normalised(),
            AnyRotation::RotationMatrix(r) => rotmat_to_quat(r),
            AnyRotation::EulerZyx(e) => euler_zyx_to_quat(e),
            AnyRotation::EulerZxy(e) => euler_zxy_to_quat(e),
            AnyRotation::Tilt(t) => tilt_to_quat(t),
            AnyRotation::Fused(f) => fused_to_quat(f),
        }
    }

    pub fn to_rotmat(&self) -> Result<RotationMatrix<T>> {
        match self {
            AnyRotation::Quaternion(q) => quat_to_rotmat(q),
            AnyRotation::RotationMatrix(r) => r.ensure_valid().map(|_| *r),
            AnyRotation::EulerZyx(e) => euler_zyx_to_rotmat(e),
            AnyRotation::EulerZxy(e) => euler_zxy_to_rotmat(e),
            AnyRotation::Tilt(t) => tilt_to_rotmat(t),
            AnyRotation::Fused(f) => fused_to_rotmat(f),
        }
    }

    /// Extracts representation `kind` from a unit quaternion.
    pub fn from_quat(kind: Kind, q: &Quaternion<T>) -> Result<Extracted<Self>> {
        Ok(match kind {
            Kind::Quaternion => regular(q.normalised()?),
            Kind::RotationMatrix => regular(quat_to_rotmat(q)?),
            Kind::EulerZyx => any(quat_to_euler_zyx(q)?),
            Kind::EulerZxy => any(quat_to_euler_zxy(q)?),
            Kind::Tilt => any(quat_to_tilt(q)?),
            Kind::Fused => any(quat_to_fused(q)?),
        })
    }

    /// Extracts representation `kind` from a rotation matrix.
    pub fn from_rotmat(kind: Kind, r: &RotationMatrix<T>) -> Result<Extracted<Self>> {
        Ok(match kind {
            Kind::Quaternion => regular(rotmat_to_quat(r)?),
            Kind::RotationMatrix => regular(r.ensure_valid().map(|_| *r)?),
            Kind::EulerZyx => any(rotmat_to_euler_zyx(r)?),
            Kind::EulerZxy => any(rotmat_to_euler_zxy(r)?),
            Kind::Tilt => any(rotmat_to_tilt(r)?),
            Kind::Fused => any(rotmat_to_fused(r)?),
        })
    }

    /// Converts to `kind`, using a closed form where one exists and the
    /// quaternion otherwise.
    pub fn convert(&self, kind: Kind) -> Result<Extracted<Self>> {
        use AnyRotation as A;
        if self.kind() == kind {
            self.validate().into_result()?;
            return Ok(Extracted::regular(*self));
        }
        Ok(match (self, kind) {
            (A::Quaternion(q), k) => Self::from_quat(k, q)?,
            (A::RotationMatrix(r), k) => Self::from_rotmat(k, r)?,
            (A::EulerZyx(e), Kind::RotationMatrix) => regular(euler_zyx_to_rotmat(e)?),
            (A::EulerZyx(e), Kind::Tilt) => any(euler_zyx_to_tilt(e)?),
            (A::EulerZyx(e), Kind::Fused) => any(euler_zyx_to_fused(e)?),
            (A::EulerZxy(e), Kind::RotationMatrix) => regular(euler_zxy_to_rotmat(e)?),
            (A::Tilt(t), Kind::RotationMatrix) => regular(tilt_to_rotmat(t)?),
            (A::Tilt(t), Kind::Fused) => regular(tilt_to_fused(t)?),
            (A::Tilt(t), Kind::EulerZyx) => any(tilt_to_euler_zyx(t)?),
            (A::Fused(f), Kind::RotationMatrix) => regular(fused_to_rotmat(f)?),
            (A::Fused(f), Kind::Tilt) => regular(fused_to_tilt(f)?),
            (A::Fused(f), Kind::EulerZyx) => any(fused_to_euler_zyx(f)?),
            (_, k) => Self::from_quat(k, &self.to_quat()?)?,
        })
    }

    /// Converts through the quaternion, regardless of closed forms.
    pub fn convert_via_hub(&self, kind: Kind) -> Result<Extracted<Self>> {
        Self::from_quat(kind, &self.to_quat()?)
    }

    /// Converts through the rotation matrix.
    pub fn convert_via_matrix(&self, kind: Kind) -> Result<Extracted<Self>> {
        Self::from_rotmat(kind, &self.to_rotmat()?)
    }

    /// Flat parameter vector in the order given by [`Kind::param_names`].
    /// The hemisphere is encoded as `±1`.
    pub fn params(&self) -> Vec<T> {
        match self {
            AnyRotation::Quaternion(q) => q.to_array().to_vec(),
            AnyRotation::RotationMatrix(r) => r.m.iter().flatten().copied().collect(),
            AnyRotation::EulerZyx(e) => vec![e.yaw, e.pitch, e.roll],
            AnyRotation::EulerZxy(e) => vec![e.yaw, e.roll, e.pitch],
            AnyRotation::Tilt(t) => vec![t.yaw, t.tilt_axis, t.tilt],
            AnyRotation::Fused(f) => vec![f.yaw, f.pitch, f.roll, f.hemisphere.to_real()],
        }
    }

    /// Builds and validates a rotation from flat parameters. Quaternions and
    /// matrices within the renormalisation slack of the unit sphere / rotation
    /// group are projected onto it.
    pub fn from_params(kind: Kind, p: &[T]) -> Result<Self> {
        if p.len() != kind.param_count() {
            return Err(RotError::OutOfRange {
                what: "parameter count",
                value: p.len() as f64,
            });
        }
        Ok(match kind {
            Kind::Quaternion => Quaternion::new(p[0], p[1], p[2], p[3])?.into(),
            Kind::RotationMatrix => RotationMatrix::orthonormalised([
                [p[0], p[1], p[2]],
                [p[3], p[4], p[5]],
                [p[6], p[7], p[8]],
            ])?
            .into(),
            Kind::EulerZyx => EulerZyx::new(p[0], p[1], p[2])?.into(),
            Kind::EulerZxy => EulerZxy::new(p[0], p[1], p[2])?.into(),
            Kind::Tilt => TiltAngles::new(p[0], p[1], p[2])?.into(),
            Kind::Fused => {
                let h = if p[3] == T::one() {
                    Hemisphere::Upper
                } else if p[3] == -T::one() {
                    Hemisphere::Lower
                } else {
                    return Err(RotError::InvalidArgument(ValidationReport::single(
                        Invariant::Hemisphere,
                        (p[3].abs() - T::one()).abs().as_f64(),
                    )));
                };
                FusedAngles::new(p[0], p[1], p[2], h)?.into()
            }
        })
    }

    /// Largest parameter difference between two rotations of the same kind.
    ///
    /// Angles are compared on the circle, quaternions up to sign. Different
    /// kinds or a hemisphere mismatch give infinity.
    pub fn param_distance(&self, other: &Self) -> T {
        if self.kind() != other.kind() {
            return T::infinity();
        }
        if let (AnyRotation::Fused(a), AnyRotation::Fused(b)) = (self, other) {
            if a.hemisphere != b.hemisphere {
                return T::infinity();
            }
        }
        let (a, b) = (self.params(), other.params());
        if let AnyRotation::Quaternion(_) = self {
            let d = |s: T| {
                a.iter()
                    .zip(&b)
                    .map(|(x, y)| (*x - s * *y).abs())
                    .fold(T::zero(), T::max)
            };
            return d(T::one()).min(d(-T::one()));
        }
        a.iter()
            .zip(&b)
            .zip(self.kind().angle_mask())
            .map(|((x, y), angle)| {
                if *angle {
                    angle_diff(*x, *y)
                } else {
                    (*x - *y).abs()
                }
            })
            .fold(T::zero(), T::max)
    }
}
