//! Fused angles, tilt angles and Euler angles.
//!
//! Six rotation representations with closed-form conversions between them,
//! composition, inverses, the fused yaw operator and z-rotation application.
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases at the
//! crate root fix the precision.
//!
//! ```
//! use fusedrot::{convert::rotmat_to_fused, Hemisphere, RotationMatrixF64};
//!
//! let r = RotationMatrixF64::rot_x(3.0 * std::f64::consts::FRAC_PI_4);
//! let f = rotmat_to_fused(&r).unwrap().value;
//! assert!((f.roll - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
//! assert_eq!(f.hemisphere, Hemisphere::Lower);
//! ```

pub mod angle;
pub mod convert;
mod error;
mod euler;
mod fused;
mod matrix;
pub mod ops;
mod quaternion;
pub mod relations;
mod rotation;
mod scalar;
mod tilt;
mod validate;

pub use angle::{angle_delta, angle_diff, wrap, wrap_radians, Angle};
pub use convert::Extracted;
pub use error::{Result, RotError, Singularity};
pub use euler::{EulerZxy, EulerZyx};
pub use fused::{FusedAngles, Hemisphere};
pub use matrix::RotationMatrix;
pub use ops::YawResult;
pub use quaternion::Quaternion;
pub use rotation::{AnyRotation, Kind, Rotation};
pub use scalar::{Real, Tolerances};
pub use tilt::TiltAngles;
pub use validate::{Invariant, Validate, ValidationReport, Violation};

pub type QuaternionF64 = Quaternion<f64>;
pub type QuaternionF32 = Quaternion<f32>;
pub type RotationMatrixF64 = RotationMatrix<f64>;
pub type RotationMatrixF32 = RotationMatrix<f32>;
pub type EulerZyxF64 = EulerZyx<f64>;
pub type EulerZyxF32 = EulerZyx<f32>;
pub type EulerZxyF64 = EulerZxy<f64>;
pub type EulerZxyF32 = EulerZxy<f32>;
pub type TiltAnglesF64 = TiltAngles<f64>;
pub type TiltAnglesF32 = TiltAngles<f32>;
pub type FusedAnglesF64 = FusedAngles<f64>;
pub type FusedAnglesF32 = FusedAngles<f32>;
pub type AnyRotationF64 = AnyRotation<f64>;
pub type AnyRotationF32 = AnyRotation<f32>;
