//! Scalar abstraction shared by every rotation type.
//!
//! All representations are generic over [`Real`], which is implemented for
//! `f32` and `f64`. Numerical thresholds (unit-norm checks, clamping slack,
//! singularity detection) live in a per-type [`Tolerances`] table so that the
//! same code can run at either precision.

use core::fmt::{Debug, Display};
use num_traits::{Float, FloatConst};

/// Thresholds used by validation and extraction, expressed in `f64` and cast
/// to the working precision on use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed deviation of `|q|²` from one, and of `RᵀR` from `I₃`.
    pub unit_norm: f64,
    /// Constructors renormalise inputs whose norm is off by at most this much.
    pub renormalise: f64,
    /// Slack before an inverse-trig argument outside `[-1, 1]` is an error.
    pub clamp: f64,
    /// Slack on `sin²θ + sin²φ ≤ 1`.
    pub sine_sum: f64,
    /// Slack on `|θ| + |φ| ≤ π/2`.
    pub sine_sum_angle: f64,
    /// Slack on interval bounds of angle parameters.
    pub domain: f64,
    /// `w² + z²` at or below this is the fused yaw singularity.
    pub yaw_singular_sq: f64,
    /// `R₃₃ ≤ -1 + rotmat_singular` is the fused yaw singularity.
    pub rotmat_singular: f64,
    /// `|sin(pitch)| ≥ 1 - gimbal_lock` is treated as gimbal lock.
    pub gimbal_lock: f64,
    /// Tilt angles at or below this have the tilt axis pinned to zero.
    pub tilt_axis: f64,
}

/// Floating point scalar usable by the rotation types.
pub trait Real: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    const TOL: Tolerances;

    /// Converts an `f64` literal into the working precision.
    #[inline]
    fn lit(v: f64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("f64 literal fits in Real")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const TOL: Tolerances = Tolerances {
        unit_norm: 1e-12,
        renormalise: 1e-6,
        clamp: 1e-9,
        sine_sum: 1e-12,
        sine_sum_angle: 1e-9,
        domain: 1e-12,
        yaw_singular_sq: 1e-24,
        rotmat_singular: 1e-12,
        gimbal_lock: 1e-12,
        tilt_axis: 1e-12,
    };
}

impl Real for f32 {
    const TOL: Tolerances = Tolerances {
        unit_norm: 1e-5,
        renormalise: 1e-3,
        clamp: 1e-5,
        sine_sum: 1e-5,
        sine_sum_angle: 1e-3,
        domain: 1e-5,
        yaw_singular_sq: 1e-12,
        rotmat_singular: 1e-5,
        gimbal_lock: 1e-6,
        tilt_axis: 1e-6,
    };
}
