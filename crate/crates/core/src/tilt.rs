use crate::error::Result;
use crate::scalar::Real;
use crate::validate::Validate;

/// Tilt angles: a z-rotation by the fused yaw, followed by a rotation of
/// `tilt` radians about the horizontal axis `(cos tilt_axis, sin tilt_axis, 0)`.
///
/// Domain: yaw, tilt_axis in `(-π, π]`, tilt in `[0, π]`. Rotations with zero
/// yaw are called tilt rotations. At `tilt = 0` the axis is meaningless and is
/// reported as zero by every conversion in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TiltAngles<T> {
    pub yaw: T,
    pub tilt_axis: T,
    pub tilt: T,
}

impl<T: Real> TiltAngles<T> {
    pub fn new(yaw: T, tilt_axis: T, tilt: T) -> Result<Self> {
        let t = Self {
            yaw,
            tilt_axis,
            tilt,
        };
        t.ensure_valid()?;
        Ok(t)
    }

    /// Whether the fused yaw of this rotation is undefined (`tilt = π`).
    pub fn is_yaw_singular(&self) -> bool {
        // cos²(α/2) = w² + z² of the corresponding quaternion
        let c = (self.tilt * T::lit(0.5)).cos();
        c * c <= T::lit(T::TOL.yaw_singular_sq)
    }
}
