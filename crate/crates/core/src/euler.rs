//! Intrinsic Tait-Bryan Euler angles in the ZYX and ZXY orders.

use crate::error::Result;
use crate::scalar::Real;
use crate::validate::Validate;

/// Intrinsic ZYX Euler angles: yaw about z, pitch about the new y, roll about
/// the newest x, so that `R = R_z(yaw) R_y(pitch) R_x(roll)`.
///
/// Domain: yaw, roll in `(-π, π]`, pitch in `[-π/2, π/2]`. The
/// representation is not unique at gimbal lock (`pitch = ±π/2`).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerZyx<T> {
    pub yaw: T,
    pub pitch: T,
    pub roll: T,
}

impl<T: Real> EulerZyx<T> {
    pub fn new(yaw: T, pitch: T, roll: T) -> Result<Self> {
        let e = Self { yaw, pitch, roll };
        e.ensure_valid()?;
        Ok(e)
    }
}

/// Intrinsic ZXY Euler angles: yaw about z, roll about the new x, pitch about
/// the newest y, so that `R = R_z(yaw) R_x(roll) R_y(pitch)`.
///
/// Domain: yaw, pitch in `(-π, π]`, roll in `[-π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EulerZxy<T> {
    pub yaw: T,
    pub roll: T,
    pub pitch: T,
}

impl<T: Real> EulerZxy<T> {
    pub fn new(yaw: T, roll: T, pitch: T) -> Result<Self> {
        let e = Self { yaw, roll, pitch };
        e.ensure_valid()?;
        Ok(e)
    }
}
