//! Direct relations between ZYX Euler angles and fused/tilt angles, written
//! in their literal trigonometric form. These are used to cross-check the
//! conversion chain rather than to perform conversions.

use crate::angle::{acos_clamped, asin_clamped, wrap_radians};
use crate::convert::{euler_zyx_to_fused, Extracted};
use crate::error::{Result, Singularity};
use crate::euler::EulerZyx;
use crate::fused::Hemisphere;
use crate::scalar::Real;
use crate::tilt::TiltAngles;
use crate::validate::Validate;

/// Fused and tilt quantities computed directly from ZYX Euler angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerFusedRelations<T> {
    /// `atan2(sin φ, cos α)`; reproduces the Euler roll.
    pub euler_roll_check: T,
    /// `atan2(sin θ_E, cos θ_E sin φ_E)`
    pub tilt_axis: T,
    /// `acos(cos θ_E cos φ_E)`
    pub tilt: T,
    /// Fused roll, `asin(cos θ_E sin φ_E)`.
    pub fused_roll: T,
    /// `sign(cos φ_E)`
    pub hemisphere: Hemisphere,
    /// `sin²α - (sin²θ_E + sin²φ_E - sin²θ_E sin²φ_E)`
    pub sine_identity_residual: T,
}

fn gimbal_locked<T: Real>(pitch: T) -> bool {
    pitch.sin().abs() >= T::one() - T::lit(T::TOL.gimbal_lock)
}

/// Evaluates the Euler/fused relations. At gimbal lock the tilt axis is
/// ill-conditioned and the result is flagged.
pub fn euler_fused_relations<T: Real>(
    e: &EulerZyx<T>,
) -> Result<Extracted<EulerFusedRelations<T>>> {
    e.ensure_valid()?;
    let (st, ct) = e.pitch.sin_cos();
    let (sf, cf) = e.roll.sin_cos();
    let fused_roll = asin_clamped(ct * sf, "fused roll")?;
    let tilt = acos_clamped(ct * cf, "tilt")?;
    let sa = tilt.sin();
    let rel = EulerFusedRelations {
        euler_roll_check: fused_roll.sin().atan2(tilt.cos()),
        tilt_axis: wrap_radians(st.atan2(ct * sf)),
        tilt,
        fused_roll,
        hemisphere: Hemisphere::from_sign_of(cf),
        sine_identity_residual: sa * sa - (st * st + sf * sf - st * st * sf * sf),
    };
    Ok(if gimbal_locked(e.pitch) {
        Extracted::singular(rel, Singularity::GimbalLock)
    } else {
        Extracted::regular(rel)
    })
}

/// Euler yaw of a tilt-angles rotation, `wrap(ψ + γ - atan2(cos α sin γ, cos γ))`.
pub fn euler_yaw_from_tilt<T: Real>(t: &TiltAngles<T>) -> Result<Extracted<T>> {
    t.ensure_valid()?;
    let (sg, cg) = t.tilt_axis.sin_cos();
    let yaw = wrap_radians(t.yaw + t.tilt_axis - (t.tilt.cos() * sg).atan2(cg));
    let sin_pitch = t.tilt.sin() * sg;
    Ok(if t.is_yaw_singular() {
        Extracted::singular(yaw, Singularity::FusedYaw)
    } else if sin_pitch.abs() >= T::one() - T::lit(T::TOL.gimbal_lock) {
        Extracted::singular(yaw, Singularity::GimbalLock)
    } else {
        Extracted::regular(yaw)
    })
}

/// The two written forms of the fused yaw in terms of Euler angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FusedYawForms<T> {
    /// `wrap(ψ_E - atan2(sin θ, sin φ) + atan2(sin θ cos φ_E, sin φ_E))`, using
    /// the fused pitch and roll obtained through the conversion chain.
    pub from_fused: T,
    /// `wrap(ψ_E - atan2(sin θ_E, cos θ_E sin φ_E) + atan2(sin θ_E cos φ_E, sin φ_E))`
    pub from_euler: T,
}

/// Fused yaw of a ZYX Euler rotation, evaluated in both written forms.
pub fn fused_yaw_from_euler<T: Real>(e: &EulerZyx<T>) -> Result<Extracted<FusedYawForms<T>>> {
    e.ensure_valid()?;
    let fused = euler_zyx_to_fused(e)?;
    let (st, ct) = e.pitch.sin_cos();
    let (sf, cf) = e.roll.sin_cos();
    let f = fused.value;
    let from_fused =
        wrap_radians(e.yaw - f.pitch.sin().atan2(f.roll.sin()) + (f.pitch.sin() * cf).atan2(sf));
    let from_euler = wrap_radians(e.yaw - st.atan2(ct * sf) + (st * cf).atan2(sf));
    let forms = FusedYawForms {
        from_fused,
        from_euler,
    };
    Ok(match fused.singularity {
        Some(s) => Extracted::singular(forms, s),
        None if gimbal_locked(e.pitch) => Extracted::singular(forms, Singularity::GimbalLock),
        None => Extracted::regular(forms),
    })
}
