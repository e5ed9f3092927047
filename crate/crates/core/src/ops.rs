//! Rotation algebra: composition, inverses, fused yaw and z-rotations.

use crate::angle::wrap_radians;
use crate::convert::{quat_to_fused, Extracted};
use crate::error::{Result, Singularity};
use crate::euler::EulerZyx;
use crate::fused::FusedAngles;
use crate::matrix::RotationMatrix;
use crate::quaternion::Quaternion;
use crate::rotation::{AnyRotation, Kind, Rotation};
use crate::scalar::Real;
use crate::tilt::TiltAngles;
use crate::validate::Validate;

/// Fused yaw of a rotation, with the singularity flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YawResult<T> {
    pub yaw: T,
    pub singular: bool,
}

/// Hamilton product `a ⊗ b`, i.e. the rotation `b` followed by `a`.
pub fn compose<T: Real>(a: &Quaternion<T>, b: &Quaternion<T>) -> Quaternion<T> {
    *a * *b
}

/// Composes two rotations through the quaternion and returns the result in
/// the representation of `a`.
pub fn compose_any<T: Real>(
    a: &AnyRotation<T>,
    b: &AnyRotation<T>,
) -> Result<Extracted<AnyRotation<T>>> {
    let q = compose(&a.to_quat()?, &b.to_quat()?);
    AnyRotation::from_quat(a.kind(), &q)
}

pub fn compose_as<T: Real, R: Rotation<T>>(a: &R, b: &R) -> Result<Extracted<R>> {
    R::from_quat(&compose(&a.to_quat()?, &b.to_quat()?))
}

/// The fused yaw Ψ of a rotation in any representation.
pub fn fused_yaw<T: Real>(r: &AnyRotation<T>) -> Result<YawResult<T>> {
    let f = quat_to_fused(&r.to_quat()?)?;
    Ok(YawResult {
        yaw: f.value.yaw,
        singular: f.is_singular(),
    })
}

fn with_source_flag<T: Real>(
    r: &AnyRotation<T>,
    out: Extracted<AnyRotation<T>>,
) -> Result<Extracted<AnyRotation<T>>> {
    if fused_yaw(r)?.singular {
        Ok(Extracted::singular(out.value, Singularity::FusedYaw))
    } else {
        Ok(out)
    }
}

/// `R_z(ψ_z) R`: a global z-rotation. For angle representations only the yaw
/// changes.
pub fn apply_z_pre<T: Real>(r: &AnyRotation<T>, psi_z: T) -> Result<Extracted<AnyRotation<T>>> {
    r.validate().into_result()?;
    let out = match *r {
        AnyRotation::Quaternion(q) => {
            Extracted::regular(compose(&Quaternion::from_z(psi_z), &q.normalised()?).into())
        }
        AnyRotation::RotationMatrix(m) => {
            Extracted::regular((RotationMatrix::rot_z(psi_z) * m).into())
        }
        AnyRotation::EulerZyx(mut e) => {
            e.yaw = wrap_radians(e.yaw + psi_z);
            Extracted::regular(e.into())
        }
        AnyRotation::EulerZxy(mut e) => {
            e.yaw = wrap_radians(e.yaw + psi_z);
            Extracted::regular(e.into())
        }
        AnyRotation::Tilt(mut t) => {
            t.yaw = wrap_radians(t.yaw + psi_z);
            Extracted::regular(t.into())
        }
        AnyRotation::Fused(mut f) => {
            f.yaw = wrap_radians(f.yaw + psi_z);
            Extracted::regular(f.into())
        }
    };
    with_source_flag(r, out)
}

/// `R R_z(ψ_z)`: a local z-rotation.
pub fn apply_z_post<T: Real>(r: &AnyRotation<T>, psi_z: T) -> Result<Extracted<AnyRotation<T>>> {
    r.validate().into_result()?;
    let out = match *r {
        AnyRotation::Quaternion(q) => {
            Extracted::regular(compose(&q.normalised()?, &Quaternion::from_z(psi_z)).into())
        }
        AnyRotation::RotationMatrix(m) => {
            Extracted::regular((m * RotationMatrix::rot_z(psi_z)).into())
        }
        _ => AnyRotation::from_quat(
            r.kind(),
            &compose(&r.to_quat()?, &Quaternion::from_z(psi_z)),
        )?,
    };
    with_source_flag(r, out)
}

/// Inverse of a ZYX Euler rotation, read off the transposed matrix. A gimbal
/// locked result is returned in canonical form (zero roll) and flagged.
pub fn inverse_euler_zyx<T: Real>(e: &EulerZyx<T>) -> Result<Extracted<EulerZyx<T>>> {
    e.ensure_valid()?;
    let (sy, cy) = e.yaw.sin_cos();
    let (sp, cp) = e.pitch.sin_cos();
    let (sr, cr) = e.roll.sin_cos();
    let r11 = cy * cp;
    let r12 = cy * sp * sr - sy * cr;
    let r13 = cy * sp * cr + sy * sr;
    let r23 = sy * sp * cr - cy * sr;
    let r33 = cp * cr;
    let inv = EulerZyx {
        yaw: wrap_radians(r12.atan2(r11)),
        pitch: -r13.atan2(r23.hypot(r33)),
        roll: wrap_radians(r23.atan2(r33)),
    };
    if r13.abs() >= T::one() - T::lit(T::TOL.gimbal_lock) {
        return crate::convert::rotmat_to_euler_zyx(&e_matrix_transpose(e)?);
    }
    Ok(Extracted::regular(inv))
}

fn e_matrix_transpose<T: Real>(e: &EulerZyx<T>) -> Result<RotationMatrix<T>> {
    Ok(crate::convert::euler_zyx_to_rotmat(e)?.transpose())
}

/// `T⁻¹ = (-ψ, wrap(ψ + γ - π), α)`, with the tilt axis pinned to zero at
/// zero tilt.
pub fn inverse_tilt<T: Real>(t: &TiltAngles<T>) -> Result<TiltAngles<T>> {
    t.ensure_valid()?;
    let tilt_axis = if t.tilt <= T::lit(T::TOL.tilt_axis) {
        T::zero()
    } else {
        wrap_radians(t.yaw + t.tilt_axis - T::PI())
    };
    Ok(TiltAngles {
        yaw: wrap_radians(-t.yaw),
        tilt_axis,
        tilt: t.tilt,
    })
}

/// `F⁻¹ = (-ψ, θ_inv, φ_inv, h)` with
/// `sin θ_inv = -(cos ψ sin θ + sin ψ sin φ)` and
/// `sin φ_inv = sin ψ sin θ - cos ψ sin φ`.
pub fn inverse_fused<T: Real>(f: &FusedAngles<T>) -> Result<FusedAngles<T>> {
    f.ensure_valid()?;
    let (sy, cy) = f.yaw.sin_cos();
    let (sp, sr) = (f.pitch.sin(), f.roll.sin());
    let a = cy * sp + sy * sr;
    let b = cy * sr - sy * sp;
    let c = crate::convert::fused_cos_tilt_abs(f.pitch, f.roll);
    Ok(FusedAngles {
        yaw: wrap_radians(-f.yaw),
        pitch: -a.atan2(c.hypot(b)),
        roll: -b.atan2(c.hypot(a)),
        hemisphere: f.hemisphere,
    })
}

/// Inverse in the same representation. Flags a fused yaw singular source, or
/// a gimbal locked Euler result.
pub fn inverse<T: Real>(r: &AnyRotation<T>) -> Result<Extracted<AnyRotation<T>>> {
    let out = match r {
        AnyRotation::Quaternion(q) => Extracted::regular(q.normalised()?.conjugate().into()),
        AnyRotation::RotationMatrix(m) => {
            m.ensure_valid()?;
            Extracted::regular(m.transpose().into())
        }
        AnyRotation::EulerZyx(e) => inverse_euler_zyx(e)?.map(Into::into),
        AnyRotation::EulerZxy(_) => {
            AnyRotation::from_quat(Kind::EulerZxy, &r.to_quat()?.conjugate())?
        }
        AnyRotation::Tilt(t) => Extracted::regular(inverse_tilt(t)?.into()),
        AnyRotation::Fused(f) => Extracted::regular(inverse_fused(f)?.into()),
    };
    with_source_flag(r, out)
}

/// Typed form of [`inverse`].
pub fn inverse_as<T: Real, R: Rotation<T>>(r: &R) -> Result<Extracted<R>> {
    inverse(&r.into_any()).map(|e| e.map(|a| R::from_any(a).expect("kind preserved")))
}

/// Typed form of [`apply_z_pre`].
pub fn apply_z_pre_as<T: Real, R: Rotation<T>>(r: &R, psi_z: T) -> Result<Extracted<R>> {
    apply_z_pre(&r.into_any(), psi_z).map(|e| e.map(|a| R::from_any(a).expect("kind preserved")))
}

/// Typed form of [`apply_z_post`].
pub fn apply_z_post_as<T: Real, R: Rotation<T>>(r: &R, psi_z: T) -> Result<Extracted<R>> {
    apply_z_post(&r.into_any(), psi_z).map(|e| e.map(|a| R::from_any(a).expect("kind preserved")))
}
