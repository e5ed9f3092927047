//! Closed-form conversions between quaternions, rotation matrices, ZYX and
//! ZXY Euler angles, tilt angles and fused angles.
//!
//! Every function validates its input and fails with
//! [`RotError::InvalidArgument`] on a domain violation. Extractions that can
//! land on a singularity return an [`Extracted`] carrying the flag next to a
//! canonical value:
//!
//! * fused yaw singularity (tilt angle π): yaw is reported as `0` and the tilt
//!   axis absorbs the remaining freedom;
//! * gimbal lock (Euler pitch ±π/2): roll is reported as `0` and yaw absorbs
//!   the coupled angle.
//!
//! Pitch-like angles are extracted with `atan2(s, √(1 - s²))` written in terms
//! of the remaining matrix entries rather than `asin(s)`, which keeps full
//! precision next to ±π/2.

use crate::angle::wrap_radians;
use crate::error::{Result, Singularity};
use crate::euler::{EulerZxy, EulerZyx};
use crate::fused::{FusedAngles, Hemisphere};
use crate::matrix::RotationMatrix;
use crate::quaternion::Quaternion;
use crate::scalar::Real;
use crate::tilt::TiltAngles;
use crate::validate::Validate;

/// Value produced by an extraction, plus the singularity it sits on, if any.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extracted<V> {
    pub value: V,
    pub singularity: Option<Singularity>,
}

impl<V> Extracted<V> {
    pub fn regular(value: V) -> Self {
        Self {
            value,
            singularity: None,
        }
    }

    pub fn singular(value: V, s: Singularity) -> Self {
        Self {
            value,
            singularity: Some(s),
        }
    }

    pub fn is_singular(&self) -> bool {
        self.singularity.is_some()
    }

    pub fn map<U>(self, f: impl FnOnce(V) -> U) -> Extracted<U> {
        Extracted {
            value: f(self.value),
            singularity: self.singularity,
        }
    }

    /// Chains a second extraction, keeping the first singularity seen.
    pub fn and_then<U>(self, f: impl FnOnce(V) -> Result<Extracted<U>>) -> Result<Extracted<U>> {
        let next = f(self.value)?;
        Ok(Extracted {
            value: next.value,
            singularity: self.singularity.or(next.singularity),
        })
    }
}

/// `|cos(tilt)|` from fused pitch and roll, using
/// `1 - sin²θ - sin²φ = cos(θ + φ) cos(θ - φ)`.
pub(crate) fn fused_cos_tilt_abs<T: Real>(pitch: T, roll: T) -> T {
    ((pitch + roll).cos() * (pitch - roll).cos())
        .max(T::zero())
        .sqrt()
}

fn tilt_axis_cutoff<T: Real>(tilt: T) -> bool {
    tilt <= T::lit(T::TOL.tilt_axis)
}

// ---------------------------------------------------------------------------
// Quaternion <-> rotation matrix

pub fn quat_to_rotmat<T: Real>(q: &Quaternion<T>) -> Result<RotationMatrix<T>> {
    let Quaternion { w, x, y, z } = q.normalised()?;
    let (one, two) = (T::one(), T::lit(2.0));
    Ok(RotationMatrix {
        m: [
            [
                one - two * (y * y + z * z),
                two * (x * y - w * z),
                two * (x * z + w * y),
            ],
            [
                two * (x * y + w * z),
                one - two * (x * x + z * z),
                two * (y * z - w * x),
            ],
            [
                two * (x * z - w * y),
                two * (y * z + w * x),
                one - two * (x * x + y * y),
            ],
        ],
    })
}

/// Shepperd's method. The sign is canonicalised: `w ≥ 0`, and when `w = 0`
/// the first non-zero of `(x, y, z)` is positive.
pub fn rotmat_to_quat<T: Real>(r: &RotationMatrix<T>) -> Result<Quaternion<T>> {
    r.ensure_valid()?;
    let m = &r.m;
    let (one, two, quarter) = (T::one(), T::lit(2.0), T::lit(0.25));
    let trace = m[0][0] + m[1][1] + m[2][2];
    let q = if trace >= m[0][0] && trace >= m[1][1] && trace >= m[2][2] {
        let s = (one + trace).sqrt() * two;
        Quaternion {
            w: quarter * s,
            x: (m[2][1] - m[1][2]) / s,
            y: (m[0][2] - m[2][0]) / s,
            z: (m[1][0] - m[0][1]) / s,
        }
    } else if m[0][0] >= m[1][1] && m[0][0] >= m[2][2] {
        let s = (one + m[0][0] - m[1][1] - m[2][2]).sqrt() * two;
        Quaternion {
            w: (m[2][1] - m[1][2]) / s,
            x: quarter * s,
            y: (m[0][1] + m[1][0]) / s,
            z: (m[0][2] + m[2][0]) / s,
        }
    } else if m[1][1] >= m[2][2] {
        let s = (one + m[1][1] - m[0][0] - m[2][2]).sqrt() * two;
        Quaternion {
            w: (m[0][2] - m[2][0]) / s,
            x: (m[0][1] + m[1][0]) / s,
            y: quarter * s,
            z: (m[1][2] + m[2][1]) / s,
        }
    } else {
        let s = (one + m[2][2] - m[0][0] - m[1][1]).sqrt() * two;
        Quaternion {
            w: (m[1][0] - m[0][1]) / s,
            x: (m[0][2] + m[2][0]) / s,
            y: (m[1][2] + m[2][1]) / s,
            z: quarter * s,
        }
    };
    let n = q.norm();
    Ok(Quaternion {
        w: q.w / n,
        x: q.x / n,
        y: q.y / n,
        z: q.z / n,
    }
    .canonical())
}

// ---------------------------------------------------------------------------
// Euler angles

pub fn euler_zyx_to_rotmat<T: Real>(e: &EulerZyx<T>) -> Result<RotationMatrix<T>> {
    e.ensure_valid()?;
    let (sy, cy) = e.yaw.sin_cos();
    let (sp, cp) = e.pitch.sin_cos();
    let (sr, cr) = e.roll.sin_cos();
    Ok(RotationMatrix {
        m: [
            [cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr],
            [sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr],
            [-sp, cp * sr, cp * cr],
        ],
    })
}

pub fn euler_zyx_to_quat<T: Real>(e: &EulerZyx<T>) -> Result<Quaternion<T>> {
    e.ensure_valid()?;
    let half = T::lit(0.5);
    let (sy, cy) = (e.yaw * half).sin_cos();
    let (sp, cp) = (e.pitch * half).sin_cos();
    let (sr, cr) = (e.roll * half).sin_cos();
    Ok(Quaternion {
        w: cr * cp * cy + sr * sp * sy,
        x: sr * cp * cy - cr * sp * sy,
        y: cr * sp * cy + sr * cp * sy,
        z: cr * cp * sy - sr * sp * cy,
    })
}

pub fn euler_zxy_to_rotmat<T: Real>(e: &EulerZxy<T>) -> Result<RotationMatrix<T>> {
    e.ensure_valid()?;
    let (sy, cy) = e.yaw.sin_cos();
    let (sr, cr) = e.roll.sin_cos();
    let (sp, cp) = e.pitch.sin_cos();
    Ok(RotationMatrix {
        m: [
            [cy * cp - sy * sr * sp, -sy * cr, cy * sp + sy * sr * cp],
            [sy * cp + cy * sr * sp, cy * cr, sy * sp - cy * sr * cp],
            [-cr * sp, sr, cr * cp],
        ],
    })
}

pub fn euler_zxy_to_quat<T: Real>(e: &EulerZxy<T>) -> Result<Quaternion<T>> {
    e.ensure_valid()?;
    let half = T::lit(0.5);
    let (sy, cy) = (e.yaw * half).sin_cos();
    let (sr, cr) = (e.roll * half).sin_cos();
    let (sp, cp) = (e.pitch * half).sin_cos();
    Ok(Quaternion {
        w: cr * cp * cy - sr * sp * sy,
        x: sr * cp * cy - cr * sp * sy,
        y: cr * sp * cy + sr * cp * sy,
        z: cr * cp * sy + sr * sp * cy,
    })
}

/// ZYX extraction. At gimbal lock (`|R₃₁| ≥ 1 - tol`) the pitch is set to
/// exactly `±π/2`, roll to `0`, and the coupled angle is folded into yaw.
pub fn rotmat_to_euler_zyx<T: Real>(r: &RotationMatrix<T>) -> Result<Extracted<EulerZyx<T>>> {
    r.ensure_valid()?;
    let m = &r.m;
    let s = -m[2][0];
    if s.abs() >= T::one() - T::lit(T::TOL.gimbal_lock) {
        let e = EulerZyx {
            yaw: wrap_radians((-m[0][1]).atan2(m[1][1])),
            pitch: T::FRAC_PI_2().copysign(s),
            roll: T::zero(),
        };
        return Ok(Extracted::singular(e, Singularity::GimbalLock));
    }
    Ok(Extracted::regular(EulerZyx {
        yaw: wrap_radians(m[1][0].atan2(m[0][0])),
        pitch: s.atan2(m[2][1].hypot(m[2][2])),
        roll: wrap_radians(m[2][1].atan2(m[2][2])),
    }))
}

/// ZXY extraction; at gimbal lock (`|R₃₂| ≥ 1 - tol`) pitch is set to `0`.
pub fn rotmat_to_euler_zxy<T: Real>(r: &RotationMatrix<T>) -> Result<Extracted<EulerZxy<T>>> {
    r.ensure_valid()?;
    let m = &r.m;
    let s = m[2][1];
    if s.abs() >= T::one() - T::lit(T::TOL.gimbal_lock) {
        let e = EulerZxy {
            yaw: wrap_radians(m[1][0].atan2(m[0][0])),
            roll: T::FRAC_PI_2().copysign(s),
            pitch: T::zero(),
        };
        return Ok(Extracted::singular(e, Singularity::GimbalLock));
    }
    Ok(Extracted::regular(EulerZxy {
        yaw: wrap_radians((-m[0][1]).atan2(m[1][1])),
        roll: s.atan2(m[2][0].hypot(m[2][2])),
        pitch: wrap_radians((-m[2][0]).atan2(m[2][2])),
    }))
}

pub fn quat_to_euler_zyx<T: Real>(q: &Quaternion<T>) -> Result<Extracted<EulerZyx<T>>> {
    rotmat_to_euler_zyx(&quat_to_rotmat(q)?)
}

pub fn quat_to_euler_zxy<T: Real>(q: &Quaternion<T>) -> Result<Extracted<EulerZxy<T>>> {
    rotmat_to_euler_zxy(&quat_to_rotmat(q)?)
}

// ---------------------------------------------------------------------------
// Fused and tilt angles from quaternions and matrices

/// Fused angles of a unit quaternion.
///
/// Yaw is `wrap(2 atan2(z, w))`, pitch and roll have sines `2(wy - xz)` and
/// `2(wx + yz)`, and the hemisphere is `sign(w² + z² - ½)` with `sign(0) = +1`.
/// At `w² + z² ≤ tol` the yaw is undefined; it is reported as zero and flagged.
pub fn quat_to_fused<T: Real>(q: &Quaternion<T>) -> Result<Extracted<FusedAngles<T>>> {
    let Quaternion { w, x, y, z } = q.normalised()?.canonical();
    let two = T::lit(2.0);
    let wz = w * w + z * z;
    let sin_pitch = two * (w * y - x * z);
    let sin_roll = two * (w * x + y * z);
    let cos_tilt = wz - (x * x + y * y);
    let singular = wz <= T::lit(T::TOL.yaw_singular_sq);
    let f = FusedAngles {
        yaw: if singular {
            T::zero()
        } else {
            wrap_radians(two * z.atan2(w))
        },
        pitch: sin_pitch.atan2(sin_roll.hypot(cos_tilt)),
        roll: sin_roll.atan2(sin_pitch.hypot(cos_tilt)),
        hemisphere: Hemisphere::from_sign_of(wz - T::lit(0.5)),
    };
    Ok(flag_yaw(f, singular))
}

/// Tilt angles of a unit quaternion; same singularity handling as
/// [`quat_to_fused`].
pub fn quat_to_tilt<T: Real>(q: &Quaternion<T>) -> Result<Extracted<TiltAngles<T>>> {
    let q = q.normalised()?.canonical();
    let Quaternion { w, x, y, z } = q;
    let wz = w * w + z * z;
    if wz <= T::lit(T::TOL.yaw_singular_sq) {
        return Ok(Extracted::singular(
            singular_tilt(&q),
            Singularity::FusedYaw,
        ));
    }
    let half_yaw = z.atan2(w);
    let tilt = T::lit(2.0) * (x * x + y * y).sqrt().atan2(wz.sqrt());
    let tilt_axis = if tilt_axis_cutoff(tilt) {
        T::zero()
    } else {
        wrap_radians(y.atan2(x) - half_yaw)
    };
    Ok(Extracted::regular(TiltAngles {
        yaw: wrap_radians(T::lit(2.0) * half_yaw),
        tilt_axis,
        tilt,
    }))
}

/// Tilt angles with the yaw forced to zero; the tilt axis then points along
/// the quaternion's `(x, y)` part.
fn singular_tilt<T: Real>(q: &Quaternion<T>) -> TiltAngles<T> {
    let Quaternion { w, x, y, z } = *q;
    TiltAngles {
        yaw: T::zero(),
        tilt_axis: wrap_radians(y.atan2(x)),
        tilt: T::lit(2.0) * (x * x + y * y).sqrt().atan2((w * w + z * z).sqrt()),
    }
}

fn flag_yaw<V>(v: V, singular: bool) -> Extracted<V> {
    if singular {
        Extracted::singular(v, Singularity::FusedYaw)
    } else {
        Extracted::regular(v)
    }
}

fn rotmat_yaw_singular<T: Real>(r: &RotationMatrix<T>) -> bool {
    r.m[2][2] <= -T::one() + T::lit(T::TOL.rotmat_singular)
}

/// Fused yaw from the upper-left block:
/// `R₂₁ - R₁₂ = (1 + cos α) sin ψ` and `R₁₁ + R₂₂ = (1 + cos α) cos ψ`.
fn rotmat_fused_yaw<T: Real>(r: &RotationMatrix<T>) -> T {
    let m = &r.m;
    wrap_radians((m[1][0] - m[0][1]).atan2(m[0][0] + m[1][1]))
}

/// Fused angles from a rotation matrix: pitch and roll from the bottom row
/// `(-sin θ, sin φ, cos α)`, hemisphere from the sign of `R₃₃`.
pub fn rotmat_to_fused<T: Real>(r: &RotationMatrix<T>) -> Result<Extracted<FusedAngles<T>>> {
    r.ensure_valid()?;
    let [r31, r32, r33] = r.bottom_row();
    let singular = rotmat_yaw_singular(r);
    let f = FusedAngles {
        yaw: if singular {
            T::zero()
        } else {
            rotmat_fused_yaw(r)
        },
        pitch: (-r31).atan2(r32.hypot(r33)),
        roll: r32.atan2(r31.hypot(r33)),
        hemisphere: Hemisphere::from_sign_of(r33),
    };
    Ok(flag_yaw(f, singular))
}

pub fn rotmat_to_tilt<T: Real>(r: &RotationMatrix<T>) -> Result<Extracted<TiltAngles<T>>> {
    r.ensure_valid()?;
    if rotmat_yaw_singular(r) {
        let q = rotmat_to_quat(r)?;
        return Ok(Extracted::singular(
            singular_tilt(&q),
            Singularity::FusedYaw,
        ));
    }
    let [r31, r32, r33] = r.bottom_row();
    let tilt = r31.hypot(r32).atan2(r33);
    let tilt_axis = if tilt_axis_cutoff(tilt) {
        T::zero()
    } else {
        wrap_radians((-r31).atan2(r32))
    };
    Ok(Extracted::regular(TiltAngles {
        yaw: rotmat_fused_yaw(r),
        tilt_axis,
        tilt,
    }))
}

// ---------------------------------------------------------------------------
// Tilt and fused angles to other representations

pub fn tilt_to_rotmat<T: Real>(t: &TiltAngles<T>) -> Result<RotationMatrix<T>> {
    t.ensure_valid()?;
    let (sa, ca) = t.tilt.sin_cos();
    let (sg, cg) = t.tilt_axis.sin_cos();
    let (sd, cd) = (t.yaw + t.tilt_axis).sin_cos();
    Ok(RotationMatrix {
        m: [
            [cg * cd + ca * sg * sd, sg * cd - ca * cg * sd, sa * sd],
            [cg * sd - ca * sg * cd, sg * sd + ca * cg * cd, -sa * cd],
            [-sa * sg, sa * cg, ca],
        ],
    })
}

pub fn fused_to_rotmat<T: Real>(f: &FusedAngles<T>) -> Result<RotationMatrix<T>> {
    tilt_to_rotmat(&fused_to_tilt(f)?)
}

/// `q = q_z(yaw) ⊗ (cos α/2, sin α/2 cos γ, sin α/2 sin γ, 0)`.
pub fn tilt_to_quat<T: Real>(t: &TiltAngles<T>) -> Result<Quaternion<T>> {
    t.ensure_valid()?;
    let half = T::lit(0.5);
    let (sh, ch) = (t.tilt * half).sin_cos();
    let (sy, cy) = (t.yaw * half).sin_cos();
    let (sg, cg) = t.tilt_axis.sin_cos();
    let tilt_part = Quaternion {
        w: ch,
        x: sh * cg,
        y: sh * sg,
        z: T::zero(),
    };
    Ok(Quaternion {
        w: cy,
        x: T::zero(),
        y: T::zero(),
        z: sy,
    } * tilt_part)
}

pub fn fused_to_quat<T: Real>(f: &FusedAngles<T>) -> Result<Quaternion<T>> {
    tilt_to_quat(&fused_to_tilt(f)?)
}

/// `sin α = √(sin²φ + sin²θ)`, `γ = atan2(sin θ, sin φ)`, with the hemisphere
/// choosing `α ≤ π/2` or `α ≥ π/2`.
pub fn fused_to_tilt<T: Real>(f: &FusedAngles<T>) -> Result<TiltAngles<T>> {
    f.ensure_valid()?;
    let (sp, sr) = (f.pitch.sin(), f.roll.sin());
    let sin_tilt = sp.hypot(sr).min(T::one());
    let cos_tilt = f.hemisphere.to_real::<T>() * fused_cos_tilt_abs(f.pitch, f.roll);
    let tilt = sin_tilt.atan2(cos_tilt);
    let tilt_axis = if tilt_axis_cutoff(tilt) {
        T::zero()
    } else {
        wrap_radians(sp.atan2(sr))
    };
    Ok(TiltAngles {
        yaw: wrap_radians(f.yaw),
        tilt_axis,
        tilt,
    })
}

/// `sin θ = sin α sin γ`, `sin φ = sin α cos γ`, `h = sign(cos α)`.
pub fn tilt_to_fused<T: Real>(t: &TiltAngles<T>) -> Result<FusedAngles<T>> {
    t.ensure_valid()?;
    let (sa, ca) = t.tilt.sin_cos();
    let (sg, cg) = t.tilt_axis.sin_cos();
    let (sp, sr) = (sa * sg, sa * cg);
    Ok(FusedAngles {
        yaw: wrap_radians(t.yaw),
        pitch: sp.atan2(ca.hypot(sr)),
        roll: sr.atan2(ca.hypot(sp)),
        hemisphere: Hemisphere::from_sign_of(ca),
    })
}

/// ZYX Euler angles of a tilt-angles rotation:
/// `θ_E = θ`, `φ_E = atan2(sin φ, cos α)` and
/// `ψ_E = wrap(ψ + γ - atan2(cos α sin γ, cos γ))`.
///
/// Near gimbal lock this defers to the matrix extraction so the canonical
/// representative is returned.
pub fn tilt_to_euler_zyx<T: Real>(t: &TiltAngles<T>) -> Result<Extracted<EulerZyx<T>>> {
    t.ensure_valid()?;
    let (sa, ca) = t.tilt.sin_cos();
    let (sg, cg) = t.tilt_axis.sin_cos();
    let (sp, sr) = (sa * sg, sa * cg);
    if sp.abs() >= T::one() - T::lit(T::TOL.gimbal_lock) {
        return rotmat_to_euler_zyx(&tilt_to_rotmat(t)?);
    }
    Ok(Extracted::regular(EulerZyx {
        yaw: wrap_radians(t.yaw + t.tilt_axis - (ca * sg).atan2(cg)),
        pitch: sp.atan2(ca.hypot(sr)),
        roll: wrap_radians(sr.atan2(ca)),
    }))
}

pub fn fused_to_euler_zyx<T: Real>(f: &FusedAngles<T>) -> Result<Extracted<EulerZyx<T>>> {
    tilt_to_euler_zyx(&fused_to_tilt(f)?)
}

/// Tilt angles of a ZYX Euler rotation:
/// `cos α = cos θ_E cos φ_E`, `γ = atan2(sin θ_E, cos θ_E sin φ_E)` and
/// `ψ = wrap(ψ_E - γ + atan2(sin θ_E cos φ_E, sin φ_E))`.
pub fn euler_zyx_to_tilt<T: Real>(e: &EulerZyx<T>) -> Result<Extracted<TiltAngles<T>>> {
    e.ensure_valid()?;
    let (sp, cp) = e.pitch.sin_cos();
    let (sr, cr) = e.roll.sin_cos();
    let cos_tilt = cp * cr;
    if (T::one() + cos_tilt) * T::lit(0.5) <= T::lit(T::TOL.yaw_singular_sq) {
        let q = euler_zyx_to_quat(e)?.canonical();
        return Ok(Extracted::singular(
            singular_tilt(&q),
            Singularity::FusedYaw,
        ));
    }
    let sin_roll_fused = cp * sr;
    let tilt = sp.hypot(sin_roll_fused).atan2(cos_tilt);
    let axis = sp.atan2(sin_roll_fused);
    let yaw = wrap_radians(e.yaw - axis + (sp * cr).atan2(sr));
    let tilt_axis = if tilt_axis_cutoff(tilt) {
        T::zero()
    } else {
        wrap_radians(axis)
    };
    Ok(Extracted::regular(TiltAngles {
        yaw,
        tilt_axis,
        tilt,
    }))
}

pub fn euler_zyx_to_fused<T: Real>(e: &EulerZyx<T>) -> Result<Extracted<FusedAngles<T>>> {
    euler_zyx_to_tilt(e)?.and_then(|t| tilt_to_fused(&t).map(Extracted::regular))
}
