use std::f64::consts::{FRAC_PI_2, PI, TAU};

use fusedrot::{
    AnyRotationF64 as AnyRotation, EulerZxyF64 as EulerZxy, EulerZyxF64 as EulerZyx,
    FusedAnglesF64 as FusedAngles, Hemisphere, Kind, QuaternionF64 as Quaternion, RotError,
    RotationMatrixF64 as RotationMatrix, TiltAnglesF64 as TiltAngles,
};

/// Inputs closer than this (in radians) to a singularity are refused.
const SINGULAR_MARGIN: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("input within {SINGULAR_MARGIN:e} rad of the {0}")]
    NearSingular(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Rotation(#[from] RotError),
}

type V3 = [f64; 3];
type M3 = [[f64; 3]; 3];

const E1: V3 = [1.0, 0.0, 0.0];
const E2: V3 = [0.0, 1.0, 0.0];
const E3: V3 = [0.0, 0.0, 1.0];

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: V3) -> f64 {
    dot(a, a).sqrt()
}

fn scale(a: V3, s: f64) -> V3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn col(m: &M3, j: usize) -> V3 {
    [m[0][j], m[1][j], m[2][j]]
}

fn matmul(a: &M3, b: &M3) -> M3 {
    let mut c = [[0.0; 3]; 3];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn wrap(a: f64) -> f64 {
    let r = a - TAU * (a / TAU).round();
    if r <= -PI {
        r + TAU
    } else {
        r
    }
}

/// Rodrigues' formula for a rotation by `angle` about the unit vector `axis`.
fn rodrigues(axis: V3, angle: f64) -> M3 {
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    let [x, y, z] = axis;
    [
        [c + t * x * x, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, c + t * y * y, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, c + t * z * z],
    ]
}

/// Smallest rotation taking unit vector `a` onto unit vector `b`. Antiparallel
/// vectors are resolved by a half turn about `fallback`.
fn minimal_rotation(a: V3, b: V3, fallback: V3) -> M3 {
    let axis = cross(a, b);
    let s = norm(axis);
    let angle = s.atan2(dot(a, b));
    if s < 1e-15 {
        return if dot(a, b) > 0.0 {
            rodrigues(E3, 0.0)
        } else {
            rodrigues(fallback, PI)
        };
    }
    rodrigues(scale(axis, 1.0 / s), angle)
}

/// Matrix of a quaternion through its axis and angle.
pub(crate) fn axis_angle_matrix(q: &Quaternion) -> M3 {
    let v = [q.x, q.y, q.z];
    let s = norm(v);
    if s == 0.0 {
        return rodrigues(E3, 0.0);
    }
    rodrigues(scale(v, 1.0 / s), 2.0 * s.atan2(q.w))
}

fn frame(r: &AnyRotation) -> Result<M3, OracleError> {
    r.validate().into_result()?;
    Ok(match *r {
        AnyRotation::Quaternion(q) => {
            let n = q.norm();
            axis_angle_matrix(&Quaternion {
                w: q.w / n,
                x: q.x / n,
                y: q.y / n,
                z: q.z / n,
            })
        }
        AnyRotation::RotationMatrix(m) => m.m,
        AnyRotation::EulerZyx(e) => matmul(
            &matmul(&rodrigues(E3, e.yaw), &rodrigues(E2, e.pitch)),
            &rodrigues(E1, e.roll),
        ),
        AnyRotation::EulerZxy(e) => matmul(
            &matmul(&rodrigues(E3, e.yaw), &rodrigues(E1, e.roll)),
            &rodrigues(E2, e.pitch),
        ),
        AnyRotation::Tilt(t) => {
            let axis = [t.tilt_axis.cos(), t.tilt_axis.sin(), 0.0];
            matmul(&rodrigues(E3, t.yaw), &rodrigues(axis, t.tilt))
        }
        AnyRotation::Fused(f) => {
            // z_G seen from the body: the pitch and roll fix its x and y
            // components, the hemisphere picks the sign of the z component.
            let (sp, sr) = (f.pitch.sin(), f.roll.sin());
            let h = if f.hemisphere == Hemisphere::Upper {
                1.0
            } else {
                -1.0
            };
            let g = [-sp, sr, h * (1.0 - sp * sp - sr * sr).max(0.0).sqrt()];
            let g = scale(g, 1.0 / norm(g));
            // the pure tilt maps z_B onto z_G in the body frame; invert it
            let tilt_inv = minimal_rotation(E3, g, E1);
            let tilt = [
                [tilt_inv[0][0], tilt_inv[1][0], tilt_inv[2][0]],
                [tilt_inv[0][1], tilt_inv[1][1], tilt_inv[2][1]],
                [tilt_inv[0][2], tilt_inv[1][2], tilt_inv[2][2]],
            ];
            matmul(&rodrigues(E3, f.yaw), &tilt)
        }
    })
}

/// Rotation matrix of any rotation, built from elemental and axis-angle
/// rotations.
pub fn oracle_matrix(r: &AnyRotation) -> Result<RotationMatrix, OracleError> {
    Ok(RotationMatrix { m: frame(r)? })
}

fn quaternion_of(m: &M3) -> Quaternion {
    let skew = [
        (m[2][1] - m[1][2]) / 2.0,
        (m[0][2] - m[2][0]) / 2.0,
        (m[1][0] - m[0][1]) / 2.0,
    ];
    let c = (m[0][0] + m[1][1] + m[2][2] - 1.0) / 2.0;
    let s = norm(skew);
    let angle = s.atan2(c);
    if s == 0.0 && c > 0.0 {
        return Quaternion::identity();
    }
    let axis = if angle < PI - 1e-3 {
        scale(skew, 1.0 / s)
    } else {
        // near a half turn the axis comes from the symmetric part (1 - c) a aᵀ
        let sym = |i: usize, j: usize| (m[i][j] + m[j][i]) / 2.0 - if i == j { c } else { 0.0 };
        let k = (0..3)
            .max_by(|&i, &j| sym(i, i).total_cmp(&sym(j, j)))
            .unwrap();
        let a = [sym(0, k), sym(1, k), sym(2, k)];
        let a = scale(a, 1.0 / norm(a));
        if dot(a, skew) < 0.0 {
            scale(a, -1.0)
        } else {
            a
        }
    };
    let (sh, ch) = (angle / 2.0).sin_cos();
    Quaternion {
        w: ch,
        x: sh * axis[0],
        y: sh * axis[1],
        z: sh * axis[2],
    }
    .canonical()
}

/// Yaw of the frame left after untilting the body z-axis onto z_G.
fn untilted_yaw(m: &M3) -> Result<(f64, f64), OracleError> {
    let z_b = col(m, 2);
    let tilt = norm(cross(E3, z_b)).atan2(dot(E3, z_b));
    if tilt > PI - SINGULAR_MARGIN {
        return Err(OracleError::NearSingular("fused yaw singularity"));
    }
    let a = matmul(&minimal_rotation(z_b, E3, E1), m);
    let x_a = col(&a, 0);
    Ok((x_a[1].atan2(x_a[0]), tilt))
}

fn euler_zyx_of(m: &M3) -> Result<EulerZyx, OracleError> {
    let (x_b, y_b) = (col(m, 0), col(m, 1));
    let pitch = (-x_b[2]).clamp(-1.0, 1.0).asin();
    if pitch.abs() > FRAC_PI_2 - SINGULAR_MARGIN {
        return Err(OracleError::NearSingular("ZYX gimbal lock"));
    }
    let yaw = x_b[1].atan2(x_b[0]);
    let y1 = [-yaw.sin(), yaw.cos(), 0.0];
    let z2 = cross(x_b, y1);
    Ok(EulerZyx {
        yaw: wrap(yaw),
        pitch,
        roll: wrap(dot(y_b, z2).atan2(dot(y_b, y1))),
    })
}

fn euler_zxy_of(m: &M3) -> Result<EulerZxy, OracleError> {
    let (x_b, y_b) = (col(m, 0), col(m, 1));
    let roll = y_b[2].clamp(-1.0, 1.0).asin();
    if roll.abs() > FRAC_PI_2 - SINGULAR_MARGIN {
        return Err(OracleError::NearSingular("ZXY gimbal lock"));
    }
    let yaw = (-y_b[0]).atan2(y_b[1]);
    let x1 = [yaw.cos(), yaw.sin(), 0.0];
    let z2 = cross(x1, y_b);
    Ok(EulerZxy {
        yaw: wrap(yaw),
        roll,
        pitch: wrap((-dot(x_b, z2)).atan2(dot(x_b, x1))),
    })
}

fn fused_of(m: &M3) -> Result<FusedAngles, OracleError> {
    let (x_b, y_b, z_b) = (col(m, 0), col(m, 1), col(m, 2));
    let (yaw, _) = untilted_yaw(m)?;
    // signed angles between z_G and the body yz and xz planes
    let pitch = (-dot(E3, x_b)).clamp(-1.0, 1.0).asin();
    let roll = dot(E3, y_b).clamp(-1.0, 1.0).asin();
    let hemisphere = if dot(E3, z_b) >= 0.0 {
        Hemisphere::Upper
    } else {
        Hemisphere::Lower
    };
    Ok(FusedAngles {
        yaw: wrap(yaw),
        pitch,
        roll,
        hemisphere,
    })
}

fn tilt_of(m: &M3) -> Result<TiltAngles, OracleError> {
    let z_b = col(m, 2);
    let (yaw, tilt) = untilted_yaw(m)?;
    let tilt_axis = if tilt <= 1e-12 {
        0.0
    } else {
        let u = cross(E3, z_b);
        wrap(u[1].atan2(u[0]) - yaw)
    };
    Ok(TiltAngles {
        yaw: wrap(yaw),
        tilt_axis,
        tilt,
    })
}

/// Converts `r` to `target` through the body frame geometry.
///
/// Refuses inputs whose target parameters lie within 1e-6 rad of a
/// singularity (gimbal lock for Euler targets, tilt angle π for tilt and
/// fused targets).
pub fn oracle_convert(r: &AnyRotation, target: Kind) -> Result<AnyRotation, OracleError> {
    let m = frame(r)?;
    Ok(match target {
        Kind::Quaternion => quaternion_of(&m).into(),
        Kind::RotationMatrix => RotationMatrix { m }.into(),
        Kind::EulerZyx => euler_zyx_of(&m)?.into(),
        Kind::EulerZxy => euler_zxy_of(&m)?.into(),
        Kind::Tilt => tilt_of(&m)?.into(),
        Kind::Fused => fused_of(&m)?.into(),
    })
}
