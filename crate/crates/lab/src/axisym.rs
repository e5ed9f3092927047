use fusedrot::convert::{
    quat_to_euler_zxy, quat_to_euler_zyx, quat_to_fused, quat_to_rotmat, quat_to_tilt,
};
use fusedrot::ops::compose;
use fusedrot::{
    angle_delta, angle_diff, AnyRotationF64 as AnyRotation, EulerZxyF64 as EulerZxy,
    EulerZyxF64 as EulerZyx, FusedAnglesF64 as FusedAngles, QuaternionF64 as Quaternion,
    RotationMatrixF64 as RotationMatrix, TiltAnglesF64 as TiltAngles,
};

use crate::{circle_grid, LabError, Result};

pub const DEFAULT_N_BETA: usize = 360;

/// Below this base tilt angle the tilt axis is not compared.
const TILT_AXIS_CUTOFF: f64 = 1e-9;

/// Deviations of one conjugated rotation from the axisymmetry predictions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisymResiduals {
    /// `|ψ_β - ψ₀|`, wrapped.
    pub yaw: f64,
    /// `|α_β - α₀|`
    pub tilt: f64,
    /// `|γ_β - wrap(γ₀ - β)|`, wrapped; zero when the base has no tilt.
    pub tilt_axis: f64,
    pub hemisphere_match: bool,
    /// Largest deviation of `(sin φ_β, sin θ_β)` from `(sin φ₀, sin θ₀)`
    /// rotated clockwise by `β`.
    pub sine_ratio: f64,
}

impl AxisymResiduals {
    /// Largest of the angle and sine-ratio residuals.
    pub fn max(&self) -> f64 {
        self.yaw
            .max(self.tilt)
            .max(self.tilt_axis)
            .max(self.sine_ratio)
    }
}

/// The rotation `R_z(-β) R₀ R_z(β)` in every representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisymSample {
    pub beta: f64,
    pub quaternion: Quaternion,
    pub rotmat: RotationMatrix,
    pub euler_zyx: EulerZyx,
    pub euler_zxy: EulerZxy,
    pub tilt: TiltAngles,
    pub fused: FusedAngles,
    /// `(sin φ, sin θ)` of the fused angles.
    pub fused_sine_ratios: (f64, f64),
    /// `(sin φ_E, sin θ_E)` of the ZYX Euler angles.
    pub euler_sine_ratios: (f64, f64),
    pub residuals: AxisymResiduals,
}

/// Values of `β` used by a scan of `n` samples, uniform over `(-π, π]`.
pub fn beta_grid(n: usize) -> Vec<f64> {
    circle_grid(n)
}

fn sines(pitch: f64, roll: f64) -> (f64, f64) {
    (roll.sin(), pitch.sin())
}

/// Conjugates `base` by z-rotations over the [`beta_grid`] and checks the
/// axisymmetry of fused yaw, tilt angle, tilt axis, hemisphere and the fused
/// sine ratios. The base must not sit on the fused yaw singularity.
pub fn axisym_scan(base: &AnyRotation, n_beta: usize) -> Result<Vec<AxisymSample>> {
    if n_beta == 0 {
        return Err(LabError::InvalidGrid("n_beta must be at least 1".into()));
    }
    let q0 = base.to_quat()?;
    let f0 = quat_to_fused(&q0)?;
    if f0.is_singular() {
        return Err(LabError::Singular("base rotation has tilt angle π"));
    }
    let f0 = f0.value;
    let t0 = quat_to_tilt(&q0)?.value;
    let (a0, b0) = sines(f0.pitch, f0.roll);

    beta_grid(n_beta)
        .into_iter()
        .map(|beta| {
            let q = compose(
                &compose(&Quaternion::from_z(-beta), &q0),
                &Quaternion::from_z(beta),
            );
            let fused = quat_to_fused(&q)?.value;
            let tilt = quat_to_tilt(&q)?.value;
            let euler_zyx = quat_to_euler_zyx(&q)?.value;
            let euler_zxy = quat_to_euler_zxy(&q)?.value;
            let fused_sine_ratios = sines(fused.pitch, fused.roll);
            let (sb, cb) = beta.sin_cos();
            let predicted = (cb * a0 + sb * b0, -sb * a0 + cb * b0);
            let residuals = AxisymResiduals {
                yaw: angle_diff(fused.yaw, f0.yaw),
                tilt: (tilt.tilt - t0.tilt).abs(),
                tilt_axis: if t0.tilt > TILT_AXIS_CUTOFF {
                    angle_diff(tilt.tilt_axis, angle_delta(t0.tilt_axis, beta))
                } else {
                    0.0
                },
                hemisphere_match: fused.hemisphere == f0.hemisphere,
                sine_ratio: (fused_sine_ratios.0 - predicted.0)
                    .abs()
                    .max((fused_sine_ratios.1 - predicted.1).abs()),
            };
            Ok(AxisymSample {
                beta,
                quaternion: q,
                rotmat: quat_to_rotmat(&q)?,
                euler_zyx,
                euler_zxy,
                tilt,
                fused,
                fused_sine_ratios,
                euler_sine_ratios: sines(euler_zyx.pitch, euler_zyx.roll),
                residuals,
            })
        })
        .collect()
}
