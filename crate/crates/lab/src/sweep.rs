use std::f64::consts::{FRAC_PI_2, PI};

use fusedrot::convert::{tilt_to_euler_zyx, tilt_to_fused};
use fusedrot::{
    angle_delta, EulerZyxF64 as EulerZyx, FusedAnglesF64 as FusedAngles,
    TiltAnglesF64 as TiltAngles,
};

use crate::{circle_grid, LabError, Result};

pub const DEFAULT_ALPHA_MAX: f64 = 0.95 * PI;
pub const DEFAULT_N_RADIAL: usize = 96;
pub const DEFAULT_N_ANGULAR: usize = 256;

/// Fused and Euler parameters of the pure tilt rotation `T(0, γ, α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TiltSweepSample {
    /// `α cos γ`
    pub x: f64,
    /// `α sin γ`
    pub y: f64,
    pub gamma: f64,
    pub alpha: f64,
    pub fused: FusedAngles,
    pub euler: EulerZyx,
    /// The Euler angles sit at gimbal lock.
    pub euler_singular: bool,
}

pub fn tilt_sample(gamma: f64, alpha: f64) -> Result<TiltSweepSample> {
    let t = TiltAngles::new(0.0, gamma, alpha)?;
    let euler = tilt_to_euler_zyx(&t)?;
    Ok(TiltSweepSample {
        x: alpha * gamma.cos(),
        y: alpha * gamma.sin(),
        gamma: t.tilt_axis,
        alpha,
        fused: tilt_to_fused(&t)?,
        euler: euler.value,
        euler_singular: euler.is_singular(),
    })
}

/// Tilt axes of a sweep with `n` angular steps.
pub fn gamma_grid(n: usize) -> Vec<f64> {
    circle_grid(n)
}

/// Samples `α = alpha_max (i + 1) / n_radial` for `i < n_radial` against the
/// `γ` grid of [`gamma_grid`], radius-major.
pub fn tilt_sweep(
    alpha_max: f64,
    n_radial: usize,
    n_angular: usize,
) -> Result<Vec<TiltSweepSample>> {
    if !(alpha_max > 0.0 && alpha_max <= PI - 1e-6) {
        return Err(LabError::OutOfRange {
            what: "alpha_max",
            value: alpha_max,
        });
    }
    if n_radial == 0 || n_angular == 0 {
        return Err(LabError::InvalidGrid(format!("{n_radial} x {n_angular}")));
    }
    let gammas = gamma_grid(n_angular);
    let mut out = Vec::with_capacity(n_radial * n_angular);
    for i in 0..n_radial {
        let alpha = alpha_max * (i + 1) as f64 / n_radial as f64;
        for &gamma in &gammas {
            out.push(tilt_sample(gamma, alpha)?);
        }
    }
    Ok(out)
}

/// Central-difference slopes with respect to the tilt axis `γ` of the pure
/// tilt rotation `T(0, γ, α)`.
///
/// Euler slopes are in rad/rad on the wrapped angles. Fused pitch and roll
/// slopes are taken on their sines, where they are bounded by one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityProbe {
    pub alpha: f64,
    pub gamma_center: f64,
    pub delta: f64,
    pub euler_yaw_slope: f64,
    pub euler_pitch_slope: f64,
    pub euler_roll_slope: f64,
    pub fused_yaw_slope: f64,
    pub fused_pitch_slope: f64,
    pub fused_roll_slope: f64,
    /// `π/2 - |θ_E|` at the centre of the stencil.
    pub gimbal_margin: f64,
    /// Some stencil point has `|θ_E| > π/2 - 1e-6`.
    pub near_gimbal_lock: bool,
}

pub fn euler_sensitivity_probe(
    alpha: f64,
    gamma_center: f64,
    delta: f64,
) -> Result<SensitivityProbe> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(LabError::OutOfRange {
            what: "alpha",
            value: alpha,
        });
    }
    if !(delta > 0.0 && delta <= 0.1) {
        return Err(LabError::OutOfRange {
            what: "delta",
            value: delta,
        });
    }
    if !gamma_center.is_finite() {
        return Err(LabError::OutOfRange {
            what: "gamma_center",
            value: gamma_center,
        });
    }
    let at = |g: f64| tilt_sample(fusedrot::wrap_radians(g), alpha);
    let (lo, mid, hi) = (
        at(gamma_center - delta)?,
        at(gamma_center)?,
        at(gamma_center + delta)?,
    );
    let two_d = 2.0 * delta;
    let slope = |f: fn(&TiltSweepSample) -> f64| angle_delta(f(&hi), f(&lo)) / two_d;
    let near = [&lo, &mid, &hi]
        .iter()
        .any(|s| s.euler.pitch.abs() > FRAC_PI_2 - 1e-6);
    Ok(SensitivityProbe {
        alpha,
        gamma_center,
        delta,
        euler_yaw_slope: slope(|s| s.euler.yaw),
        euler_pitch_slope: slope(|s| s.euler.pitch),
        euler_roll_slope: slope(|s| s.euler.roll),
        fused_yaw_slope: slope(|s| s.fused.yaw),
        fused_pitch_slope: (hi.fused.pitch.sin() - lo.fused.pitch.sin()) / two_d,
        fused_roll_slope: (hi.fused.roll.sin() - lo.fused.roll.sin()) / two_d,
        gimbal_margin: FRAC_PI_2 - mid.euler.pitch.abs(),
        near_gimbal_lock: near,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusedrot::Hemisphere;

    #[test]
    fn sweep_examples() {
        let s = tilt_sample(0.0, 0.5).unwrap();
        assert_eq!(s.fused.yaw, 0.0);
        assert!(s.fused.pitch.abs() < 1e-15 && (s.fused.roll - 0.5).abs() < 1e-12);
        assert_eq!(s.fused.hemisphere, Hemisphere::Upper);

        let s = tilt_sample(FRAC_PI_2, 0.5).unwrap();
        assert!((s.fused.pitch - 0.5).abs() < 1e-12 && s.fused.roll.abs() < 1e-12);
        assert!(
            s.euler.yaw.abs() < 1e-12
                && (s.euler.pitch - 0.5).abs() < 1e-12
                && s.euler.roll.abs() < 1e-12
        );
    }

    #[test]
    fn grid_shape_and_order() {
        let g = gamma_grid(8);
        assert_eq!(g.len(), 8);
        assert_eq!(g[7], PI);
        assert_eq!(g[5], FRAC_PI_2);
        assert!(g[0] > -PI);
        let s = tilt_sweep(1.0, 2, 4).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s[0].alpha, 0.5);
        assert_eq!(s[4].alpha, 1.0);
        assert_eq!(s[1].gamma, s[5].gamma);
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(tilt_sweep(PI, 4, 4).is_err());
        assert!(tilt_sweep(0.0, 4, 4).is_err());
        assert!(tilt_sweep(1.0, 0, 4).is_err());
        assert!(euler_sensitivity_probe(1.0, 0.0, 0.2).is_err());
        assert!(euler_sensitivity_probe(PI, 0.0, 0.01).is_err());
    }

    #[test]
    fn probe_at_65_degrees() {
        let p = euler_sensitivity_probe(65f64.to_radians(), FRAC_PI_2, 0.01).unwrap();
        assert!(p.euler_yaw_slope.abs() > 1.0);
        assert_eq!(p.fused_yaw_slope, 0.0);
        // d/dγ of ψ_E at γ = π/2 is 1 - 1/cos α
        let exact = 1.0 - 1.0 / 65f64.to_radians().cos();
        assert!((p.euler_yaw_slope - exact).abs() < 1e-3);
        assert!(p.fused_pitch_slope.abs() <= 1.0 && p.fused_roll_slope.abs() <= 1.0);
    }

    #[test]
    fn probe_far_from_singularity() {
        let p = euler_sensitivity_probe(0.1, 0.0, 0.01).unwrap();
        for v in [
            p.euler_yaw_slope,
            p.euler_pitch_slope,
            p.euler_roll_slope,
            p.fused_pitch_slope,
            p.fused_roll_slope,
        ] {
            assert!(v.is_finite() && v.abs() < 2.0);
        }
        assert!(!p.near_gimbal_lock);
    }
}
