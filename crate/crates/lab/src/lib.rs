//! Experiments comparing fused angles with ZYX Euler angles: tilt sweeps and
//! finite-difference sensitivity, axisymmetry scans under conjugation by
//! z-rotations, and level sets of constant tilt angle.
//!
//! All scans evaluate their grids in index order and are deterministic.

mod axisym;
mod levels;
pub mod metrics;
mod sweep;

pub use axisym::{axisym_scan, beta_grid, AxisymResiduals, AxisymSample, DEFAULT_N_BETA};
pub use levels::{level_sets, LevelSetCurve, LevelSetKind};
pub use sweep::{
    euler_sensitivity_probe, gamma_grid, tilt_sample, tilt_sweep, SensitivityProbe,
    TiltSweepSample, DEFAULT_ALPHA_MAX, DEFAULT_N_ANGULAR, DEFAULT_N_RADIAL,
};

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("singular input: {0}")]
    Singular(&'static str),
    #[error(transparent)]
    Rotation(#[from] fusedrot::RotError),
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;

/// `n` points `π (2(k + 1) - n) / n`, uniform over `(-π, π]` and ending at `π`.
pub(crate) fn circle_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| std::f64::consts::PI * ((2 * (k + 1)) as f64 - n as f64) / n as f64)
        .collect()
}
