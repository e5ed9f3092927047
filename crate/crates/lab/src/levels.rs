use std::f64::consts::FRAC_PI_2;

use crate::sweep::{gamma_grid, tilt_sample};
use crate::{LabError, Result};

/// Which pair of angles is traced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelSetKind {
    Fused,
    Euler,
}

/// Points `(sin φ, sin θ)` (or their ZYX Euler counterparts) of the pure tilt
/// rotations with tilt angle `alpha`, in the order of [`gamma_grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSetCurve {
    pub alpha: f64,
    pub gammas: Vec<f64>,
    pub points: Vec<(f64, f64)>,
}

pub fn level_sets(
    kind: LevelSetKind,
    alphas: &[f64],
    n_gamma: usize,
) -> Result<Vec<LevelSetCurve>> {
    if n_gamma == 0 {
        return Err(LabError::InvalidGrid("n_gamma must be at least 1".into()));
    }
    let gammas = gamma_grid(n_gamma);
    alphas
        .iter()
        .map(|&alpha| {
            if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
                return Err(LabError::OutOfRange {
                    what: "alpha",
                    value: alpha,
                });
            }
            let points = gammas
                .iter()
                .map(|&g| {
                    let s = tilt_sample(g, alpha)?;
                    Ok(match kind {
                        LevelSetKind::Fused => (s.fused.roll.sin(), s.fused.pitch.sin()),
                        LevelSetKind::Euler => (s.euler.roll.sin(), s.euler.pitch.sin()),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(LevelSetCurve {
                alpha,
                gammas: gammas.clone(),
                points,
            })
        })
        .collect()
}
