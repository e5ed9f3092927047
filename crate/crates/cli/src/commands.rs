use std::f64::consts::{FRAC_PI_2, PI};

use fusedrot::{AnyRotationF64, Extracted, Kind, Singularity};
use fusedrot_lab::LevelSetKind;

use crate::output::{format_number, Cell, Format, Table};
use crate::{CliError, Outcome};

pub struct Context {
    pub degrees: bool,
    pub format: Option<Format>,
}

impl Context {
    fn angle(&self, v: f64) -> f64 {
        if self.degrees {
            v.to_radians()
        } else {
            v
        }
    }

    fn angles(&self, v: &[f64]) -> Vec<f64> {
        v.iter().map(|&x| self.angle(x)).collect()
    }

    fn rotation(&self, kind: Kind, values: &[f64]) -> Result<AnyRotationF64, CliError> {
        if values.len() != kind.param_count() {
            return Err(CliError::Domain(format!(
                "{kind} takes {} values ({}), got {}",
                kind.param_count(),
                kind.param_names().join(", "),
                values.len()
            )));
        }
        let p: Vec<f64> = values
            .iter()
            .zip(kind.angle_mask())
            .map(|(&v, &is_angle)| if is_angle { self.angle(v) } else { v })
            .collect();
        Ok(AnyRotationF64::from_params(kind, &p)?)
    }

    fn table(&self, t: Table, singularity: Option<Singularity>) -> Result<Outcome, CliError> {
        Ok(Outcome {
            bytes: t.render(self.format.unwrap_or(Format::Csv))?,
            singularity,
        })
    }
}

pub fn convert(ctx: &Context, from: Kind, to: Kind, values: &[f64]) -> Result<Outcome, CliError> {
    let source = ctx.rotation(from, values)?;
    let Extracted { value, singularity } = source.convert(to)?;
    let params = value.params();
    let bytes = match ctx.format {
        None => {
            let mut line = params
                .iter()
                .map(|&v| format_number(v))
                .collect::<Vec<_>>()
                .join(" ");
            line.push('\n');
            line.into_bytes()
        }
        Some(f) => {
            let mut t = Table::new(to.param_names().to_vec());
            t.push(params.into_iter().map(Cell::from).collect());
            t.render(f)?
        }
    };
    Ok(Outcome { bytes, singularity })
}

pub fn tilt_sweep(
    ctx: &Context,
    alpha_max: f64,
    n_radial: usize,
    n_angular: usize,
) -> Result<Outcome, CliError> {
    let samples = fusedrot_lab::tilt_sweep(ctx.angle(alpha_max), n_radial, n_angular)?;
    let mut t = Table::new(vec![
        "x",
        "y",
        "gamma",
        "alpha",
        "fused_psi",
        "fused_theta",
        "fused_phi",
        "fused_h",
        "euler_psi",
        "euler_theta",
        "euler_phi",
    ]);
    for s in &samples {
        let (f, e) = (&s.fused, &s.euler);
        t.push(
            [
                s.x,
                s.y,
                s.gamma,
                s.alpha,
                f.yaw,
                f.pitch,
                f.roll,
                f64::from(f.hemisphere.sign()),
                e.yaw,
                e.pitch,
                e.roll,
            ]
            .into_iter()
            .map(Cell::from)
            .collect(),
        );
    }
    ctx.table(t, None)
}

pub fn axisym(
    ctx: &Context,
    from: &str,
    seed: Option<u64>,
    values: &[f64],
    n_beta: usize,
) -> Result<Outcome, CliError> {
    let base = if from == "random" {
        if !values.is_empty() {
            return Err(CliError::Domain("--from random takes no values".into()));
        }
        let seed = seed.ok_or_else(|| CliError::Domain("--from random needs --seed".into()))?;
        let q = fusedrot_oracle::RandomRotationStream::new(seed)
            .alpha_cap(PI - 1e-3)?
            .next()
            .expect("the random stream never ends");
        AnyRotationF64::from(q)
    } else {
        if seed.is_some() {
            return Err(CliError::Domain(
                "--seed only applies to --from random".into(),
            ));
        }
        let kind: Kind = from.parse().map_err(CliError::Domain)?;
        ctx.rotation(kind, values)?
    };
    let samples = fusedrot_lab::axisym_scan(&base, n_beta)?;
    let mut t = Table::new(vec![
        "beta",
        "fused_psi",
        "sin_fused_phi",
        "sin_fused_theta",
        "gamma",
        "alpha",
        "h",
        "euler_psi",
        "sin_euler_phi",
        "sin_euler_theta",
    ]);
    for s in &samples {
        t.push(
            [
                s.beta,
                s.fused.yaw,
                s.fused_sine_ratios.0,
                s.fused_sine_ratios.1,
                s.tilt.tilt_axis,
                s.tilt.tilt,
                f64::from(s.fused.hemisphere.sign()),
                s.euler_zyx.yaw,
                s.euler_sine_ratios.0,
                s.euler_sine_ratios.1,
            ]
            .into_iter()
            .map(Cell::from)
            .collect(),
        );
    }
    ctx.table(t, None)
}

pub fn levels(
    ctx: &Context,
    kind: LevelSetKind,
    alphas: &[f64],
    n_gamma: usize,
) -> Result<Outcome, CliError> {
    let curves = fusedrot_lab::level_sets(kind, &ctx.angles(alphas), n_gamma)?;
    let repr = match kind {
        LevelSetKind::Fused => "fused",
        LevelSetKind::Euler => "euler",
    };
    let mut t = Table::new(vec!["alpha", "gamma", "sin_phi", "sin_theta", "repr"]);
    for c in &curves {
        for (&g, &(sp, st)) in c.gammas.iter().zip(&c.points) {
            t.push(vec![
                c.alpha.into(),
                g.into(),
                sp.into(),
                st.into(),
                repr.into(),
            ]);
        }
    }
    ctx.table(t, None)
}

pub fn probe(
    ctx: &Context,
    alphas: &[f64],
    margins: &[f64],
    gamma: f64,
    delta: Option<f64>,
) -> Result<Outcome, CliError> {
    let delta = delta.map(|d| ctx.angle(d));
    let gamma = ctx.angle(gamma);
    let mut runs = Vec::new();
    if !alphas.is_empty() {
        for a in ctx.angles(alphas) {
            runs.push((a, delta.unwrap_or(0.01)));
        }
    } else {
        let margins = if margins.is_empty() {
            vec![1e-2, 1e-3, 1e-4]
        } else {
            ctx.angles(margins)
        };
        for m in margins {
            if !(m > 0.0 && m < FRAC_PI_2) {
                return Err(CliError::Domain(format!(
                    "margin {m} must lie in (0, pi/2)"
                )));
            }
            runs.push((FRAC_PI_2 - m, delta.unwrap_or(m / 10.0)));
        }
    }
    let mut t = Table::new(vec![
        "alpha",
        "gamma_center",
        "margin",
        "slope_euler_psi",
        "slope_euler_phi",
        "slope_fused_theta",
        "slope_fused_phi",
    ]);
    for (alpha, d) in runs {
        let p = fusedrot_lab::euler_sensitivity_probe(alpha, gamma, d)?;
        t.push(
            [
                p.alpha,
                p.gamma_center,
                p.gimbal_margin,
                p.euler_yaw_slope,
                p.euler_roll_slope,
                p.fused_pitch_slope,
                p.fused_roll_slope,
            ]
            .into_iter()
            .map(Cell::from)
            .collect(),
        );
    }
    ctx.table(t, None)
}
