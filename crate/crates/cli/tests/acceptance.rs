//! Acceptance suite. Each test checks one criterion at its stated tolerance
//! and prints a single `PASS`/`FAIL` line; run with `--nocapture` to see them.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::path::Path;
use std::process::Command;

use fusedrot::convert::{
    quat_to_euler_zxy, quat_to_euler_zyx, quat_to_fused, quat_to_tilt, rotmat_to_euler_zyx,
    rotmat_to_fused,
};
use fusedrot::ops::{
    apply_z_post, apply_z_pre, fused_yaw, inverse, inverse_euler_zyx, inverse_fused,
};
use fusedrot::{
    angle_diff, wrap_radians, AnyRotationF64 as AnyRotation, EulerZyxF64 as EulerZyx,
    FusedAnglesF64 as FusedAngles, Hemisphere, Kind, QuaternionF64 as Quaternion,
    RotationMatrixF64 as RotationMatrix,
};
use fusedrot_lab::metrics::{max_radius_error, radius_variation, unwrapped_range};
use fusedrot_lab::{
    axisym_scan, euler_sensitivity_probe, level_sets, LevelSetKind, DEFAULT_N_BETA,
};
use fusedrot_oracle::{oracle_convert, OracleError, RandomRotationStream};

fn report(id: u32, name: &str, pass: bool, detail: String) {
    println!(
        "criterion {id:>2} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} failed: {detail}");
}

fn rotations(seed: u64, n: usize, gimbal_margin: f64) -> Vec<Quaternion> {
    RandomRotationStream::new(seed)
        .alpha_cap(PI - 1e-3)
        .unwrap()
        .gimbal_margin(gimbal_margin)
        .unwrap()
        .take(n)
        .collect()
}

/// Low-discrepancy yaw offsets covering the circle.
fn yaw_offset(k: usize) -> f64 {
    const GOLDEN: f64 = 0.618_033_988_749_894_9;
    wrap_radians(2.0 * PI * (k as f64 * GOLDEN).fract())
}

#[test]
fn c01_conversion_graph_consistency() {
    let (mut hub_worst, mut matrix_worst, mut oracle_worst) = (0.0f64, 0.0f64, 0.0f64);
    let mut oracle_skipped = 0usize;
    for q in rotations(101, 100_000, 1e-3) {
        for from in Kind::ALL {
            let src = AnyRotation::from(q).convert(from).unwrap().value;
            for to in Kind::ALL {
                let hub = src.convert_via_hub(to).unwrap().value;
                let direct = src.convert(to).unwrap().value;
                let via_matrix = src.convert_via_matrix(to).unwrap().value;
                hub_worst = hub_worst.max(direct.param_distance(&hub));
                matrix_worst = matrix_worst.max(via_matrix.param_distance(&hub));
                match oracle_convert(&src, to) {
                    Ok(o) => oracle_worst = oracle_worst.max(o.param_distance(&direct)),
                    Err(OracleError::NearSingular(_)) => oracle_skipped += 1,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    report(
        1,
        "conversion graph consistency",
        hub_worst <= 1e-9 && matrix_worst <= 1e-9 && oracle_worst <= 1e-8,
        format!(
            "direct vs hub {hub_worst:.2e}, matrix vs hub {matrix_worst:.2e}, oracle {oracle_worst:.2e}, \
             oracle refusals {oracle_skipped}"
        ),
    );
}

#[test]
fn c02_fused_euler_equalities() {
    let (mut pitch, mut roll) = (0.0f64, 0.0f64);
    for q in rotations(102, 10_000, 1e-3) {
        let fused = quat_to_fused(&q).unwrap().value;
        let zyx = quat_to_euler_zyx(&q).unwrap().value;
        let zxy = quat_to_euler_zxy(&q).unwrap().value;
        pitch = pitch.max((zyx.pitch - fused.pitch).abs());
        roll = roll.max((zxy.roll - fused.roll).abs());
    }
    report(
        2,
        "fused/Euler pitch and roll equalities",
        pitch <= 1e-12 && roll <= 1e-12,
        format!("|theta_E - theta| {pitch:.2e}, |phi_E~ - phi| {roll:.2e}"),
    );
}

#[test]
fn c03_sine_identity() {
    let mut worst = 0.0f64;
    for q in rotations(103, 10_000, 1e-3) {
        let alpha = quat_to_tilt(&q).unwrap().value.tilt;
        let e = quat_to_euler_zyx(&q).unwrap().value;
        let (sa, st, sp) = (
            alpha.sin().powi(2),
            e.pitch.sin().powi(2),
            e.roll.sin().powi(2),
        );
        worst = worst.max((sa - (st + sp - st * sp)).abs());
    }
    report(
        3,
        "tilt/Euler sine identity",
        worst <= 1e-12,
        format!("max residual {worst:.2e}"),
    );
}

#[test]
fn c04_yaw_additivity() {
    let (mut pre, mut post, mut invariance) = (0.0f64, 0.0f64, 0.0f64);
    for (k, q) in rotations(104, 10_000, 1e-3).into_iter().enumerate() {
        let psi_z = yaw_offset(k);
        let kind = Kind::ALL[k % Kind::ALL.len()];
        let r = AnyRotation::from(q).convert(kind).unwrap().value;
        let base = fused_yaw(&r).unwrap().yaw;
        let expected = wrap_radians(base + psi_z);
        pre = pre.max(angle_diff(
            fused_yaw(&apply_z_pre(&r, psi_z).unwrap().value)
                .unwrap()
                .yaw,
            expected,
        ));
        post = post.max(angle_diff(
            fused_yaw(&apply_z_post(&r, psi_z).unwrap().value)
                .unwrap()
                .yaw,
            expected,
        ));

        // independent path: quaternion product, then extraction
        let moved = Quaternion::from_z(psi_z) * q;
        let (f0, f1) = (
            quat_to_fused(&q).unwrap().value,
            quat_to_fused(&moved).unwrap().value,
        );
        let (t0, t1) = (
            quat_to_tilt(&q).unwrap().value,
            quat_to_tilt(&moved).unwrap().value,
        );
        assert_eq!(f0.hemisphere, f1.hemisphere);
        invariance = invariance
            .max((f1.pitch - f0.pitch).abs())
            .max((f1.roll - f0.roll).abs())
            .max((t1.tilt - t0.tilt).abs())
            .max(angle_diff(t1.tilt_axis, t0.tilt_axis));
    }
    report(
        4,
        "yaw additivity",
        pre <= 1e-10 && post <= 1e-10 && invariance <= 1e-12,
        format!("pre {pre:.2e}, post {post:.2e}, pre-multiplication invariance {invariance:.2e}"),
    );
}

#[test]
fn c05_inversion() {
    let (mut yaw, mut zero_yaw, mut euler) = (0.0f64, 0.0f64, 0.0f64);
    for (k, q) in rotations(105, 10_000, 1e-3).into_iter().enumerate() {
        let kind = Kind::ALL[k % Kind::ALL.len()];
        let r = AnyRotation::from(q).convert(kind).unwrap().value;
        let inv = inverse(&r).unwrap().value;
        yaw = yaw.max(angle_diff(
            fused_yaw(&inv).unwrap().yaw,
            -fused_yaw(&r).unwrap().yaw,
        ));

        let f = quat_to_fused(&q).unwrap().value;
        let f0 = FusedAngles::new(0.0, f.pitch, f.roll, f.hemisphere).unwrap();
        let fi = inverse_fused(&f0).unwrap();
        zero_yaw = zero_yaw
            .max(fi.yaw.abs())
            .max((fi.pitch + f0.pitch).abs())
            .max((fi.roll + f0.roll).abs());
        assert_eq!(fi.hemisphere, f0.hemisphere);

        let e = quat_to_euler_zyx(&q).unwrap().value;
        let via_formula = inverse_euler_zyx(&e).unwrap().value;
        let rt = fusedrot::convert::euler_zyx_to_rotmat(&e)
            .unwrap()
            .transpose();
        let via_transpose = rotmat_to_euler_zyx(&rt).unwrap().value;
        let via_oracle = oracle_convert(&rt.into(), Kind::EulerZyx).unwrap();
        let formula = AnyRotation::from(via_formula);
        euler = euler
            .max(formula.param_distance(&via_transpose.into()))
            .max(formula.param_distance(&via_oracle));
    }
    let worked = inverse_euler_zyx(&EulerZyx::new(0.0, FRAC_PI_4, FRAC_PI_2).unwrap())
        .unwrap()
        .value;
    let worked_err = AnyRotation::from(worked)
        .param_distance(&EulerZyx::new(FRAC_PI_4, 0.0, -FRAC_PI_2).unwrap().into());
    report(
        5,
        "inversion",
        yaw <= 1e-10 && zero_yaw <= 1e-10 && euler <= 1e-9 && worked_err <= 1e-12,
        format!(
            "yaw negation {yaw:.2e}, zero-yaw negation {zero_yaw:.2e}, Euler vs transpose {euler:.2e}, \
             worked value {worked_err:.2e}"
        ),
    );
}

#[test]
fn c06_euler_yaw_counterexample() {
    let r = RotationMatrix::rot_z(-FRAC_PI_2)
        * RotationMatrix::rot_x(3.0 * FRAC_PI_4)
        * RotationMatrix::rot_z(FRAC_PI_2);
    let e = rotmat_to_euler_zyx(&r).unwrap().value;
    let err = angle_diff(e.yaw, PI)
        .max((e.pitch + FRAC_PI_4).abs())
        .max(angle_diff(e.roll, PI));
    let fused = rotmat_to_fused(&r).unwrap().value.yaw;
    report(
        6,
        "Euler yaw counterexample",
        err <= 1e-12 && fused.abs() <= 1e-12,
        format!(
            "Euler ({:.12}, {:.12}, {:.12}), error {err:.2e}, fused yaw {fused:.2e}",
            e.yaw, e.pitch, e.roll
        ),
    );
}

#[test]
fn c07_axisymmetry() {
    let mut worst = 0.0f64;
    let mut hemisphere_ok = true;
    for q in rotations(107, 32, 0.0) {
        let scan = axisym_scan(&q.into(), DEFAULT_N_BETA).unwrap();
        assert_eq!(scan.len(), 360);
        for s in &scan {
            worst = worst.max(s.residuals.max());
            hemisphere_ok &= s.residuals.hemisphere_match;
        }
    }
    let base = AnyRotation::from(FusedAngles::new(-1.2, 0.2, -1.3, Hemisphere::Lower).unwrap());
    let scan = axisym_scan(&base, DEFAULT_N_BETA).unwrap();
    let yaws: Vec<f64> = scan.iter().map(|s| s.euler_zyx.yaw).collect();
    let locus: Vec<(f64, f64)> = scan.iter().map(|s| s.euler_sine_ratios).collect();
    let (yaw_range, variation) = (unwrapped_range(&yaws), radius_variation(&locus));
    let mut oracle = 0.0f64;
    for s in &scan {
        let o = oracle_convert(&s.quaternion.into(), Kind::EulerZyx).unwrap();
        oracle = oracle.max(o.param_distance(&s.euler_zyx.into()));
    }
    report(
        7,
        "axisymmetry",
        worst <= 1e-10 && hemisphere_ok && yaw_range > 1.0 && variation > 0.05 && oracle <= 1e-8,
        format!(
            "fused residual {worst:.2e}, hemisphere exact {hemisphere_ok}, Euler yaw range {yaw_range:.4}, \
             Euler radius variation {variation:.4}, oracle {oracle:.2e}"
        ),
    );
}

#[test]
fn c08_level_sets() {
    let alphas = [PI / 12.0, PI / 6.0, PI / 4.0, PI / 3.0, 5.0 * PI / 12.0];
    let fused = level_sets(LevelSetKind::Fused, &alphas, 360).unwrap();
    let worst = fused
        .iter()
        .map(|c| max_radius_error(&c.points, c.alpha.sin()))
        .fold(0.0, f64::max);
    let euler = level_sets(LevelSetKind::Euler, &[PI / 3.0], 360).unwrap();
    let deviation = max_radius_error(&euler[0].points, (PI / 3.0).sin());
    report(
        8,
        "level sets",
        worst <= 1e-12 && deviation > 0.01,
        format!("fused radius error {worst:.2e}, Euler deviation at pi/3 {deviation:.4}"),
    );
}

#[test]
fn c09_singularity_sensitivity() {
    let mut ok = true;
    let (mut last_yaw, mut last_roll) = (0.0, 0.0);
    let mut lines = Vec::new();
    for margin in [1e-2, 1e-3, 1e-4] {
        let p = euler_sensitivity_probe(FRAC_PI_2 - margin, FRAC_PI_2, margin / 10.0).unwrap();
        let (yaw, roll) = (p.euler_yaw_slope.abs(), p.euler_roll_slope.abs());
        ok &= yaw > last_yaw && roll > last_roll;
        ok &= p.fused_yaw_slope == 0.0;
        ok &= p.fused_pitch_slope.abs() <= 1.0 + 1e-9 && p.fused_roll_slope.abs() <= 1.0 + 1e-9;
        lines.push(format!(
            "margin {margin:e}: Euler yaw {yaw:.1}, roll {roll:.1}, fused {:.6}/{:.6}",
            p.fused_pitch_slope.abs(),
            p.fused_roll_slope.abs()
        ));
        (last_yaw, last_roll) = (yaw, roll);
    }
    report(9, "singularity sensitivity", ok, lines.join("; "));
}

#[test]
fn c10_cli_determinism() {
    let run = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_fusedrot"))
            .args(args)
            .env_remove("FUSEDROT_OUTPUT_DIR")
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        o.stdout
    };
    let mut identical = true;
    for args in [
        &["tilt-sweep"][..],
        &["axisym", "--from", "fused", "-1.2", "0.2", "-1.3", "-1"],
    ] {
        identical &= run(args) == run(args);
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (file, args) in common::GOLDEN_CASES {
        let out = String::from_utf8(run(args)).unwrap();
        common::assert_matches_golden(&out, &dir.join(file), &common::AXISYM_ANGLE_COLUMNS);
    }
    report(
        10,
        "CLI determinism",
        identical,
        format!("byte-identical reruns {identical}, 3 goldens matched"),
    );
}
