use std::f64::consts::{FRAC_PI_2, PI};

use fusedrot::{AnyRotationF64 as AnyRotation, FusedAnglesF64 as FusedAngles, Hemisphere, Kind};
use fusedrot_lab::metrics::{polar_spacing_error, radius_variation, unwrapped_range};
use fusedrot_lab::*;
use fusedrot_oracle::{oracle_convert, RandomRotationStream};

#[test]
fn axisymmetry_holds_for_random_bases() {
    let bases = RandomRotationStream::new(21).alpha_cap(PI - 1e-3).unwrap();
    for q in bases.take(8) {
        let scan = axisym_scan(&q.into(), DEFAULT_N_BETA).unwrap();
        assert_eq!(scan.len(), 360);
        for s in &scan {
            assert!(s.residuals.max() <= 1e-10, "{:?}", s.residuals);
            assert!(s.residuals.hemisphere_match);
        }
        let locus: Vec<_> = scan.iter().map(|s| s.fused_sine_ratios).collect();
        assert!(radius_variation(&locus) <= 1e-10);
        assert!(polar_spacing_error(&locus) <= 1e-9);
    }
}

#[test]
fn euler_angles_are_not_axisymmetric() {
    let base = AnyRotation::from(FusedAngles::new(-1.2, 0.2, -1.3, Hemisphere::Lower).unwrap());
    let scan = axisym_scan(&base, DEFAULT_N_BETA).unwrap();
    let yaws: Vec<_> = scan.iter().map(|s| s.euler_zyx.yaw).collect();
    let locus: Vec<_> = scan.iter().map(|s| s.euler_sine_ratios).collect();
    assert!(unwrapped_range(&yaws) > 1.0);
    assert!(radius_variation(&locus) > 0.05);
    for s in scan.iter().step_by(10) {
        let oracle = oracle_convert(&s.quaternion.into(), Kind::EulerZyx).unwrap();
        assert!(oracle.param_distance(&s.euler_zyx.into()) <= 1e-8);
    }
}

#[test]
fn sweep_has_zero_fused_yaw_and_symmetric_pitch_roll() {
    let n = 64;
    let sweep = tilt_sweep(DEFAULT_ALPHA_MAX, 24, n).unwrap();
    assert!(sweep.iter().all(|s| s.fused.yaw == 0.0));
    let mut euler_gap = 0.0f64;
    for (idx, s) in sweep.iter().enumerate() {
        let (i, j) = (idx / n, idx % n);
        // γ = π/2 - γ_j sits at index (5n/4 - j - 2) mod n
        let k = (5 * n / 4 + 2 * n - j - 2) % n;
        let mirror = &sweep[i * n + k];
        assert!((fusedrot::wrap_radians(FRAC_PI_2 - s.gamma) - mirror.gamma).abs() < 1e-12);
        assert!((s.fused.pitch - mirror.fused.roll).abs() <= 1e-12);
        euler_gap = euler_gap.max((s.euler.pitch - mirror.euler.roll).abs());
    }
    assert!(euler_gap > 0.01);
}

#[test]
fn sweep_matches_oracle() {
    for s in tilt_sweep(2.5, 10, 32)
        .unwrap()
        .iter()
        .filter(|s| !s.euler_singular)
    {
        let t = AnyRotation::from(fusedrot::TiltAnglesF64 {
            yaw: 0.0,
            tilt_axis: s.gamma,
            tilt: s.alpha,
        });
        let fused = oracle_convert(&t, Kind::Fused).unwrap();
        assert!(fused.param_distance(&s.fused.into()) <= 1e-8);
        if FRAC_PI_2 - s.euler.pitch.abs() > 1e-3 {
            let euler = oracle_convert(&t, Kind::EulerZyx).unwrap();
            assert!(euler.param_distance(&s.euler.into()) <= 1e-8);
        }
    }
}

#[test]
fn euler_slopes_grow_towards_gimbal_lock() {
    let mut last = 0.0;
    for margin in [1e-2, 1e-3, 1e-4] {
        let p = euler_sensitivity_probe(FRAC_PI_2 - margin, FRAC_PI_2, margin / 10.0).unwrap();
        assert!((p.gimbal_margin - margin).abs() < 1e-9);
        assert_eq!(p.fused_yaw_slope, 0.0);
        assert!(p.fused_pitch_slope.abs() <= 1.0 + 1e-9 && p.fused_roll_slope.abs() <= 1.0 + 1e-9);
        let slope = p.euler_yaw_slope.abs();
        assert!(slope > last, "{margin}: {slope} <= {last}");
        last = slope;
    }
}

#[test]
fn fused_level_sets_are_circles() {
    let alphas = [0.2, 0.7, 1.2, FRAC_PI_2];
    for c in level_sets(LevelSetKind::Fused, &alphas, 128).unwrap() {
        assert!(metrics::max_radius_error(&c.points, c.alpha.sin()) <= 1e-12);
    }
    let euler = level_sets(LevelSetKind::Euler, &[PI / 3.0], 128).unwrap();
    assert!(metrics::max_radius_error(&euler[0].points, (PI / 3.0).sin()) > 0.01);
}
