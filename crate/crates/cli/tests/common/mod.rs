#![allow(dead_code)]

use std::path::Path;

pub const AXISYM_ANGLE_COLUMNS: [&str; 4] = ["beta", "fused_psi", "gamma", "euler_psi"];

/// Stored axisym scans: identity, a 3π/4 roll about x and a lower-hemisphere
/// fused base.
pub const GOLDEN_CASES: [(&str, &[&str]); 3] = [
    (
        "axisym_identity.csv",
        &[
            "axisym", "--from", "quat", "1", "0", "0", "0", "--n-beta", "8",
        ],
    ),
    (
        "axisym_rx.csv",
        &[
            "axisym",
            "--from",
            "tilt",
            "0",
            "0",
            "2.356194490192345",
            "--n-beta",
            "8",
        ],
    ),
    (
        "axisym_fused.csv",
        &[
            "axisym", "--from", "fused", "-1.2", "0.2", "-1.3", "-1", "--n-beta", "8",
        ],
    ),
];

/// Cell-wise comparison against a stored CSV. Angle columns are compared on
/// the circle so that `π` and `-π` agree.
pub fn assert_matches_golden(actual: &str, golden: &Path, angle_columns: &[&str]) {
    let expected = std::fs::read_to_string(golden).unwrap();
    let (mut a, mut e) = (actual.lines(), expected.lines());
    let header = e.next().unwrap();
    assert_eq!(a.next(), Some(header));
    let angle: Vec<bool> = header
        .split(',')
        .map(|h| angle_columns.contains(&h))
        .collect();
    let (a, e): (Vec<_>, Vec<_>) = (a.collect(), e.collect());
    assert_eq!(a.len(), e.len());
    for (ra, re) in a.iter().zip(&e) {
        for ((ca, ce), &is_angle) in ra.split(',').zip(re.split(',')).zip(&angle) {
            let (x, y): (f64, f64) = (ca.parse().unwrap(), ce.parse().unwrap());
            let d = if is_angle {
                fusedrot::angle_diff(x, y).abs()
            } else {
                (x - y).abs()
            };
            assert!(d <= 1e-9, "{}: {ca} vs {ce}", golden.display());
        }
    }
}
