//! Summary measures of loci and parameter curves.

use std::f64::consts::PI;

use fusedrot::angle_delta;

/// `max r - min r` over the distances of `points` from the origin.
pub fn radius_variation(points: &[(f64, f64)]) -> f64 {
    let radii = points.iter().map(|(a, b)| a.hypot(*b));
    let (lo, hi) = radii.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
        (lo.min(r), hi.max(r))
    });
    if points.is_empty() {
        0.0
    } else {
        hi - lo
    }
}

/// Largest `|r - radius|` over `points`.
pub fn max_radius_error(points: &[(f64, f64)], radius: f64) -> f64 {
    points
        .iter()
        .map(|(a, b)| (a.hypot(*b) - radius).abs())
        .fold(0.0, f64::max)
}

/// Range of an angle sequence after unwrapping consecutive jumps.
pub fn unwrapped_range(angles: &[f64]) -> f64 {
    let Some(&first) = angles.first() else {
        return 0.0;
    };
    let (mut cur, mut lo, mut hi) = (first, first, first);
    for w in angles.windows(2) {
        cur += angle_delta(w[1], w[0]);
        lo = lo.min(cur);
        hi = hi.max(cur);
    }
    hi - lo
}

/// Largest deviation of consecutive polar-angle steps of a closed locus from
/// the uniform step `-2π / n` (clockwise traversal).
pub fn polar_spacing_error(points: &[(f64, f64)]) -> f64 {
    let n = points.len();
    if n < 2 {
        return 0.0;
    }
    let step = -2.0 * PI / n as f64;
    let polar: Vec<f64> = points.iter().map(|(a, b)| b.atan2(*a)).collect();
    (0..n)
        .map(|k| (angle_delta(polar[(k + 1) % n], polar[k]) - step).abs())
        .fold(0.0, f64::max)
}
