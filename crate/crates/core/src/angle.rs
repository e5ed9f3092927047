//! Angle wrapping and comparison.

use crate::error::{Result, RotError};
use crate::scalar::Real;

/// An angle in radians normalised to `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle<T>(T);

impl<T: Real> Angle<T> {
    /// Wraps `radians` into `(-π, π]`. Fails on NaN or infinity.
    pub fn new(radians: T) -> Result<Self> {
        wrap(radians)
    }

    #[inline]
    pub fn radians(self) -> T {
        self.0
    }
}

/// Wraps an angle to `(-π, π]`, with `wrap(-π) = π`.
pub fn wrap<T: Real>(a: T) -> Result<Angle<T>> {
    if !a.is_finite() {
        return Err(RotError::NonFinite("angle"));
    }
    Ok(Angle(wrap_radians(a)))
}

/// Unchecked variant of [`wrap`]; NaN propagates.
///
/// Values already inside `(-π, π]` are returned bit-for-bit, which makes the
/// operation exactly idempotent.
#[inline]
pub fn wrap_radians<T: Real>(a: T) -> T {
    let pi = T::PI();
    if a > -pi && a <= pi {
        return a;
    }
    let two_pi = pi + pi;
    let r = (a + pi) % two_pi;
    let r = if r < T::zero() { r + two_pi } else { r };
    let r = r - pi;
    if r <= -pi || r > pi {
        pi
    } else {
        r
    }
}

/// Signed difference `a - b` wrapped into `(-π, π]`.
#[inline]
pub fn angle_delta<T: Real>(a: T, b: T) -> T {
    wrap_radians(a - b)
}

/// Distance between two angles on the circle, `min(|Δ|, 2π - |Δ|)`.
#[inline]
pub fn angle_diff<T: Real>(a: T, b: T) -> T {
    angle_delta(a, b).abs()
}

/// `asin` that tolerates rounding excursions up to the clamp slack.
pub(crate) fn asin_clamped<T: Real>(v: T, what: &'static str) -> Result<T> {
    Ok(clamp_unit(v, what)?.asin())
}

/// `acos` that tolerates rounding excursions up to the clamp slack.
pub(crate) fn acos_clamped<T: Real>(v: T, what: &'static str) -> Result<T> {
    Ok(clamp_unit(v, what)?.acos())
}

fn clamp_unit<T: Real>(v: T, what: &'static str) -> Result<T> {
    if !v.is_finite() {
        return Err(RotError::NonFinite(what));
    }
    let one = T::one();
    if v.abs() <= one {
        Ok(v)
    } else if v.abs() <= one + T::lit(T::TOL.clamp) {
        Ok(v.signum())
    } else {
        Err(RotError::OutOfRange {
            what,
            value: v.as_f64(),
        })
    }
}
