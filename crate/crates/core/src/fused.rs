use crate::error::{Result, RotError};
use crate::scalar::Real;
use crate::validate::Validate;

/// Which of the two body z-axis solutions a set of fused angles selects.
///
/// Equal to the sign of `cos(tilt)`; the equator `tilt = π/2` belongs to
/// [`Hemisphere::Upper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Hemisphere {
    #[default]
    Upper,
    Lower,
}

impl Hemisphere {
    /// `+1` or `-1`.
    pub fn sign(self) -> i8 {
        match self {
            Hemisphere::Upper => 1,
            Hemisphere::Lower => -1,
        }
    }

    pub fn to_real<T: Real>(self) -> T {
        match self {
            Hemisphere::Upper => T::one(),
            Hemisphere::Lower => -T::one(),
        }
    }

    /// Sign of `v` with `sign(0) = +1`.
    pub fn from_sign_of<T: Real>(v: T) -> Self {
        if v >= T::zero() {
            Hemisphere::Upper
        } else {
            Hemisphere::Lower
        }
    }
}

impl TryFrom<i64> for Hemisphere {
    type Error = RotError;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Hemisphere::Upper),
            -1 => Ok(Hemisphere::Lower),
            _ => Err(RotError::InvalidArgument(
                crate::validate::ValidationReport::single(
                    crate::validate::Invariant::Hemisphere,
                    (v as f64).abs() - 1.0,
                ),
            )),
        }
    }
}

/// Fused angles `(yaw, pitch, roll, hemisphere)`.
///
/// Pitch and roll are the signed angles between the global z-axis and the
/// body yz and xz planes. Valid values satisfy the sine sum criterion
/// `sin²(pitch) + sin²(roll) ≤ 1`, equivalently `|pitch| + |roll| ≤ π/2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FusedAngles<T> {
    pub yaw: T,
    pub pitch: T,
    pub roll: T,
    pub hemisphere: Hemisphere,
}

impl<T: Real> FusedAngles<T> {
    pub fn new(yaw: T, pitch: T, roll: T, hemisphere: Hemisphere) -> Result<Self> {
        let f = Self {
            yaw,
            pitch,
            roll,
            hemisphere,
        };
        f.ensure_valid()?;
        Ok(f)
    }

    /// Whether the fused yaw is undefined: zero pitch and roll in the lower
    /// hemisphere, i.e. a tilt of π.
    pub fn is_yaw_singular(&self) -> bool {
        // cos²(α/2) = (1 + cos α) / 2
        let cos_tilt = self.hemisphere.to_real::<T>()
            * crate::convert::fused_cos_tilt_abs(self.pitch, self.roll);
        (T::one() + cos_tilt) * T::lit(0.5) <= T::lit(T::TOL.yaw_singular_sq)
    }
}
