use core::ops::Mul;

use crate::error::{Result, RotError};
use crate::scalar::Real;
use crate::validate::Validate;

/// 3×3 rotation matrix, row-major: `m[i][j]` is the entry `R_(i+1)(j+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RotationMatrix<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Real> RotationMatrix<T> {
    /// Wraps `m`, rejecting anything that is not orthonormal with unit
    /// determinant to within the unit-norm tolerance.
    pub fn new(m: [[T; 3]; 3]) -> Result<Self> {
        let r = Self { m };
        r.ensure_valid()?;
        Ok(r)
    }

    /// Like [`RotationMatrix::new`] but first re-orthonormalises matrices that
    /// are within the renormalise tolerance of a rotation, e.g. values that
    /// were printed with limited precision.
    pub fn orthonormalised(m: [[T; 3]; 3]) -> Result<Self> {
        let mut r = Self { m };
        for row in &m {
            for v in row {
                if !v.is_finite() {
                    return Err(RotError::NonFinite("matrix entry"));
                }
            }
        }
        if r.orthonormality_error() <= T::lit(T::TOL.renormalise)
            && (r.determinant() - T::one()).abs() <= T::lit(T::TOL.renormalise)
        {
            // Newton-Schulz polar iteration: R <- R (3I - RᵀR) / 2
            for _ in 0..4 {
                let g = r.transpose() * r;
                let mut k = [[T::zero(); 3]; 3];
                for (i, row) in k.iter_mut().enumerate() {
                    for (j, v) in row.iter_mut().enumerate() {
                        let id = if i == j { T::lit(3.0) } else { T::zero() };
                        *v = (id - g.m[i][j]) * T::lit(0.5);
                    }
                }
                r = r * Self { m: k };
            }
        }
        r.ensure_valid()?;
        Ok(r)
    }

    pub fn identity() -> Self {
        let (o, z) = (T::one(), T::zero());
        Self {
            m: [[o, z, z], [z, o, z], [z, z, o]],
        }
    }

    /// Elemental rotation about the x-axis.
    pub fn rot_x(a: T) -> Self {
        let (s, c) = a.sin_cos();
        let (o, z) = (T::one(), T::zero());
        Self {
            m: [[o, z, z], [z, c, -s], [z, s, c]],
        }
    }

    /// Elemental rotation about the y-axis.
    pub fn rot_y(a: T) -> Self {
        let (s, c) = a.sin_cos();
        let (o, z) = (T::one(), T::zero());
        Self {
            m: [[c, z, s], [z, o, z], [-s, z, c]],
        }
    }

    /// Elemental rotation about the z-axis.
    pub fn rot_z(a: T) -> Self {
        let (s, c) = a.sin_cos();
        let (o, z) = (T::one(), T::zero());
        Self {
            m: [[c, -s, z], [s, c, z], [z, z, o]],
        }
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn determinant(&self) -> T {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// `max |RᵀR - I|` over all entries.
    pub fn orthonormality_error(&self) -> T {
        let g = self.transpose() * *self;
        let mut worst = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                let id = if i == j { T::one() } else { T::zero() };
                worst = worst.max((g.m[i][j] - id).abs());
            }
        }
        worst
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        worst
    }

    /// Bottom row `(R₃₁, R₃₂, R₃₃)`: the global z-axis seen from the body.
    pub fn bottom_row(&self) -> [T; 3] {
        self.m[2]
    }

    pub fn mul_vec(&self, v: [T; 3]) -> [T; 3] {
        let m = &self.m;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }
}

impl<T: Real> Mul for RotationMatrix<T> {
    type Output = Self;

    fn mul(self, b: Self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[i][0] * b.m[0][j] + self.m[i][1] * b.m[1][j] + self.m[i][2] * b.m[2][j];
            }
        }
        Self { m: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::Invariant;

    #[test]
    fn elemental_rotations_are_valid() {
        for a in [-3.0, -1.0, 0.0, 0.4, 2.5, 3.1] {
            for r in [
                RotationMatrix::rot_x(a),
                RotationMatrix::rot_y(a),
                RotationMatrix::rot_z(a),
            ] {
                assert!(r.validate().is_ok());
                assert!((r.determinant() - 1.0f64).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rejects_reflection_and_shear() {
        let mut m = RotationMatrix::<f64>::identity().m;
        m[2][2] = -1.0;
        let err = RotationMatrix::new(m).unwrap_err();
        let RotError::InvalidArgument(report) = err else {
            panic!()
        };
        assert!(report
            .violations()
            .iter()
            .any(|v| v.invariant == Invariant::Determinant));
        let mut m = RotationMatrix::<f64>::identity().m;
        m[0][1] = 0.1;
        assert!(RotationMatrix::new(m).is_err());
    }

    #[test]
    fn orthonormalises_printed_values() {
        let r = RotationMatrix::<f64>::rot_x(0.7);
        let mut m = r.m;
        for row in &mut m {
            for v in row.iter_mut() {
                *v = (*v * 1e9).round() / 1e9;
            }
        }
        assert!(RotationMatrix::new(m).is_err());
        let fixed = RotationMatrix::orthonormalised(m).unwrap();
        assert!(fixed.orthonormality_error() < 1e-15);
        assert!(fixed.max_abs_diff(&r) < 1e-9);
    }
}
