use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use fusedrot::QuaternionF64 as Quaternion;

use crate::geometry::{axis_angle_matrix, OracleError};

/// Seeded stream of rotations, uniform on SO(3).
///
/// Each rotation is a normalised vector of four standard normal samples.
/// Normals come from ChaCha20 (`rand_chacha`, seeded with `seed_from_u64` and
/// `set_stream`) through the Box-Muller transform on 53-bit uniforms, so the
/// sequence is fully determined by `(seed, stream)` on every platform.
/// Samples are rejected while their tilt angle `acos(R₃₃)` exceeds the cap or,
/// if a gimbal margin `m` is set, while `|R₃₁|` or `|R₃₂|` exceeds `cos m`.
#[derive(Debug, Clone)]
pub struct RandomRotationStream {
    rng: ChaCha20Rng,
    spare: Option<f64>,
    alpha_cap: f64,
    gimbal_margin: Option<f64>,
}

impl RandomRotationStream {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    /// Independent stream `stream` of generator `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            rng,
            spare: None,
            alpha_cap: std::f64::consts::PI,
            gimbal_margin: None,
        }
    }

    /// Keeps only rotations with tilt angle at most `cap`, `cap ∈ (0, π]`.
    pub fn alpha_cap(mut self, cap: f64) -> Result<Self, OracleError> {
        if !(cap > 0.0 && cap <= std::f64::consts::PI) {
            return Err(OracleError::InvalidArgument(format!(
                "alpha cap {cap} outside (0, π]"
            )));
        }
        self.alpha_cap = cap;
        Ok(self)
    }

    /// Keeps only rotations whose ZYX and ZXY Euler pitch-like angles stay at
    /// least `margin` away from ±π/2.
    pub fn gimbal_margin(mut self, margin: f64) -> Result<Self, OracleError> {
        if !(0.0..std::f64::consts::FRAC_PI_2).contains(&margin) {
            return Err(OracleError::InvalidArgument(format!(
                "gimbal margin {margin} outside [0, π/2)"
            )));
        }
        self.gimbal_margin = Some(margin);
        Ok(self)
    }

    fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn normal(&mut self) -> f64 {
        if let Some(v) = self.spare.take() {
            return v;
        }
        let r = (-2.0 * (1.0 - self.uniform()).ln()).sqrt();
        let t = std::f64::consts::TAU * self.uniform();
        self.spare = Some(r * t.sin());
        r * t.cos()
    }

    fn accept(&self, q: &Quaternion) -> bool {
        let r = axis_angle_matrix(q);
        if r[2][2].clamp(-1.0, 1.0).acos() > self.alpha_cap {
            return false;
        }
        match self.gimbal_margin {
            Some(m) => r[2][0].abs() <= m.cos() && r[2][1].abs() <= m.cos(),
            None => true,
        }
    }
}

impl Iterator for RandomRotationStream {
    type Item = Quaternion;

    fn next(&mut self) -> Option<Quaternion> {
        loop {
            let v = [self.normal(), self.normal(), self.normal(), self.normal()];
            let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if n < 1e-6 {
                continue;
            }
            let q = Quaternion {
                w: v[0] / n,
                x: v[1] / n,
                y: v[2] / n,
                z: v[3] / n,
            };
            if self.accept(&q) {
                return Some(q);
            }
        }
    }
}

/// `n` rotations from stream 0 of `seed`, with tilt angle at most `alpha_cap`.
pub fn random_rotations(
    seed: u64,
    n: usize,
    alpha_cap: f64,
) -> Result<Vec<Quaternion>, OracleError> {
    if n == 0 {
        return Err(OracleError::InvalidArgument("n must be at least 1".into()));
    }
    Ok(RandomRotationStream::new(seed)
        .alpha_cap(alpha_cap)?
        .take(n)
        .collect())
}
