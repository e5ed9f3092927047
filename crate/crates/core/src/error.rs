use crate::validate::ValidationReport;

/// Where a conversion lands on a representation singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Singularity {
    /// Tilt angle of π: the fused yaw is undefined and reported as zero.
    FusedYaw,
    /// Euler pitch of ±π/2: yaw and roll are coupled; roll is reported as zero.
    GimbalLock,
}

impl core::fmt::Display for Singularity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Singularity::FusedYaw => f.write_str("fused yaw singularity (tilt angle = pi)"),
            Singularity::GimbalLock => f.write_str("gimbal lock (Euler pitch = +-pi/2)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RotError {
    #[error("non-finite value for {0}")]
    NonFinite(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(ValidationReport),
    #[error("{what} argument {value:e} exceeds [-1, 1] beyond rounding slack")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("rotation is singular: {0}")]
    Singular(Singularity),
}

pub type Result<T, E = RotError> = core::result::Result<T, E>;
