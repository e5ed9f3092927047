//! Reference implementations for testing `fusedrot`.
//!
//! [`oracle_convert`] rebuilds every representation from the geometry of the
//! body frame (matrix columns, axis-angle, minimal rotations between axes)
//! without using the closed-form extraction formulas of the library.
//! [`RandomRotationStream`] produces reproducible rotations that are uniform
//! on SO(3), optionally restricted in tilt angle and distance from gimbal lock.

mod geometry;
mod random;

pub use geometry::{oracle_convert, oracle_matrix, OracleError};
pub use random::{random_rotations, RandomRotationStream};
