//! Kinematics in the generalized complex plane `C_p`, where `i^2 = p`.
//!
//! One parameter covers the elliptic (`p < 0`), parabolic (`p = 0`) and
//! hyperbolic (`p > 0`) planes. The crate provides the number system and
//! p-trigonometry, polynomial one-parameter motions with their
//! instantaneous invariants, the Euler-Savary relation and the Bobillier
//! identity of three pole rays.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64` aliases
//! below are the intended default.

pub mod bobillier;
pub mod error;
pub mod euler_savary;
pub mod gc;
pub mod motion;
pub mod poly;
pub mod scalar;
pub mod synthetic;
pub mod trig;

pub use error::{Error, NullBoundary, Result};
pub use gc::{GcNum, Geometry, PAngle, PlaneParam, PolarForm, Sector};
pub use motion::MotionSpec;
pub use scalar::Scalar;

pub type GcNum64 = GcNum<f64>;
pub type GcNum32 = GcNum<f32>;
pub type PlaneParam64 = PlaneParam<f64>;
pub type PlaneParam32 = PlaneParam<f32>;
pub type PAngle64 = PAngle<f64>;
pub type MotionSpec64 = MotionSpec<f64>;
pub type MotionSpec32 = MotionSpec<f32>;
