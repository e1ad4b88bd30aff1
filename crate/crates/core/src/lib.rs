//! Li-Yorke pairs on self-similar invariant sets.
//!
//! * [`symbolic`]: full shifts, the sequence metric and the construction of
//!   partner sequences forming Li-Yorke pairs with a given base.
//! * [`fractal`]: similitude systems, the coding map, Moran dimension and
//!   Bernoulli-measure samplers.
//! * [`systems`]: tent, skinny baker, linear horseshoe and solenoid-like maps
//!   with their codings and conjugacy checks.
//! * [`analysis`]: Li-Yorke verification of coded orbit pairs and box-counting
//!   dimension estimates.
//!
//! Geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases below fix
//! the common double-precision instantiations.

// `!(a > b)` is used on purpose so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cloud;
pub mod error;
pub mod fractal;
pub mod rng;
pub mod scalar;
pub mod symbolic;
pub mod systems;

pub use cloud::{CodedCloud, PointCloud};
pub use error::{Error, Result};
pub use scalar::Scalar;

pub type IfsSystem64 = fractal::IfsSystem<f64>;
pub type IfsSystem32 = fractal::IfsSystem<f32>;
pub type Similitude64 = fractal::Similitude<f64>;
pub type CodedPoint64 = fractal::CodedPoint<f64>;
pub type MoranSolution64 = fractal::MoranSolution<f64>;
pub type SystemSpec64 = systems::SystemSpec<f64>;
pub type SystemSpec32 = systems::SystemSpec<f32>;
pub type PointCloud64 = PointCloud<f64>;
pub type CodedCloud64 = CodedCloud<f64>;
pub type BoxCountEstimate64 = analysis::BoxCountEstimate<f64>;
pub type LiYorkeProfile64 = analysis::LiYorkeProfile<f64>;
