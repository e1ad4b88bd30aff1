//! Contracting similitude systems, their coding map, the Moran dimension and
//! measure-driven samplers.

mod ifs;
mod moran;
mod sampler;
mod similitude;

pub use ifs::{code_point, middle_third, verify_separation, BoxDomain, CodedPoint, IfsSystem};
pub use moran::{moran_dimension, MoranSolution};
pub use sampler::{bernoulli_weights, sample_attractor, sample_pair_set, sample_restricted};
pub use similitude::{SignedPermutation, Similitude};
