use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fractal::CodedPoint;
use crate::scalar::Scalar;

/// Points in `R^dim` stored row-major in one buffer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct PointCloud<T> {
    dim: usize,
    coords: Vec<T>,
}

impl<T: Scalar> PointCloud<T> {
    pub fn new(dim: usize, coords: Vec<T>) -> Result<Self> {
        if dim == 0 || !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coords.len(),
            });
        }
        Ok(Self { dim, coords })
    }

    pub fn from_points<P: AsRef<[T]>>(points: &[P]) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyInput)?.as_ref().len();
        let mut coords = Vec::with_capacity(dim * points.len());
        for p in points {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Self::new(dim, coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, T> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self {
            dim: self.dim,
            coords: self.coords.iter().map(|&x| x * factor).collect(),
        }
    }

    /// Keeps the coordinates `axes` of every point.
    pub fn project(&self, axes: std::ops::Range<usize>) -> Self {
        let dim = axes.len();
        let mut coords = Vec::with_capacity(dim * self.len());
        for p in self.iter() {
            coords.extend_from_slice(&p[axes.clone()]);
        }
        Self { dim, coords }
    }
}

/// Sampled coded points in structure-of-arrays form.
#[derive(Clone, Debug, PartialEq)]
pub struct CodedCloud<T> {
    pub cloud: PointCloud<T>,
    pub radii: Vec<T>,
    prefixes: Vec<u8>,
    prefix_len: usize,
}

impl<T: Scalar> CodedCloud<T> {
    pub(crate) fn from_parts(
        cloud: PointCloud<T>,
        radii: Vec<T>,
        prefixes: Vec<u8>,
        prefix_len: usize,
    ) -> Self {
        debug_assert_eq!(cloud.len(), radii.len());
        debug_assert_eq!(prefixes.len(), prefix_len * radii.len());
        Self {
            cloud,
            radii,
            prefixes,
            prefix_len,
        }
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    /// Digits that produced point `i`. For pair samples this is the base prefix
    /// followed by the partner prefix.
    pub fn prefix(&self, i: usize) -> &[u8] {
        &self.prefixes[i * self.prefix_len..(i + 1) * self.prefix_len]
    }

    pub fn get(&self, i: usize) -> CodedPoint<T> {
        CodedPoint {
            center: self.cloud.point(i).to_vec(),
            radius: self.radii[i],
            prefix: self.prefix(i).to_vec(),
        }
    }

    pub fn max_radius(&self) -> T {
        self.radii.iter().copied().fold(T::zero(), T::max)
    }
}
