use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct MoranSolution<T> {
    pub dimension: T,
    /// `|sum c_i^D - 1|` at the returned root.
    pub residual: T,
}

fn moran_excess<T: Scalar>(ratios: &[T], d: T) -> T {
    ratios.iter().fold(T::zero(), |acc, &c| acc + c.powf(d)) - T::one()
}

/// Root `D` of `sum_i c_i^D = 1`, the similarity dimension of the attractor.
///
/// `D -> sum c_i^D` is strictly decreasing, equals `m` at zero and drops below 1
/// once `D > ln m / -ln(max c)`. Bisection runs on `[0, ln m / -ln(max c) + 1]`
/// until the bracket stops shrinking in the scalar's precision.
pub fn moran_dimension<T: Scalar>(ratios: &[T]) -> Result<MoranSolution<T>> {
    if ratios.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&c) = ratios.iter().find(|&&c| !(c > T::zero() && c < T::one())) {
        return Err(Error::InvalidRatio(c.as_f64()));
    }
    if ratios.len() == 1 {
        return Ok(MoranSolution {
            dimension: T::zero(),
            residual: T::zero(),
        });
    }

    let m = T::from_usize(ratios.len()).unwrap();
    let c_max = ratios.iter().copied().fold(T::zero(), T::max);
    let mut lo = T::zero();
    let mut hi = m.ln() / -c_max.ln() + T::one();
    let half = T::lit(0.5);

    for _ in 0..2048 {
        let mid = (lo + hi) * half;
        if mid <= lo || mid >= hi {
            break;
        }
        if moran_excess(ratios, mid) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let (r_lo, r_hi) = (
        moran_excess(ratios, lo).abs(),
        moran_excess(ratios, hi).abs(),
    );
    let (dimension, residual) = if r_lo <= r_hi { (lo, r_lo) } else { (hi, r_hi) };
    Ok(MoranSolution {
        dimension,
        residual,
    })
}
