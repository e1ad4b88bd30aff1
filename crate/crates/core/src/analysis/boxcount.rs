use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::cloud::PointCloud;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Occupied-cell counts over a ladder of grid sizes, optionally with a fitted
/// log-log slope.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct BoxCountEstimate<T> {
    /// Strictly decreasing grid sizes.
    pub epsilons: Vec<T>,
    pub counts: Vec<usize>,
    pub sample_count: usize,
    pub slope: Option<T>,
    pub stderr: Option<T>,
    pub intercept: Option<T>,
    /// Ladder indices used by the fit.
    pub fit_range: Vec<usize>,
}

/// `base^{-j}` for `j` in `j_min..=j_max`.
pub fn geometric_ladder<T: Scalar>(base: T, j_min: i32, j_max: i32) -> Vec<T> {
    (j_min..=j_max).map(|j| base.powi(-j)).collect()
}

/// Default ladder `2^{-4} .. 2^{-14}`.
pub fn dyadic_ladder<T: Scalar>() -> Vec<T> {
    geometric_ladder(T::lit(2.0), 4, 14)
}

/// Geometric ladder with ratio `1/base` covering `[eps_min, eps_max]`.
pub fn ladder_between<T: Scalar>(eps_max: T, eps_min: T, base: T) -> Result<Vec<T>> {
    if !(eps_min > T::zero() && eps_min <= eps_max && base > T::one()) {
        return Err(Error::InvalidArgument(
            "ladder needs 0 < eps_min <= eps_max and base > 1".into(),
        ));
    }
    let lb = base.ln();
    // small slack so exact powers of the base land inside
    let slack = T::lit(1e-9);
    let j_lo = (-eps_max.ln() / lb - slack).ceil();
    let j_hi = (-eps_min.ln() / lb + slack).floor();
    let (j_lo, j_hi) = (j_lo.to_i32().unwrap_or(0), j_hi.to_i32().unwrap_or(0));
    if j_hi < j_lo {
        return Err(Error::InvalidArgument(
            "ladder range contains no grid size".into(),
        ));
    }
    Ok(geometric_ladder(base, j_lo, j_hi))
}

type Cell = SmallVec<[i64; 6]>;

const POINTS_PER_TASK: usize = 1 << 14;

fn count_cells<T: Scalar>(points: &PointCloud<T>, eps: T) -> usize {
    let inv = T::one() / eps;
    let dim = points.dim();
    points
        .coords()
        .par_chunks(POINTS_PER_TASK * dim)
        .map(|chunk| {
            chunk
                .chunks_exact(dim)
                .map(|p| {
                    p.iter()
                        .map(|&x| (x * inv).floor().to_i64().unwrap_or(i64::MAX))
                        .collect::<Cell>()
                })
                .collect::<HashSet<Cell>>()
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return merge(b, a);
            }
            a.extend(b);
            a
        })
        .len()
}

fn merge(mut big: HashSet<Cell>, small: HashSet<Cell>) -> HashSet<Cell> {
    big.extend(small);
    big
}

/// Number of grid cells `floor(x / ε)` (per axis) hit by at least one point,
/// for each `ε` of the ladder. Point chunks build local cell sets that are
/// merged by union, so the counts do not depend on the thread count.
pub fn box_count<T: Scalar>(points: &PointCloud<T>, epsilons: &[T]) -> Result<BoxCountEstimate<T>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if epsilons.is_empty()
        || epsilons.iter().any(|&e| !(e > T::zero()) || !e.is_finite())
        || epsilons.windows(2).any(|w| !(w[1] < w[0]))
    {
        return Err(Error::InvalidArgument(
            "epsilon ladder must be positive and strictly decreasing".into(),
        ));
    }
    if points.coords().iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidArgument(
            "point coordinates must be finite".into(),
        ));
    }
    let counts = epsilons.iter().map(|&e| count_cells(points, e)).collect();
    Ok(BoxCountEstimate {
        epsilons: epsilons.to_vec(),
        counts,
        sample_count: points.len(),
        slope: None,
        stderr: None,
        intercept: None,
        fit_range: Vec::new(),
    })
}

/// Saturation guards: a ladder point is usable when `8 <= N_ε <= n / 8`.
pub fn usable_range<T>(estimate: &BoxCountEstimate<T>) -> Vec<usize> {
    let upper = estimate.sample_count / 8;
    estimate
        .counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c >= 8 && c <= upper && c > 1 && c < estimate.sample_count)
        .map(|(i, _)| i)
        .collect()
}

/// Ordinary least squares of `log N_ε` against `-log ε` over the usable ladder
/// points, with the usual standard error of the slope.
pub fn dimension_fit<T: Scalar>(estimate: &BoxCountEstimate<T>) -> Result<BoxCountEstimate<T>> {
    let range = usable_range(estimate);
    if range.len() < 4 {
        return Err(Error::DegenerateFit {
            usable: range.len(),
        });
    }
    let xs: Vec<T> = range.iter().map(|&i| -estimate.epsilons[i].ln()).collect();
    let ys: Vec<T> = range
        .iter()
        .map(|&i| T::from_usize(estimate.counts[i]).unwrap().ln())
        .collect();
    let n = T::from_usize(xs.len()).unwrap();
    let mean = |v: &[T]| v.iter().fold(T::zero(), |a, &b| a + b) / n;
    let (mx, my) = (mean(&xs), mean(&ys));
    let mut sxx = T::zero();
    let mut sxy = T::zero();
    for (&x, &y) in xs.iter().zip(&ys) {
        sxx = sxx + (x - mx) * (x - mx);
        sxy = sxy + (x - mx) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .fold(T::zero(), |a, b| a + b);
    let stderr = (sse / (n - T::lit(2.0)) / sxx).sqrt();
    Ok(BoxCountEstimate {
        slope: Some(slope),
        stderr: Some(stderr),
        intercept: Some(intercept),
        fit_range: range,
        ..estimate.clone()
    })
}

impl<T: Scalar> BoxCountEstimate<T> {
    /// Two-column CSV `(-log ε, log N_ε)` with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("neg_log_eps,log_count\n");
        for (&e, &c) in self.epsilons.iter().zip(&self.counts) {
            let x = -e.ln().as_f64();
            let y = (c as f64).ln();
            out.push_str(&format!("{x:.16e},{y:.16e}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_point_is_one_box() {
        let pts = PointCloud::new(1, vec![0.3; 100]).unwrap();
        let est = box_count(&pts, &dyadic_ladder::<f64>()).unwrap();
        assert!(est.counts.iter().all(|&c| c == 1));
        assert_eq!(dimension_fit(&est), Err(Error::DegenerateFit { usable: 0 }));
    }

    #[test]
    fn grid_points_fill_the_interval() {
        let n = 1 << 16;
        let coords: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let pts = PointCloud::new(1, coords).unwrap();
        let est = dimension_fit(&box_count(&pts, &dyadic_ladder::<f64>()).unwrap()).unwrap();
        for (j, &c) in (4..=14).zip(&est.counts) {
            assert_eq!(c, 1 << j);
        }
        assert!((est.slope.unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_input() {
        let empty = PointCloud::<f64>::new(1, vec![]).unwrap();
        assert_eq!(box_count(&empty, &[0.5]), Err(Error::EmptyInput));
        let pts = PointCloud::new(1, vec![0.1]).unwrap();
        assert!(box_count(&pts, &[0.25, 0.5]).is_err());
        assert!(box_count(&pts, &[0.0]).is_err());
    }

    #[test]
    fn ladder_between_hits_endpoints() {
        let l = ladder_between(2f64.powi(-4), 2f64.powi(-14), 2.0).unwrap();
        assert_eq!(l.len(), 11);
        assert_eq!(l[0], 0.0625);
        let t = ladder_between(1.0 / 3.0, 3f64.powi(-12), 3.0).unwrap();
        assert_eq!(t.len(), 12);
        assert!(ladder_between(0.1, 0.2, 2.0).is_err());
    }

    #[test]
    fn csv_layout() {
        let pts = PointCloud::new(1, vec![0.1, 0.9]).unwrap();
        let est = box_count(&pts, &[0.5]).unwrap();
        let csv = est.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("neg_log_eps,log_count"));
        let row: Vec<f64> = lines
            .next()
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert!((row[0] - 2f64.ln()).abs() < 1e-15);
        assert!((row[1] - 2f64.ln()).abs() < 1e-15);
    }
}
