use serde::{Deserialize, Serialize};

use super::Similitude;
use crate::error::{Error, Result};
use crate::scalar::{distance, Scalar};

/// Compact axis-aligned box `[lo_1, hi_1] x .. x [lo_w, hi_w]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct BoxDomain<T> {
    pub lo: Vec<T>,
    pub hi: Vec<T>,
}

impl<T: Scalar> BoxDomain<T> {
    pub fn new(lo: Vec<T>, hi: Vec<T>) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        if lo
            .iter()
            .zip(&hi)
            .any(|(&l, &h)| !(l <= h) || !l.is_finite() || !h.is_finite())
        {
            return Err(Error::InvalidArgument(
                "box bounds must satisfy lo <= hi".into(),
            ));
        }
        Ok(Self { lo, hi })
    }

    pub fn unit(w: usize) -> Self {
        Self {
            lo: vec![T::zero(); w],
            hi: vec![T::one(); w],
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn center(&self) -> Vec<T> {
        let half = T::lit(0.5);
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| (l + h) * half)
            .collect()
    }

    pub fn diameter(&self) -> T {
        distance(&self.lo, &self.hi)
    }

    pub fn contains_box(&self, other: &Self, tol: T) -> bool {
        self.lo.iter().zip(&other.lo).all(|(&a, &b)| b >= a - tol)
            && self.hi.iter().zip(&other.hi).all(|(&a, &b)| b <= a + tol)
    }

    /// Euclidean distance between two boxes, zero when they touch or overlap.
    pub fn distance_to(&self, other: &Self) -> T {
        let mut sq = T::zero();
        for j in 0..self.dim() {
            let gap = (other.lo[j] - self.hi[j])
                .max(self.lo[j] - other.hi[j])
                .max(T::zero());
            sq = sq + gap * gap;
        }
        sq.sqrt()
    }

    pub fn image(&self, map: &Similitude<T>) -> Self {
        let (lo, hi) = map.image_box(&self.lo, &self.hi);
        Self { lo, hi }
    }
}

/// Finite system of contracting similitudes mapping the box `K` into itself.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IfsRepr<T>", into = "IfsRepr<T>")]
#[serde(bound = "T: Scalar")]
pub struct IfsSystem<T> {
    maps: Vec<Similitude<T>>,
    domain: BoxDomain<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
struct IfsRepr<T> {
    w: usize,
    #[serde(rename = "K")]
    domain: Vec<[T; 2]>,
    maps: Vec<Similitude<T>>,
}

impl<T: Scalar> TryFrom<IfsRepr<T>> for IfsSystem<T> {
    type Error = Error;

    fn try_from(r: IfsRepr<T>) -> Result<Self> {
        if r.domain.len() != r.w {
            return Err(Error::DimensionMismatch {
                expected: r.w,
                got: r.domain.len(),
            });
        }
        let lo = r.domain.iter().map(|b| b[0]).collect();
        let hi = r.domain.iter().map(|b| b[1]).collect();
        IfsSystem::new(BoxDomain::new(lo, hi)?, r.maps)
    }
}

impl<T: Scalar> From<IfsSystem<T>> for IfsRepr<T> {
    fn from(s: IfsSystem<T>) -> Self {
        IfsRepr {
            w: s.dim(),
            domain: s
                .domain
                .lo
                .iter()
                .zip(&s.domain.hi)
                .map(|(&l, &h)| [l, h])
                .collect(),
            maps: s.maps,
        }
    }
}

impl<T: Scalar> IfsSystem<T> {
    /// Validates dimensions and `S_i(K) ⊆ K`. Separation is checked separately by
    /// [`verify_separation`].
    pub fn new(domain: BoxDomain<T>, maps: Vec<Similitude<T>>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptyInput);
        }
        if maps.len() > 255 {
            return Err(Error::InvalidAlphabet(maps.len() as u32));
        }
        let w = domain.dim();
        let tol = T::geometric_tolerance().max(T::lit(1e-9) * domain.diameter());
        for (i, s) in maps.iter().enumerate() {
            if s.dim() != w {
                return Err(Error::DimensionMismatch {
                    expected: w,
                    got: s.dim(),
                });
            }
            if !domain.contains_box(&domain.image(s), tol) {
                return Err(Error::NotContained(i));
            }
        }
        Ok(Self { maps, domain })
    }

    pub fn maps(&self) -> &[Similitude<T>] {
        &self.maps
    }

    pub fn domain(&self) -> &BoxDomain<T> {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    /// Alphabet size `m`.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn ratios(&self) -> Vec<T> {
        self.maps.iter().map(Similitude::ratio).collect()
    }

    pub fn max_ratio(&self) -> T {
        self.ratios().into_iter().fold(T::zero(), T::max)
    }

    /// First-level images `S_i(K)`.
    pub fn images(&self) -> Vec<BoxDomain<T>> {
        self.maps.iter().map(|s| self.domain.image(s)).collect()
    }

    fn check_digits(&self, prefix: &[u8]) -> Result<()> {
        let m = self.maps.len();
        match prefix.iter().find(|&&d| d == 0 || usize::from(d) > m) {
            Some(&d) => Err(Error::InvalidDigit {
                digit: u32::from(d),
                m: m as u32,
            }),
            None => Ok(()),
        }
    }

    /// Center and radius of the cylinder image without digit validation.
    pub(crate) fn code_unchecked(&self, prefix: &[u8], center: &mut [T]) -> T {
        let mut x = self.domain.center();
        let mut scratch = x.clone();
        let mut scale = T::one();
        for &d in prefix.iter().rev() {
            let s = &self.maps[usize::from(d) - 1];
            s.apply_into(&x, &mut scratch);
            std::mem::swap(&mut x, &mut scratch);
            scale = scale * s.ratio();
        }
        center.copy_from_slice(&x);
        scale * self.domain.diameter() * T::lit(0.5)
    }
}

/// Minimal distance between distinct first-level images.
///
/// Boundary contact counts as overlap: strong separation needs a strictly
/// positive gap.
pub fn verify_separation<T: Scalar>(ifs: &IfsSystem<T>) -> Result<T> {
    let images = ifs.images();
    let mut gap: Option<T> = None;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            let d = images[i].distance_to(&images[j]);
            if d <= T::zero() {
                return Err(Error::Overlap { i: i + 1, j: j + 1 });
            }
            gap = Some(gap.map_or(d, |g| g.min(d)));
        }
    }
    // a single map has no pair; its attractor is a point
    Ok(gap.unwrap_or_else(T::infinity))
}

/// Ball enclosing the image of a cylinder under the coding map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct CodedPoint<T> {
    pub center: Vec<T>,
    pub radius: T,
    pub prefix: Vec<u8>,
}

impl<T: Scalar> CodedPoint<T> {
    /// Whether this ball lies inside `other`'s, up to `tol`.
    pub fn within(&self, other: &Self, tol: T) -> bool {
        distance(&self.center, &other.center) + self.radius <= other.radius + tol
    }
}

/// Codes a finite prefix: the center is `S_{a_1} ∘ .. ∘ S_{a_n}` applied to the
/// center of `K` (first digit outermost), the radius is `c_{a_1} .. c_{a_n}`
/// times half the diameter of `K`. Every point coded by an extension of the
/// prefix lies in the ball.
pub fn code_point<T: Scalar>(ifs: &IfsSystem<T>, prefix: &[u8]) -> Result<CodedPoint<T>> {
    ifs.check_digits(prefix)?;
    let mut center = vec![T::zero(); ifs.dim()];
    let radius = ifs.code_unchecked(prefix, &mut center);
    Ok(CodedPoint {
        center,
        radius,
        prefix: prefix.to_vec(),
    })
}

/// Middle-third Cantor system on `[0, 1]`.
pub fn middle_third<T: Scalar>() -> IfsSystem<T> {
    let third = T::one() / T::lit(3.0);
    IfsSystem::new(
        BoxDomain::unit(1),
        vec![
            Similitude::line(third, false, T::zero()).unwrap(),
            Similitude::line(third, false, T::lit(2.0) * third).unwrap(),
        ],
    )
    .expect("middle-third system is valid")
}
