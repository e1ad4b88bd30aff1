use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Orthogonal part of a similitude restricted to signed permutation matrices,
/// which keeps images of axis-aligned boxes axis-aligned.
///
/// Output coordinate `j` is `±x[perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    negate: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(w: usize) -> Self {
        Self {
            perm: (0..w).collect(),
            negate: vec![false; w],
        }
    }

    /// Diagonal matrix with entries `±1`.
    pub fn diagonal<T: Scalar>(diag: &[T]) -> Result<Self> {
        let negate = diag
            .iter()
            .map(|&d| {
                if d == T::one() {
                    Ok(false)
                } else if d == -T::one() {
                    Ok(true)
                } else {
                    Err(Error::InvalidOrthogonal)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            perm: (0..diag.len()).collect(),
            negate,
        })
    }

    /// Row-major `w x w` matrix; must have exactly one `±1` per row and column.
    pub fn from_matrix<T: Scalar>(rows: &[T], w: usize) -> Result<Self> {
        if rows.len() != w * w {
            return Err(Error::DimensionMismatch {
                expected: w * w,
                got: rows.len(),
            });
        }
        let mut perm = Vec::with_capacity(w);
        let mut negate = Vec::with_capacity(w);
        let mut used = vec![false; w];
        for row in rows.chunks(w) {
            let mut hit = None;
            for (col, &v) in row.iter().enumerate() {
                if v == T::zero() {
                    continue;
                }
                if hit.is_some() || (v != T::one() && v != -T::one()) {
                    return Err(Error::InvalidOrthogonal);
                }
                hit = Some((col, v < T::zero()));
            }
            let (col, neg) = hit.ok_or(Error::InvalidOrthogonal)?;
            if std::mem::replace(&mut used[col], true) {
                return Err(Error::InvalidOrthogonal);
            }
            perm.push(col);
            negate.push(neg);
        }
        Ok(Self { perm, negate })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| j == p)
    }

    pub fn source_axis(&self, j: usize) -> usize {
        self.perm[j]
    }

    pub fn negates(&self, j: usize) -> bool {
        self.negate[j]
    }

    fn to_matrix<T: Scalar>(&self) -> Vec<T> {
        let w = self.dim();
        let mut m = vec![T::zero(); w * w];
        for j in 0..w {
            m[j * w + self.perm[j]] = if self.negate[j] { -T::one() } else { T::one() };
        }
        m
    }

    fn to_diagonal<T: Scalar>(&self) -> Vec<T> {
        self.negate
            .iter()
            .map(|&n| if n { -T::one() } else { T::one() })
            .collect()
    }
}

/// `S(x) = c O x + t` with `c` in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SimilitudeRepr<T>", into = "SimilitudeRepr<T>")]
#[serde(bound = "T: Scalar")]
pub struct Similitude<T> {
    ratio: T,
    orth: SignedPermutation,
    translation: Vec<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
struct SimilitudeRepr<T> {
    ratio: T,
    orth: Vec<T>,
    t: Vec<T>,
}

impl<T: Scalar> TryFrom<SimilitudeRepr<T>> for Similitude<T> {
    type Error = Error;

    fn try_from(r: SimilitudeRepr<T>) -> Result<Self> {
        let w = r.t.len();
        let orth = if r.orth.len() == w {
            SignedPermutation::diagonal(&r.orth)?
        } else {
            SignedPermutation::from_matrix(&r.orth, w)?
        };
        Similitude::new(r.ratio, orth, r.t)
    }
}

impl<T: Scalar> From<Similitude<T>> for SimilitudeRepr<T> {
    fn from(s: Similitude<T>) -> Self {
        let orth = if s.orth.is_diagonal() {
            s.orth.to_diagonal()
        } else {
            s.orth.to_matrix()
        };
        SimilitudeRepr {
            ratio: s.ratio,
            orth,
            t: s.translation,
        }
    }
}

impl<T: Scalar> Similitude<T> {
    pub fn new(ratio: T, orth: SignedPermutation, translation: Vec<T>) -> Result<Self> {
        if !(ratio > T::zero() && ratio < T::one()) {
            return Err(Error::InvalidRatio(ratio.as_f64()));
        }
        if orth.dim() != translation.len() {
            return Err(Error::DimensionMismatch {
                expected: translation.len(),
                got: orth.dim(),
            });
        }
        Ok(Self {
            ratio,
            orth,
            translation,
        })
    }

    /// One-dimensional `x -> sign * c x + t`.
    pub fn line(ratio: T, flip: bool, t: T) -> Result<Self> {
        let sign = if flip { -T::one() } else { T::one() };
        Self::new(ratio, SignedPermutation::diagonal(&[sign])?, vec![t])
    }

    /// `x -> c x + t` in any dimension.
    pub fn homothety(ratio: T, translation: Vec<T>) -> Result<Self> {
        let w = translation.len();
        Self::new(ratio, SignedPermutation::identity(w), translation)
    }

    pub fn ratio(&self) -> T {
        self.ratio
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn orthogonal_part(&self) -> &SignedPermutation {
        &self.orth
    }

    pub fn translation(&self) -> &[T] {
        &self.translation
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim()];
        self.apply_into(x, &mut out);
        out
    }

    pub(crate) fn apply_into(&self, x: &[T], out: &mut [T]) {
        for (j, o) in out.iter_mut().enumerate() {
            let v = x[self.orth.perm[j]];
            let v = if self.orth.negate[j] { -v } else { v };
            *o = self.ratio * v + self.translation[j];
        }
    }

    /// Image of the axis-aligned box `[lo, hi]`.
    pub(crate) fn image_box(&self, lo: &[T], hi: &[T]) -> (Vec<T>, Vec<T>) {
        let a = self.apply(lo);
        let b = self.apply(hi);
        let l = a.iter().zip(&b).map(|(&x, &y)| x.min(y)).collect();
        let h = a.iter().zip(&b).map(|(&x, &y)| x.max(y)).collect();
        (l, h)
    }
}
