use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "one")]
    One,
    #[serde(rename = "two")]
    Two,
}

/// Finite prefix of a one- or two-sided sequence over the alphabet `{1, .., m}`.
///
/// Future digits are `s_1, s_2, ..`. For two-sided sequences the past is stored
/// nearest-first, so `past[0]` is `s_0`, `past[1]` is `s_{-1}` and so on. Shifting
/// moves digits from the front of the future onto the front of the past.
///
/// Digits beyond the stored prefix are unknown; operations that would need them
/// fail with [`Error::InsufficientPrefix`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SequenceRepr", into = "SequenceRepr")]
pub struct SymbolSequence {
    m: u32,
    side: Side,
    past: Vec<u8>,
    future: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct SequenceRepr {
    m: u32,
    side: Side,
    digits: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    past: Option<Vec<u8>>,
}

impl TryFrom<SequenceRepr> for SymbolSequence {
    type Error = Error;

    fn try_from(r: SequenceRepr) -> Result<Self> {
        match r.side {
            Side::One => {
                if r.past.as_ref().is_some_and(|p| !p.is_empty()) {
                    return Err(Error::InvalidArgument(
                        "one-sided sequence cannot carry past digits".into(),
                    ));
                }
                SymbolSequence::one_sided(r.m, r.digits)
            }
            Side::Two => SymbolSequence::two_sided(r.m, r.past.unwrap_or_default(), r.digits),
        }
    }
}

impl From<SymbolSequence> for SequenceRepr {
    fn from(s: SymbolSequence) -> Self {
        let past = match s.side {
            Side::One => None,
            Side::Two => Some(s.past),
        };
        SequenceRepr {
            m: s.m,
            side: s.side,
            digits: s.future,
            past,
        }
    }
}

fn check_digits(m: u32, digits: &[u8]) -> Result<()> {
    match digits.iter().find(|&&d| d == 0 || u32::from(d) > m) {
        Some(&d) => Err(Error::InvalidDigit {
            digit: u32::from(d),
            m,
        }),
        None => Ok(()),
    }
}

fn check_alphabet(m: u32) -> Result<()> {
    if (2..=255).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(m))
    }
}

impl SymbolSequence {
    pub fn one_sided(m: u32, digits: Vec<u8>) -> Result<Self> {
        check_alphabet(m)?;
        check_digits(m, &digits)?;
        Ok(Self {
            m,
            side: Side::One,
            past: Vec::new(),
            future: digits,
        })
    }

    /// `past` is nearest-first: `past[0] = s_0`.
    pub fn two_sided(m: u32, past: Vec<u8>, future: Vec<u8>) -> Result<Self> {
        check_alphabet(m)?;
        check_digits(m, &past)?;
        check_digits(m, &future)?;
        Ok(Self {
            m,
            side: Side::Two,
            past,
            future,
        })
    }

    /// Uniformly random prefix with `len` future digits and, for two-sided
    /// sequences, `past_len` past digits.
    pub fn random<R: rand::Rng + ?Sized>(
        m: u32,
        side: Side,
        past_len: usize,
        len: usize,
        rng: &mut R,
    ) -> Result<Self> {
        check_alphabet(m)?;
        let mut draw =
            |n: usize| -> Vec<u8> { (0..n).map(|_| rng.gen_range(1..=m) as u8).collect() };
        let future = draw(len);
        let past = match side {
            Side::One => Vec::new(),
            Side::Two => draw(past_len),
        };
        Ok(Self {
            m,
            side,
            past,
            future,
        })
    }

    pub fn alphabet_size(&self) -> u32 {
        self.m
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Stored future digits `s_1, s_2, ..`.
    pub fn digits(&self) -> &[u8] {
        &self.future
    }

    /// Stored past digits, nearest first. Always empty for one-sided sequences.
    pub fn past(&self) -> &[u8] {
        &self.past
    }

    /// Number of stored future digits.
    pub fn len(&self) -> usize {
        self.future.len()
    }

    pub fn is_empty(&self) -> bool {
        self.future.is_empty()
    }

    /// Digit `s_k` for 1-based `k`.
    pub fn get(&self, k: usize) -> Option<u8> {
        k.checked_sub(1).and_then(|i| self.future.get(i).copied())
    }

    pub(crate) fn require(&self, needed: usize) -> Result<()> {
        if self.future.len() < needed {
            Err(Error::InsufficientPrefix {
                needed,
                available: self.future.len(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_past(&self, needed: usize) -> Result<()> {
        if self.past.len() < needed {
            Err(Error::InsufficientPrefix {
                needed,
                available: self.past.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The shift map applied `n` times.
    pub fn shift(&self, n: usize) -> Result<Self> {
        self.require(n)?;
        let future = self.future[n..].to_vec();
        let past = match self.side {
            Side::One => Vec::new(),
            Side::Two => self.future[..n]
                .iter()
                .rev()
                .chain(self.past.iter())
                .copied()
                .collect(),
        };
        Ok(Self {
            m: self.m,
            side: self.side,
            past,
            future,
        })
    }

    /// Keeps at most `len` future digits.
    pub fn truncated(&self, len: usize) -> Self {
        let mut out = self.clone();
        out.future.truncate(len);
        out
    }

    pub(crate) fn with_parts(&self, past: Vec<u8>, future: Vec<u8>) -> Self {
        Self {
            m: self.m,
            side: self.side,
            past: if self.side == Side::Two {
                past
            } else {
                Vec::new()
            },
            future,
        }
    }
}

/// Closed interval `[lo, hi]` enclosing a real quantity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Certified enclosure of `dist(s, t) = sum_k m^{-|k|} |s_k - t_k|`.
///
/// `lo` is the partial sum over the stored indices, accumulated in increasing
/// order of `|k|` so it is monotone in the individual terms. `hi` adds the
/// analytic bound `(m-1) sum_{|k|>K} m^{-|k|}` on the unstored tail plus a
/// rounding allowance. Fails if the tail alone exceeds `tail_bound`.
pub fn sequence_dist<T: Scalar>(
    s: &SymbolSequence,
    t: &SymbolSequence,
    tail_bound: T,
) -> Result<Interval<T>> {
    if s.m != t.m || s.side != t.side {
        return Err(Error::Incompatible);
    }
    let m = T::from_u32(s.m).expect("alphabet fits scalar");
    let inv_m = T::one() / m;

    let k_future = s.future.len().min(t.future.len());
    // (m-1) * sum_{k>K} m^{-k} = m^{-K}
    let mut tail = inv_m.powi(k_future as i32);
    let mut lo = T::zero();
    let mut terms = k_future;

    if s.side == Side::Two {
        let k_past = s.past.len().min(t.past.len());
        // past index j carries weight m^{-j}; (m-1) * sum_{j>=K} m^{-j} = m^{1-K}
        tail = tail + m * inv_m.powi(k_past as i32);
        let mut w = T::one();
        for (a, b) in s.past[..k_past].iter().zip(&t.past[..k_past]) {
            lo = lo + w * T::from_u8(a.abs_diff(*b)).unwrap();
            w = w * inv_m;
        }
        terms += k_past;
    }

    let mut w = inv_m;
    for (a, b) in s.future[..k_future].iter().zip(&t.future[..k_future]) {
        lo = lo + w * T::from_u8(a.abs_diff(*b)).unwrap();
        w = w * inv_m;
    }

    if tail > tail_bound {
        let needed = needed_prefix(s.m, tail_bound.as_f64());
        return Err(Error::InsufficientPrefix {
            needed,
            available: k_future,
        });
    }
    let rounding = T::from_usize(terms + 1).unwrap() * T::epsilon() * lo;
    Ok(Interval {
        lo,
        hi: lo + tail + rounding,
    })
}

fn needed_prefix(m: u32, tail_bound: f64) -> usize {
    if tail_bound <= 0.0 {
        return usize::MAX;
    }
    ((1.0 / tail_bound).ln() / f64::from(m).ln())
        .ceil()
        .max(0.0) as usize
}
