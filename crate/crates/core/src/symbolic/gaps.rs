use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rule generating the free-digit counts `N_1, N_2, ..` between matching blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum GapSequence {
    /// `N_n = 0` for all `n`.
    Zero,
    Constant {
        c: u64,
    },
    /// `N_n = n`.
    Linear,
    /// `N_n = n^2`.
    Quadratic,
    /// `N_n = a n^2 + b`.
    Affine {
        a: u64,
        b: u64,
    },
    /// Explicit finite list `N_1, .., N_len`.
    List {
        values: Vec<u64>,
    },
}

impl GapSequence {
    /// `N_n` for 1-based `n`.
    pub fn get(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::InvalidArgument("gap index starts at 1".into()));
        }
        let n64 = n as u64;
        Ok(match self {
            GapSequence::Zero => 0,
            GapSequence::Constant { c } => *c,
            GapSequence::Linear => n64,
            GapSequence::Quadratic => n64 * n64,
            GapSequence::Affine { a, b } => a * n64 * n64 + b,
            GapSequence::List { values } => *values.get(n - 1).ok_or(Error::GapExhausted {
                n,
                len: values.len(),
            })?,
        })
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapSequence::Zero => write!(f, "zero"),
            GapSequence::Constant { c } => write!(f, "constant:{c}"),
            GapSequence::Linear => write!(f, "linear"),
            GapSequence::Quadratic => write!(f, "quadratic"),
            GapSequence::Affine { a, b } => write!(f, "affine:{a},{b}"),
            GapSequence::List { values } => {
                let v: Vec<String> = values.iter().map(u64::to_string).collect();
                write!(f, "list:{}", v.join(","))
            }
        }
    }
}

/// Parses `zero`, `constant:c`, `linear`, `quadratic`, `affine:a,b` or an inline
/// `list:v1,v2,..`.
impl FromStr for GapSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unrecognised gap rule '{s}'"));
        let num = |x: &str| x.trim().parse::<u64>().map_err(|_| bad());
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        match (head.trim(), tail) {
            ("zero", None) => Ok(GapSequence::Zero),
            ("linear", None) => Ok(GapSequence::Linear),
            ("quadratic", None) => Ok(GapSequence::Quadratic),
            ("constant", Some(c)) => Ok(GapSequence::Constant { c: num(c)? }),
            ("affine", Some(ab)) => {
                let (a, b) = ab.split_once(',').ok_or_else(bad)?;
                Ok(GapSequence::Affine {
                    a: num(a)?,
                    b: num(b)?,
                })
            }
            ("list", Some(v)) => {
                let values = v
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(num)
                    .collect::<Result<Vec<_>>>()?;
                Ok(GapSequence::List { values })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GapVerdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Limit of `M^2 / sum_{n<=M} N_n` as `M -> infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum GapLimit {
    Zero,
    Finite(f64),
    Infinite,
    /// Every `N_n` vanishes, so the ratio is never defined.
    Undefined,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    /// `ratios[M-1] = M^2 / sum_{n<=M} N_n`, `None` where the sum is zero.
    pub ratios: Vec<Option<f64>>,
    pub limit: GapLimit,
    pub verdict: GapVerdict,
}

/// Evaluates the dimension-preserving growth condition `M^2 / sum N_n -> 0`.
///
/// Closed-form rules get an analytic verdict. Explicit lists only report the
/// empirical ratios, unless they vanish identically.
pub fn check_gap_condition(gaps: &GapSequence, m_max: usize) -> Result<GapReport> {
    if m_max < 10 {
        return Err(Error::InvalidArgument(format!(
            "gap check needs M_max >= 10, got {m_max}"
        )));
    }
    let available = match gaps {
        GapSequence::List { values } => values.len().min(m_max),
        _ => m_max,
    };
    let mut ratios = Vec::with_capacity(available);
    let mut sum: u128 = 0;
    for big_m in 1..=available {
        sum += u128::from(gaps.get(big_m)?);
        let sq = (big_m * big_m) as f64;
        ratios.push((sum > 0).then(|| sq / sum as f64));
    }

    use GapLimit::*;
    use GapVerdict::*;
    let (limit, verdict) = match gaps {
        GapSequence::Quadratic => (Zero, Pass),
        GapSequence::Affine { a, .. } if *a > 0 => (Zero, Pass),
        GapSequence::Affine { b, .. } if *b > 0 => (Infinite, Fail),
        GapSequence::Affine { .. } | GapSequence::Zero => (Undefined, Fail),
        GapSequence::Constant { c } if *c > 0 => (Infinite, Fail),
        GapSequence::Constant { .. } => (Undefined, Fail),
        GapSequence::Linear => (Finite(2.0), Fail),
        GapSequence::List { .. } => {
            if sum == 0 {
                (Undefined, Fail)
            } else {
                (Unknown, Inconclusive)
            }
        }
    };
    Ok(GapReport {
        ratios,
        limit,
        verdict,
    })
}
