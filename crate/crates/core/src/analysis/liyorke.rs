//! Finite surrogates for `liminf d(f^n x, f^n y) = 0` and `limsup > 0`.
//!
//! Orbits are always evaluated through the coding (`π(σ^n s)`), never by
//! iterating the map in floating point.
//!
//! Checkpoint times for block `i` of the schedule:
//!
//! * one-sided: proximity at `u_i - 1` (matching block at the front),
//!   separation at `u_i + i` (mismatch digit at position 1).
//! * two-sided: proximity at `u_i - 1 + ceil((i+1)/2)`, which splits the
//!   matching block between past and future so both coordinates are close;
//!   separation at `u_i + i + 1`, which moves the mismatch digit to `s_0` where
//!   the strongly separated contracting factor sees it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::chunk_rng;
use crate::scalar::{distance, Scalar};
use crate::symbolic::{
    block_schedule, construct_partner, extract_filler, GapSequence, Side, SymbolSequence,
};
use crate::systems::{code_orbit_point, separation_gap, SystemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Checkpoint<T> {
    pub block: usize,
    pub time: usize,
    pub bound: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct LiYorkeProfile<T> {
    /// Certified upper bounds on the orbit distance.
    pub proximity: Vec<Checkpoint<T>>,
    /// Certified lower bounds on the orbit distance (may be negative, meaning
    /// nothing is certified).
    pub separation: Vec<Checkpoint<T>>,
    /// Diameter of the ambient domain; reference scale for proximity decay.
    pub scale: T,
}

/// Proximity and separation checkpoints for a pair of sequences, without
/// checking that `partner` belongs to the partner set of `base`.
pub fn orbit_profile<T: Scalar>(
    spec: &SystemSpec<T>,
    base: &SymbolSequence,
    partner: &SymbolSequence,
    gaps: &GapSequence,
    block_count: usize,
    depth: usize,
) -> Result<LiYorkeProfile<T>> {
    let schedule = block_schedule(gaps, block_count)?;
    let two_sided = spec.side() == Side::Two;
    let bounds_at = |time: usize| -> Result<(T, T)> {
        let p = code_orbit_point(spec, base, time, depth)?;
        let q = code_orbit_point(spec, partner, time, depth)?;
        let d = distance(&p.center, &q.center);
        let r = p.radius + q.radius;
        Ok((d + r, d - r))
    };
    let mut proximity = Vec::with_capacity(block_count);
    let mut separation = Vec::with_capacity(block_count);
    for b in &schedule.blocks {
        let (near, far) = if two_sided {
            (
                b.alignment_shift() + b.match_len.div_ceil(2),
                b.mismatch_pos,
            )
        } else {
            (b.alignment_shift(), b.mismatch_shift())
        };
        proximity.push(Checkpoint {
            block: b.index,
            time: near,
            bound: bounds_at(near)?.0,
        });
        separation.push(Checkpoint {
            block: b.index,
            time: far,
            bound: bounds_at(far)?.1,
        });
    }
    Ok(LiYorkeProfile {
        proximity,
        separation,
        scale: spec.domain().diameter(),
    })
}

/// [`orbit_profile`] for a partner verified to lie in the partner set of `base`.
pub fn liyorke_profile<T: Scalar>(
    spec: &SystemSpec<T>,
    base: &SymbolSequence,
    gaps: &GapSequence,
    partner: &SymbolSequence,
    block_count: usize,
    depth: usize,
) -> Result<LiYorkeProfile<T>> {
    extract_filler(partner, base, gaps)?;
    orbit_profile(spec, base, partner, gaps, block_count, depth)
}

/// Random base and filler drawn from `seed`, and the partner they determine.
/// Both sequences are long enough for [`orbit_profile`] over `block_count`
/// blocks at coding depth `depth`.
pub fn random_pair<T: Scalar>(
    spec: &SystemSpec<T>,
    gaps: &GapSequence,
    block_count: usize,
    depth: usize,
    seed: u64,
) -> Result<(SymbolSequence, SymbolSequence)> {
    let m = spec.derive_ifs().contracting.len() as u32;
    let len = block_schedule(gaps, block_count)?.span + 2 * depth;
    let mut rng = chunk_rng(seed, 0);
    let base = SymbolSequence::random(m, spec.side(), depth, len, &mut rng)?;
    let filler = SymbolSequence::random(m, spec.side(), depth, len, &mut rng)?;
    let partner = construct_partner(&base, gaps, &filler, len)?;
    Ok((base, partner))
}

/// Default verification thresholds derived from the system.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Thresholds<T> {
    /// Per-block geometric decay of the proximity envelope.
    pub proximity_decay: T,
    pub separation_floor: T,
}

impl<T: Scalar> Thresholds<T> {
    /// Largest contraction ratio (one-sided) or its square root (two-sided,
    /// where a matching block is shared between past and future); the floor is
    /// half the separation gap of the certifying factor.
    pub fn for_system(spec: &SystemSpec<T>) -> Result<Self> {
        let ifs = spec.derive_ifs();
        let mut c_max = ifs.contracting.max_ratio();
        if let Some(e) = &ifs.expanding_inverse {
            c_max = c_max.max(e.max_ratio());
        }
        let proximity_decay = match spec.side() {
            Side::One => c_max,
            Side::Two => c_max.sqrt(),
        };
        Ok(Self {
            proximity_decay,
            separation_floor: separation_gap(spec)? * T::lit(0.5),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckpointKind {
    Proximity,
    Separation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Witness<T> {
    pub kind: CheckpointKind,
    pub checkpoint: Checkpoint<T>,
    /// The threshold the checkpoint failed to meet.
    pub threshold: T,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct LiYorkeVerdict<T> {
    pub pass: bool,
    pub witness: Option<Witness<T>>,
}

/// Passes when the proximity bounds in the second half of the profile stay
/// under `scale * decay^i` and every separation bound is at least `floor`.
pub fn verify_liyorke<T: Scalar>(
    profile: &LiYorkeProfile<T>,
    proximity_decay: T,
    separation_floor: T,
) -> Result<LiYorkeVerdict<T>> {
    let n = profile.proximity.len().min(profile.separation.len());
    if n < 3 {
        return Err(Error::TooFewCheckpoints(n));
    }
    if !(separation_floor > T::zero()) {
        return Err(Error::InvalidArgument(
            "separation floor must be positive".into(),
        ));
    }
    if !(proximity_decay > T::zero() && proximity_decay < T::one()) {
        return Err(Error::InvalidArgument(
            "proximity decay must lie in (0, 1)".into(),
        ));
    }
    let tail = &profile.proximity[profile.proximity.len() / 2..];
    for cp in tail {
        let envelope = profile.scale * proximity_decay.powi(cp.block as i32);
        if cp.bound > envelope {
            return Ok(LiYorkeVerdict {
                pass: false,
                witness: Some(Witness {
                    kind: CheckpointKind::Proximity,
                    checkpoint: *cp,
                    threshold: envelope,
                }),
            });
        }
    }
    if let Some(cp) = profile
        .separation
        .iter()
        .find(|cp| !(cp.bound >= separation_floor))
    {
        return Ok(LiYorkeVerdict {
            pass: false,
            witness: Some(Witness {
                kind: CheckpointKind::Separation,
                checkpoint: *cp,
                threshold: separation_floor,
            }),
        });
    }
    Ok(LiYorkeVerdict {
        pass: true,
        witness: None,
    })
}
