//! Block layout of the Li-Yorke partner set and the filler bijection.
//!
//! Block `i` (from 0) starts at `u_i`, copies the base on the `i + 1` positions
//! `u_i ..= u_i + i`, bumps the base digit by one (mod `m`) at `u_i + i + 1`, and
//! then leaves `N_{i+1}` free positions. Consecutive blocks tile the index line:
//!
//! ```text
//! u_0 = 1,    u_{i+1} = u_i + (i + 1) + 1 + N_{i+1}
//! ```
//!
//! The frequently quoted form `u_{i+1} = u_i + N_i + i + 1` drops the mismatch
//! position and leaves the gaps indexed from `N_0`; it does not tile once both
//! the mismatch digit and the free digits are counted.

use serde::{Deserialize, Serialize};

use super::{GapSequence, SymbolSequence};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub index: usize,
    /// `u_i`, 1-based.
    pub start: usize,
    /// `i + 1` positions copied from the base.
    pub match_len: usize,
    /// `u_i + i + 1`.
    pub mismatch_pos: usize,
    /// `N_{i+1}`.
    pub free_count: usize,
}

impl Block {
    /// Last position belonging to this block.
    pub fn end(&self) -> usize {
        self.mismatch_pos + self.free_count
    }

    /// Shift bringing the matching block to positions `1 ..= i + 1`.
    pub fn alignment_shift(&self) -> usize {
        self.start - 1
    }

    /// Shift bringing the mismatch digit to position 1.
    pub fn mismatch_shift(&self) -> usize {
        self.mismatch_pos - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSchedule {
    pub blocks: Vec<Block>,
    /// Last index covered by the returned blocks.
    pub span: usize,
}

fn gap_count(gaps: &GapSequence, n: usize) -> Result<usize> {
    usize::try_from(gaps.get(n)?)
        .map_err(|_| Error::InvalidArgument(format!("gap N_{n} does not fit in memory")))
}

fn next_block(gaps: &GapSequence, index: usize, start: usize) -> Result<Block> {
    Ok(Block {
        index,
        start,
        match_len: index + 1,
        mismatch_pos: start + index + 1,
        free_count: gap_count(gaps, index + 1)?,
    })
}

/// The first `block_count` blocks.
pub fn block_schedule(gaps: &GapSequence, block_count: usize) -> Result<PairSchedule> {
    if block_count == 0 {
        return Err(Error::InvalidArgument("block_count must be >= 1".into()));
    }
    let mut blocks = Vec::with_capacity(block_count);
    let mut start = 1;
    for i in 0..block_count {
        let b = next_block(gaps, i, start)?;
        start = b.end() + 1;
        blocks.push(b);
    }
    Ok(PairSchedule {
        span: start - 1,
        blocks,
    })
}

/// Blocks intersecting positions `1 ..= len`.
pub fn schedule_covering(gaps: &GapSequence, len: usize) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut start = 1;
    let mut i = 0;
    while start <= len {
        let b = next_block(gaps, i, start)?;
        start = b.end() + 1;
        blocks.push(b);
        i += 1;
    }
    Ok(blocks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Match,
    Mismatch,
    /// Zero-based index into the filler.
    Free(usize),
}

/// Role of each position `1 ..= len` (entry `k - 1` describes position `k`).
pub fn layout(gaps: &GapSequence, len: usize) -> Result<Vec<Slot>> {
    let mut slots = Vec::with_capacity(len);
    let mut free = 0;
    'outer: for b in schedule_covering(gaps, len)? {
        for pos in b.start..=b.end() {
            if pos > len {
                break 'outer;
            }
            let slot = if pos < b.mismatch_pos {
                Slot::Match
            } else if pos == b.mismatch_pos {
                Slot::Mismatch
            } else {
                free += 1;
                Slot::Free(free - 1)
            };
            slots.push(slot);
        }
    }
    Ok(slots)
}

/// `s + 1 mod m` with representatives in `{1, .., m}`.
pub(crate) fn bump(digit: u8, m: u32) -> u8 {
    (u32::from(digit) % m + 1) as u8
}

/// Fills a prepared layout. Used by the samplers to avoid rebuilding the layout.
pub(crate) fn fill_layout(slots: &[Slot], base: &[u8], filler: &[u8], m: u32) -> Result<Vec<u8>> {
    slots
        .iter()
        .enumerate()
        .map(|(i, slot)| match *slot {
            Slot::Match | Slot::Mismatch => {
                let d = *base.get(i).ok_or(Error::InsufficientPrefix {
                    needed: i + 1,
                    available: base.len(),
                })?;
                Ok(if *slot == Slot::Match { d } else { bump(d, m) })
            }
            Slot::Free(j) => filler.get(j).copied().ok_or(Error::InsufficientPrefix {
                needed: j + 1,
                available: filler.len(),
            }),
        })
        .collect()
}

/// The filler bijection onto the partner set of `base`: builds the first `len`
/// digits of the partner whose free positions read `filler` in order.
///
/// For two-sided sequences only the future is constrained; the partner takes
/// its past from `filler`.
pub fn construct_partner(
    base: &SymbolSequence,
    gaps: &GapSequence,
    filler: &SymbolSequence,
    len: usize,
) -> Result<SymbolSequence> {
    if base.alphabet_size() != filler.alphabet_size() || base.side() != filler.side() {
        return Err(Error::Incompatible);
    }
    let slots = layout(gaps, len)?;
    let digits = fill_layout(&slots, base.digits(), filler.digits(), base.alphabet_size())?;
    Ok(base.with_parts(filler.past().to_vec(), digits))
}

/// Inverse of [`construct_partner`] over the stored prefix of `partner`.
///
/// Doubles as the membership test: any match or mismatch position that breaks
/// the pattern yields [`Error::NotInSubset`].
pub fn extract_filler(
    partner: &SymbolSequence,
    base: &SymbolSequence,
    gaps: &GapSequence,
) -> Result<SymbolSequence> {
    if base.alphabet_size() != partner.alphabet_size() || base.side() != partner.side() {
        return Err(Error::Incompatible);
    }
    let m = base.alphabet_size();
    let slots = layout(gaps, partner.len())?;
    let mut filler = Vec::new();
    for (i, (slot, &t)) in slots.iter().zip(partner.digits()).enumerate() {
        let pos = i + 1;
        match slot {
            Slot::Free(_) => filler.push(t),
            Slot::Match | Slot::Mismatch => {
                let s = base.get(pos).ok_or(Error::InsufficientPrefix {
                    needed: pos,
                    available: base.len(),
                })?;
                let expected = if *slot == Slot::Match { s } else { bump(s, m) };
                if t != expected {
                    return Err(Error::NotInSubset { position: pos });
                }
            }
        }
    }
    Ok(base.with_parts(partner.past().to_vec(), filler))
}
