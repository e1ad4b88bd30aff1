//! Full shifts over `{1, .., m}` and the symbolic construction of Li-Yorke pairs.

mod gaps;
mod pairs;
mod sequence;

pub use gaps::{check_gap_condition, GapLimit, GapReport, GapSequence, GapVerdict};
pub(crate) use pairs::fill_layout;
pub use pairs::{
    block_schedule, construct_partner, extract_filler, layout, schedule_covering, Block,
    PairSchedule, Slot,
};
pub use sequence::{sequence_dist, Interval, Side, SymbolSequence};
