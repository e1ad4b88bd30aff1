//! Numerical instruments: Li-Yorke verification of coded orbit pairs and
//! box-counting dimension estimates.

mod boxcount;
mod liyorke;

pub use boxcount::{
    box_count, dimension_fit, dyadic_ladder, geometric_ladder, ladder_between, usable_range,
    BoxCountEstimate,
};
pub use liyorke::{
    liyorke_profile, orbit_profile, random_pair, verify_liyorke, Checkpoint, CheckpointKind,
    LiYorkeProfile, LiYorkeVerdict, Thresholds, Witness,
};
