//! Rotational tangle diagrams.

mod crossing;
mod error;
mod moves;
mod random;
mod tangle;

pub use crossing::{to_crossing_list, to_rotational, LAYOUT_BUDGET, CrossingListDiagram, CrossingRecord, Edge};
pub use error::TangleError;
pub use moves::{apply_move, enumerate_moves, MoveSpec};
pub use random::{random_braid, random_tangle, MAX_RETRIES};
pub use tangle::{
    check_rotation_lemma, permutation_of, rotation_number, writhe, Component, Event, Gen,
    RotationLemmaReport, Slice, Tangle, Trace,
};
