//! Partitions, tableaux, Gelfand-Tsetlin patterns and horizontal strips.
//!
//! Orderings fixed here determine every basis layout downstream: partitions
//! are listed in descending lexicographic order, standard tableaux in
//! last-letter order and semistandard tableaux by reading word.

mod gt;
mod partition;
mod strip;
mod tableau;

pub use gt::{enumerate_gt, gt_to_ssyt, ssyt_to_gt, GtPattern};
pub use partition::{
    dominates, enumerate_compositions, enumerate_partitions, factorial, hook_dimension, Composition, Partition,
};
pub use strip::{horizontal_strip_positions, interval_strip, is_horizontal_strip, strip_removals, SkewStrip};
pub use tableau::{
    enumerate_ssyt, enumerate_ssyt_bounded, enumerate_syt, index_map, kostka, unitary_dimension,
    SemistandardTableau, StandardTableau,
};
