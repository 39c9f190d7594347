//! Partition-index enumeration and the Bell / Stirling polynomial families.

mod bell;
mod partitions;
mod stirling;

pub use bell::{bell_eval, bell_partial, BellTable};
pub use partitions::{compositions, partition_sequences, Composition, RVector};
pub use stirling::{stirling_a, stirling_a_n1, stirling_numbers, StirlingKind};
