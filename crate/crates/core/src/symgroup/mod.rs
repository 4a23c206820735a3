//! Permutations and partitions of the symmetric group S_n.

mod partition;
mod permutation;

pub use partition::{partitions_of, Partition};
pub use permutation::{enumerate_sn, factorial, Permutation, MAX_DEGREE};
