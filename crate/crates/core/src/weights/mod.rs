//! Partitions, dominant weights and the maps between them.

mod dominant;
mod partition;
mod root_system;

pub use dominant::{assoc_partition, bc_rank, lift_symmetric, DominantWeight};
pub use partition::{dual_tilde, total_size, Partition};
pub use root_system::{LieType, PositiveRoot, RootSystem, SignedPermutation, Weight};
