//! Graphs, permutations, set partitions and acyclic orientations, together
//! with the statistics that label regions: right-to-left minima,
//! left-to-right maxima, source components and linear extensions.
//!
//! Vertices are 1-based throughout.

mod graph;
mod orientation;
mod partition;
mod permutation;

pub use graph::{all_pairs, Graph, GraphError};
pub use orientation::{
    enumerate_acyclic_orientations, lex_min_extension, linear_extensions, orientation_of_permutation,
    reachable_set, source_components, AcyclicOrientation, OrientationError,
};
pub use partition::{block_index, set_partitions, OrderedSetPartition, PartitionError};
pub(crate) use partition::{normalize_blocks, write_blocks};
pub use permutation::{lr_max, partition_at_rl_minima, rl_min, NotAPermutation, Permutation, RlMinima};
