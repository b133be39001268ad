//! r-partitions, compositions, dominance orders and contingency tables.

mod contingency;
mod order;
mod partition;
mod rpartition;

pub use contingency::{enumerate_contingency, ContingencyMatrix};
pub use order::{default_total_order, dominance_leq, sample_linear_extensions, OrderedIndex};
pub use partition::{conjugate, factorial, is_partition, multiplicities, n_of, partitions, size, z_value, Partition};
pub use rpartition::{compositions, enumerate_rpartitions, n_star, rpartitions_of_weight, Composition, RPartition};
