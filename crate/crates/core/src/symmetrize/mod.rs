//! Column representation of sets and clusters, Steiner symmetrization and
//! projection of the `(2,3)` interface.

mod cluster;
mod columns;

pub use cluster::{
    cluster_energy, interface_measure, lens_columns, projection_measure, projection_zero_set,
    symmetric_energy_identity, symmetrize_cluster, ColumnCluster, EnergyIdentity,
};
pub use columns::{
    column_perimeter, slice_length, steiner_symmetral, symmetric_difference_length, ColumnSet, SliceFunction,
};
