//! Exact lens clusters, double bubbles, liquid drops and radial minimal graphs.

mod arc;
mod bubble;
mod cap;
mod cluster;
mod drop;
mod lens;
mod radial;

pub use arc::ChordArc;
pub use bubble::{build_double_bubble, BubbleArc, DoubleBubble2D};
pub use cap::{cap_area, cap_area_closed_form, cap_volume, cap_volume_closed_form, SphericalCapSpec};
pub use cluster::{density_at_infinity, energy_in_region, AnalyticCluster, DensityEstimate, DropCluster, FlatPair};
pub use drop::{free_energy, liquid_drop_min, CapDrop, HalfspaceSet};
pub use lens::{build_lens, lens_boundary_energy, LensCluster};
pub use radial::{radial_exterior_graph, AsymptoticFit, RadialGraphSolution};

