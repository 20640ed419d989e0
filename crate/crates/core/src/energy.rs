//! Per-interface measures and weighted totals.

use crate::geom::Region;
use crate::weights::WeightSystem;

/// Interface pairs in storage order.
pub const PAIRS: [(u8, u8); 3] = [(1, 2), (1, 3), (2, 3)];

/// Index of an unordered chamber pair in [`PAIRS`].
pub fn pair_index(j: u8, k: u8) -> Option<usize> {
    match (j.min(k), j.max(k)) {
        (1, 2) => Some(0),
        (1, 3) => Some(1),
        (2, 3) => Some(2),
        _ => None,
    }
}

/// Interface measures inside a region and their weighted sum.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnergyReport {
    /// `H^{n-1}` of the `(1,2)`, `(1,3)` and `(2,3)` interfaces, in that order.
    pub per_pair: [f64; 3],
    pub total: f64,
    pub region: Region,
}

impl EnergyReport {
    pub fn new(per_pair: [f64; 3], w: &WeightSystem, region: Region) -> Self {
        let total = w.c12() * per_pair[0] + w.c13() * per_pair[1] + w.c23() * per_pair[2];
        EnergyReport { per_pair, total, region }
    }

    pub fn measure(&self, j: u8, k: u8) -> f64 {
        self.per_pair[pair_index(j, k).expect("valid chamber pair")]
    }
}
