//! Truncated polygonal (1,2)-clusters in the plane.

use alloc::vec::Vec;

use crate::energy::{pair_index, EnergyReport};
use crate::error::{Error, Result};
use crate::geom::{Region, Vec2};
use crate::weights::WeightSystem;

mod discretize;
mod hausdorff;
mod region;
mod validate;

pub use discretize::{discretize_analytic, discretize_bubble, discretize_lens, AnalyticShape};
pub use hausdorff::{hausdorff_distance, sample_boundary};
pub use region::{ChamberRegion, Piece};
pub use validate::{validate_cluster, Diagnostic};

/// A straight interface segment between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub v: [usize; 2],
    /// Chamber pair with the smaller id first.
    pub label: (u8, u8),
}

impl Edge {
    pub fn new(a: usize, b: usize, j: u8, k: u8) -> Self {
        Edge { v: [a, b], label: (j.min(k), j.max(k)) }
    }

    pub fn touches(&self, chamber: u8) -> bool {
        self.label.0 == chamber || self.label.1 == chamber
    }

    /// The chamber across this edge from `chamber`.
    pub fn other(&self, chamber: u8) -> u8 {
        if self.label.0 == chamber {
            self.label.1
        } else {
            self.label.0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chamber {
    pub id: u8,
    pub finite: bool,
    /// `None` stands for infinite volume.
    pub target_volume: Option<f64>,
}

/// Labeled planar straight-line partition of the truncation disk
/// `|x| <= r_trunc` into chambers 1, 2, 3.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCluster {
    pub r_trunc: f64,
    pub vertices: Vec<Vec2>,
    pub edges: Vec<Edge>,
    pub chambers: Vec<Chamber>,
    /// Vertices fixed on the truncation circle.
    pub pinned: Vec<usize>,
}

impl PolyCluster {
    pub fn chamber(&self, id: u8) -> Option<&Chamber> {
        self.chambers.iter().find(|c| c.id == id)
    }

    pub fn is_finite(&self, id: u8) -> bool {
        self.chamber(id).map_or(false, |c| c.finite)
    }

    pub fn is_pinned(&self, v: usize) -> bool {
        self.pinned.contains(&v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0usize; self.vertices.len()];
        for e in &self.edges {
            for &v in &e.v {
                if v < deg.len() {
                    deg[v] += 1;
                }
            }
        }
        deg
    }

    /// Vertices of degree 3.
    pub fn junctions(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d == 3).map(|(i, _)| i).collect()
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let [a, b] = self.edges[e].v;
        self.vertices[a].dist(self.vertices[b])
    }

    /// Total length of each interface label inside `region`, summed in edge order.
    pub fn pair_measures(&self, region: &Region) -> [f64; 3] {
        let mut m = [0.0; 3];
        for e in &self.edges {
            if let Some(i) = pair_index(e.label.0, e.label.1) {
                m[i] += region.segment_length(self.vertices[e.v[0]], self.vertices[e.v[1]]);
            }
        }
        m
    }

    /// Applies `f` to every vertex.
    pub fn mapped(&self, f: impl Fn(Vec2) -> Vec2) -> PolyCluster {
        PolyCluster { vertices: self.vertices.iter().map(|&p| f(p)).collect(), ..self.clone() }
    }

    /// Region traced for one chamber (see [`ChamberRegion`]).
    pub fn region(&self, chamber: u8) -> core::result::Result<ChamberRegion, Diagnostic> {
        region::trace(self, chamber)
    }
}

/// `Σ c_jk` times the length of label-`(j,k)` edges clipped to `region`.
pub fn weighted_energy(pc: &PolyCluster, w: &WeightSystem, region: &Region) -> Result<EnergyReport> {
    if let Some(r) = region.radius() {
        if r > pc.r_trunc {
            return Err(Error::RegionExceedsTruncation { radius: r, truncation: pc.r_trunc });
        }
        if r <= 0.0 {
            return Ok(EnergyReport::new([0.0; 3], w, *region));
        }
    }
    Ok(EnergyReport::new(pc.pair_measures(region), w, *region))
}

/// Volumes of chambers 1, 2, 3; infinite chambers report `f64::INFINITY`.
///
/// Finite chambers are measured by the shoelace formula over their traced
/// boundary; an untraceable chamber reports `NaN`.
pub fn volume_vector(pc: &PolyCluster) -> [f64; 3] {
    core::array::from_fn(|i| {
        let id = i as u8 + 1;
        if pc.is_finite(id) {
            pc.region(id).map_or(f64::NAN, |r| r.area())
        } else {
            f64::INFINITY
        }
    })
}

/// Signed area of the closed polygon through the given vertex ids.
pub fn cycle_area(points: &[Vec2], cycle: &[usize]) -> f64 {
    let n = cycle.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += points[cycle[i]].cross(points[cycle[(i + 1) % n]]);
    }
    0.5 * acc
}

/// Euclidean length of a polyline.
pub fn polyline_length(points: &[Vec2]) -> f64 {
    points.windows(2).map(|w| w[0].dist(w[1])).sum()
}

/// Square `[-1, 1]^2` as chamber 1 with flat `(2,3)` rays to the
/// truncation circle, a small fixture used in tests and docs.
pub fn square_fixture(r_trunc: f64) -> PolyCluster {
    let vertices = alloc::vec![
        Vec2::new(1.0, 0.0),
        Vec2::new(1.0, 1.0),
        Vec2::new(-1.0, 1.0),
        Vec2::new(-1.0, 0.0),
        Vec2::new(-1.0, -1.0),
        Vec2::new(1.0, -1.0),
        Vec2::new(r_trunc, 0.0),
        Vec2::new(-r_trunc, 0.0),
    ];
    let edges = alloc::vec![
        Edge::new(0, 1, 1, 2),
        Edge::new(1, 2, 1, 2),
        Edge::new(2, 3, 1, 2),
        Edge::new(3, 4, 1, 3),
        Edge::new(4, 5, 1, 3),
        Edge::new(5, 0, 1, 3),
        Edge::new(0, 6, 2, 3),
        Edge::new(3, 7, 2, 3),
    ];
    PolyCluster {
        r_trunc,
        vertices,
        edges,
        chambers: default_chambers(1.0, None),
        pinned: alloc::vec![6, 7],
    }
}

pub(crate) fn default_chambers(v1: f64, v2: Option<f64>) -> Vec<Chamber> {
    alloc::vec![
        Chamber { id: 1, finite: true, target_volume: Some(v1) },
        Chamber { id: 2, finite: v2.is_some(), target_volume: v2 },
        Chamber { id: 3, finite: false, target_volume: None },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_energy_and_volume() {
        let sq = square_fixture(4.0);
        let e = weighted_energy(&sq, &WeightSystem::equal(), &Region::Cylinder(3.0)).unwrap();
        assert_eq!(e.per_pair, [4.0, 4.0, 4.0]);
        assert_eq!(e.total, 12.0);
        let v = volume_vector(&sq);
        assert_eq!(v[0], 4.0);
        assert!(v[1].is_infinite() && v[2].is_infinite());
        assert!(validate_cluster(&sq).is_empty(), "{:?}", validate_cluster(&sq));
        let z = weighted_energy(&sq, &WeightSystem::equal(), &Region::Ball(0.0)).unwrap();
        assert_eq!(z.total, 0.0);
        assert!(matches!(
            weighted_energy(&sq, &WeightSystem::equal(), &Region::Ball(5.0)),
            Err(Error::RegionExceedsTruncation { .. })
        ));
    }

    #[test]
    fn additivity_over_shells() {
        let sq = square_fixture(4.0);
        let w = WeightSystem::new(1.0, 1.3, 0.9).unwrap();
        let inner = weighted_energy(&sq, &w, &Region::Cylinder(1.5)).unwrap().total;
        let outer = weighted_energy(&sq, &w, &Region::Cylinder(3.5)).unwrap().total;
        // shell 1.5 < |x| < 3.5 contains only the flat rays
        assert!((outer - inner - 0.9 * 2.0 * 2.0).abs() < 1e-12);
    }
}
