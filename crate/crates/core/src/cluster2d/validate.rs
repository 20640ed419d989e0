//! Structural and area-based checks of polygonal clusters.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::region::ChamberRegion;
use super::PolyCluster;
use crate::geom::{segments_intersect, Vec2};
#[allow(unused_imports)]
use crate::math::Real;

/// One violated invariant of a [`PolyCluster`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind"))]
pub enum Diagnostic {
    OverlapDetected { chambers: (u8, u8), area: f64 },
    GapDetected { area: f64 },
    BadJunctionDegree { vertex: usize, degree: usize },
    /// A degree-3 vertex without exactly one edge of each label, or a
    /// degree-2 vertex whose edges carry different labels.
    BadJunctionLabels { vertex: usize },
    EdgeCrossing { edges: (usize, usize) },
    /// Edge with a bad vertex index, zero length, or a label outside
    /// `{(1,2), (1,3), (2,3)}`.
    InvalidEdge { edge: usize },
    ZeroVolume { chamber: u8 },
    /// Chamber 1 touches or leaves the truncation disk.
    UnboundedChamber { chamber: u8 },
    /// An infinite chamber never reaches the truncation circle.
    DetachedChamber { chamber: u8 },
    BoundaryNotClosed { chamber: u8 },
    PinnedOffBoundary { vertex: usize },
}

impl Diagnostic {
    pub fn kind(&self) -> &'static str {
        match self {
            Diagnostic::OverlapDetected { .. } => "OverlapDetected",
            Diagnostic::GapDetected { .. } => "GapDetected",
            Diagnostic::BadJunctionDegree { .. } => "BadJunctionDegree",
            Diagnostic::BadJunctionLabels { .. } => "BadJunctionLabels",
            Diagnostic::EdgeCrossing { .. } => "EdgeCrossing",
            Diagnostic::InvalidEdge { .. } => "InvalidEdge",
            Diagnostic::ZeroVolume { .. } => "ZeroVolume",
            Diagnostic::UnboundedChamber { .. } => "UnboundedChamber",
            Diagnostic::DetachedChamber { .. } => "DetachedChamber",
            Diagnostic::BoundaryNotClosed { .. } => "BoundaryNotClosed",
            Diagnostic::PinnedOffBoundary { .. } => "PinnedOffBoundary",
        }
    }
}

/// Relative tolerance (to the disk area) for overlaps and gaps.
pub const AREA_TOL: f64 = 1e-12;

/// Checks every structural invariant and that the chamber regions tile the
/// truncation disk up to [`AREA_TOL`]; returns all violations found.
pub fn validate_cluster(pc: &PolyCluster) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let nv = pc.vertices.len();
    let r = pc.r_trunc;
    let mut edges_ok = true;
    for (i, e) in pc.edges.iter().enumerate() {
        let labels_ok = matches!(e.label, (1, 2) | (1, 3) | (2, 3));
        if e.v[0] >= nv || e.v[1] >= nv || !labels_ok || pc.vertices[e.v[0]] == pc.vertices[e.v[1]] {
            out.push(Diagnostic::InvalidEdge { edge: i });
            edges_ok = false;
        }
    }
    if !edges_ok {
        return out;
    }
    for &p in &pc.pinned {
        if p >= nv || (pc.vertices[p].norm() - r).abs() > 1e-9 * r {
            out.push(Diagnostic::PinnedOffBoundary { vertex: p });
        }
    }
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); nv];
    for (i, e) in pc.edges.iter().enumerate() {
        incident[e.v[0]].push(i);
        incident[e.v[1]].push(i);
    }
    for (v, inc) in incident.iter().enumerate() {
        let d = inc.len();
        let ok = match d {
            1 => pc.is_pinned(v),
            2 | 3 => true,
            _ => false,
        };
        if !ok {
            out.push(Diagnostic::BadJunctionDegree { vertex: v, degree: d });
            continue;
        }
        let labels: Vec<(u8, u8)> = inc.iter().map(|&e| pc.edges[e].label).collect();
        let good = match d {
            2 => labels[0] == labels[1],
            3 => [(1, 2), (1, 3), (2, 3)].iter().all(|l| labels.iter().filter(|x| *x == l).count() == 1),
            _ => true,
        };
        if !good {
            out.push(Diagnostic::BadJunctionLabels { vertex: v });
        }
    }
    for (a, b) in crossing_pairs(pc) {
        out.push(Diagnostic::EdgeCrossing { edges: (a, b) });
    }
    for c in &pc.chambers {
        if c.id == 1 && pc.edges.iter().any(|e| e.touches(1) && e.v.iter().any(|&v| pc.vertices[v].norm() >= r)) {
            out.push(Diagnostic::UnboundedChamber { chamber: 1 });
        }
    }
    let mut regions: Vec<ChamberRegion> = Vec::new();
    for id in 1..=3u8 {
        match pc.region(id) {
            Ok(reg) => regions.push(reg),
            Err(d) => {
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    for reg in &regions {
        if !pc.is_finite(reg.chamber) && reg.arcs().next().is_none() {
            out.push(Diagnostic::DetachedChamber { chamber: reg.chamber });
        }
        if reg.chamber == 1 && reg.area().abs() <= AREA_TOL * PI * r * r {
            out.push(Diagnostic::ZeroVolume { chamber: 1 });
        }
    }
    if regions.len() == 3 {
        let disk = PI * r * r;
        let tol = AREA_TOL * disk;
        let mut covered = 0.0;
        for reg in &regions {
            covered += reg.area();
        }
        let mut overlaps = 0.0;
        for i in 0..3 {
            for j in i + 1..3 {
                let ov = overlap_area(&regions[i], &regions[j]);
                overlaps += ov;
                if ov > tol {
                    out.push(Diagnostic::OverlapDetected {
                        chambers: (regions[i].chamber, regions[j].chamber),
                        area: ov,
                    });
                }
            }
        }
        let gap = disk - covered + overlaps;
        if gap > tol {
            out.push(Diagnostic::GapDetected { area: gap });
        }
    }
    out
}

/// Uniform bucket grid over the truncation disk for segment queries.
struct Grid {
    n: usize,
    lo: f64,
    cell: f64,
    buckets: Vec<Vec<usize>>,
}

impl Grid {
    fn new(r: f64, n: usize) -> Self {
        Grid { n, lo: -r, cell: 2.0 * r / n as f64, buckets: alloc::vec![Vec::new(); n * n] }
    }

    fn range(&self, a: Vec2, b: Vec2) -> (usize, usize, usize, usize) {
        let idx = |x: f64| (((x - self.lo) / self.cell).floor().max(0.0) as usize).min(self.n - 1);
        (idx(a.x.min(b.x)), idx(a.x.max(b.x)), idx(a.y.min(b.y)), idx(a.y.max(b.y)))
    }

    fn insert(&mut self, id: usize, a: Vec2, b: Vec2) {
        let (x0, x1, y0, y1) = self.range(a, b);
        for i in x0..=x1 {
            for j in y0..=y1 {
                self.buckets[i * self.n + j].push(id);
            }
        }
    }

    /// Candidate ids near the segment, sorted and deduplicated.
    fn query(&self, a: Vec2, b: Vec2) -> Vec<usize> {
        let (x0, x1, y0, y1) = self.range(a, b);
        let mut out = Vec::new();
        for i in x0..=x1 {
            for j in y0..=y1 {
                out.extend_from_slice(&self.buckets[i * self.n + j]);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn grid_size(segments: usize) -> usize {
    ((segments as f64).sqrt() as usize).clamp(4, 256)
}

/// Pairs of edges without a common vertex that intersect.
fn crossing_pairs(pc: &PolyCluster) -> Vec<(usize, usize)> {
    let r = pc
        .vertices
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(pc.r_trunc, f64::max);
    let mut grid = Grid::new(r, grid_size(pc.edges.len()));
    for (i, e) in pc.edges.iter().enumerate() {
        grid.insert(i, pc.vertices[e.v[0]], pc.vertices[e.v[1]]);
    }
    let mut out = Vec::new();
    for (i, e) in pc.edges.iter().enumerate() {
        let (a, b) = (pc.vertices[e.v[0]], pc.vertices[e.v[1]]);
        for j in grid.query(a, b) {
            if j <= i {
                continue;
            }
            let f = &pc.edges[j];
            if e.v.iter().any(|v| f.v.contains(v)) {
                continue;
            }
            if segments_intersect(a, b, pc.vertices[f.v[0]], pc.vertices[f.v[1]]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Parameters in `(0, 1)` where `[a, b]` properly crosses `[c, d]`.
fn crossing_param(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> Option<f64> {
    let r = b - a;
    let s = d - c;
    let den = r.cross(s);
    if den == 0.0 {
        return None;
    }
    let t = (c - a).cross(s) / den;
    let u = (c - a).cross(r) / den;
    (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0).then_some(t)
}

/// Area of `A ∩ B` from the pieces of `∂(A ∩ B)`: boundary of each region
/// lying inside the other, shared edges counted once when both regions run
/// the same way and dropped when they run opposite ways, and common arcs
/// of the truncation circle.
pub(crate) fn overlap_area(a: &ChamberRegion, b: &ChamberRegion) -> f64 {
    let r = a.radius;
    let mut acc = 0.0;
    let shared_dir = |reg: &ChamberRegion, edge: usize| reg.segments().find(|s| s.2 == edge).map(|s| s.3);
    for (first, (this, other)) in [(a, b), (b, a)].into_iter().enumerate() {
        let segs: Vec<(Vec2, Vec2)> = other.segments().map(|s| (s.0, s.1)).collect();
        let mut grid = Grid::new(r * (1.0 + 1e-9), grid_size(segs.len()));
        for (i, &(p, q)) in segs.iter().enumerate() {
            grid.insert(i, p, q);
        }
        for (p, q, edge, fwd) in this.segments() {
            if let Some(odir) = shared_dir(other, edge) {
                if first == 0 && odir == fwd {
                    acc += 0.5 * p.cross(q);
                }
                continue;
            }
            let mut cuts: Vec<f64> = grid
                .query(p, q)
                .into_iter()
                .filter_map(|i| crossing_param(p, q, segs[i].0, segs[i].1))
                .collect();
            cuts.push(0.0);
            cuts.push(1.0);
            cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for w in cuts.windows(2) {
                if w[1] <= w[0] {
                    continue;
                }
                let s0 = p + (q - p) * w[0];
                let s1 = p + (q - p) * w[1];
                if other.winding((s0 + s1) * 0.5) != 0 {
                    acc += 0.5 * s0.cross(s1);
                }
            }
        }
    }
    for (a0, a1) in a.arcs() {
        for (b0, b1) in b.arcs() {
            acc += 0.5 * r * r * arc_overlap(a0, a1, b0, b1);
        }
    }
    acc
}

/// Measure of the intersection of two counter-clockwise arcs.
fn arc_overlap(a0: f64, a1: f64, b0: f64, b1: f64) -> f64 {
    let tau = 2.0 * PI;
    let shift = ((a0 - b0) / tau).floor() * tau;
    let (b0, b1) = (b0 + shift, b1 + shift);
    let mut total = 0.0;
    for k in -1..=1 {
        let off = k as f64 * tau;
        let lo = a0.max(b0 + off);
        let hi = a1.min(b1 + off);
        if hi > lo {
            total += hi - lo;
        }
    }
    total.min(a1 - a0)
}
