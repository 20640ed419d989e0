//! First variation of the weighted length and the chamber-1 area constraint.

use alloc::vec::Vec;

use crate::cluster2d::{Piece, PolyCluster};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::weights::WeightSystem;

/// Weight of an edge label.
pub(crate) fn label_weight(w: &WeightSystem, label: (u8, u8)) -> f64 {
    w.pair(label.0, label.1)
}

/// Total weighted length of all edges, in edge order.
pub fn total_energy(pc: &PolyCluster, w: &WeightSystem) -> f64 {
    let mut e = 0.0;
    for (i, edge) in pc.edges.iter().enumerate() {
        e += label_weight(w, edge.label) * pc.edge_length(i);
    }
    e
}

/// `∂P_c / ∂x_v`: for each free vertex the sum over incident edges of
/// `c_e` times the unit vector from the far endpoint toward `v`; pinned
/// vertices get zero.
pub fn energy_gradient(pc: &PolyCluster, w: &WeightSystem) -> Vec<Vec2> {
    let mut g = alloc::vec![Vec2::ZERO; pc.vertices.len()];
    for e in &pc.edges {
        let [a, b] = e.v;
        let d = pc.vertices[a] - pc.vertices[b];
        let len = d.norm();
        if len == 0.0 {
            continue;
        }
        let u = d * (label_weight(w, e.label) / len);
        g[a] += u;
        g[b] -= u;
    }
    for &p in &pc.pinned {
        if p < g.len() {
            g[p] = Vec2::ZERO;
        }
    }
    g
}

/// Vertex ids of chamber 1's boundary in counter-clockwise order.
pub fn chamber_one_cycle(pc: &PolyCluster) -> Result<Vec<usize>> {
    let region = pc.region(1).map_err(|_| Error::InvalidInput("chamber 1 boundary is not a closed curve"))?;
    let mut ids = Vec::with_capacity(region.pieces.len());
    for piece in &region.pieces {
        if let Piece::Seg { edge, forward, .. } = *piece {
            let [a, b] = pc.edges[edge].v;
            ids.push(if forward { a } else { b });
        }
    }
    // a single closed cycle: each step starts where the previous one ended
    let n = ids.len();
    for (i, piece) in region.pieces.iter().enumerate() {
        if let Piece::Seg { edge, forward, .. } = *piece {
            let [a, b] = pc.edges[edge].v;
            let end = if forward { b } else { a };
            if ids[(i + 1) % n] != end {
                return Err(Error::InvalidInput("chamber 1 must be bounded by one closed curve"));
            }
        }
    }
    if n < 3 {
        return Err(Error::InvalidInput("chamber 1 boundary has fewer than three vertices"));
    }
    Ok(ids)
}

/// `∂|X(1)| / ∂x_v` for the vertices of a counter-clockwise cycle:
/// `½ perp(next - prev)` rotated outward.
pub fn area_gradient(points: &[Vec2], cycle: &[usize]) -> Vec<(usize, Vec2)> {
    let n = cycle.len();
    (0..n)
        .map(|i| {
            let prev = points[cycle[(i + n - 1) % n]];
            let next = points[cycle[(i + 1) % n]];
            let d = next - prev;
            (cycle[i], Vec2::new(d.y, -d.x) * 0.5)
        })
        .collect()
}

/// Moves every chamber-1 boundary vertex by `λ n_v` along its unit
/// outward chord normal, with `λ` from Newton's method on the (quadratic)
/// area so that `|X(1)| = target` to 1e-10.
pub fn project_volume(pc: &PolyCluster, target: f64) -> Result<PolyCluster> {
    let cycle = chamber_one_cycle(pc)?;
    project_volume_on(pc, &cycle, target)
}

pub(crate) fn project_volume_on(pc: &PolyCluster, cycle: &[usize], target: f64) -> Result<PolyCluster> {
    let n = cycle.len();
    let base: Vec<Vec2> = cycle.iter().map(|&v| pc.vertices[v]).collect();
    let normals: Vec<Vec2> = (0..n)
        .map(|i| {
            let d = base[(i + 1) % n] - base[(i + n - 1) % n];
            let nv = Vec2::new(d.y, -d.x);
            let len = nv.norm();
            if len > 0.0 {
                nv * (1.0 / len)
            } else {
                Vec2::ZERO
            }
        })
        .collect();
    // A(λ) = a0 + a1 λ + a2 λ²
    let (mut a0, mut a1, mut a2) = (0.0, 0.0, 0.0);
    for i in 0..n {
        let j = (i + 1) % n;
        a0 += base[i].cross(base[j]);
        a1 += base[i].cross(normals[j]) + normals[i].cross(base[j]);
        a2 += normals[i].cross(normals[j]);
    }
    let (a0, a1, a2) = (0.5 * a0, 0.5 * a1, 0.5 * a2);
    let area = |l: f64| a0 + l * (a1 + l * a2);
    let mut lambda = 0.0;
    let mut residual = area(0.0) - target;
    let mut iters = 0;
    while residual.abs() > 1e-12 * target.abs().max(1.0) {
        iters += 1;
        if iters > 50 {
            return Err(Error::ProjectionFailed { residual });
        }
        let slope = a1 + 2.0 * a2 * lambda;
        if slope == 0.0 || !slope.is_finite() {
            return Err(Error::ProjectionFailed { residual });
        }
        lambda -= residual / slope;
        residual = area(lambda) - target;
    }
    let mut out = pc.clone();
    for i in 0..n {
        if !pc.is_pinned(cycle[i]) {
            out.vertices[cycle[i]] = base[i] + normals[i] * lambda;
        }
    }
    let check = crate::cluster2d::cycle_area(&out.vertices, cycle) - target;
    if !(check.abs() <= 1e-10 * target.abs().max(1.0)) {
        return Err(Error::ProjectionFailed { residual: check });
    }
    Ok(out)
}
