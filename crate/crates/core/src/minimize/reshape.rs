//! Resampling, perturbation and alternative starting clusters.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cluster2d::{Chamber, Edge, PolyCluster};
use crate::geom::Vec2;
#[allow(unused_imports)]
use crate::math::Real;

/// Polylines between nodes (vertices of degree other than 2, and pinned
/// vertices); closed loops without nodes start at their lowest vertex id.
pub fn chains(pc: &PolyCluster) -> Vec<(Vec<usize>, (u8, u8))> {
    let nv = pc.vertices.len();
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); nv];
    for (i, e) in pc.edges.iter().enumerate() {
        incident[e.v[0]].push(i);
        incident[e.v[1]].push(i);
    }
    let is_node = |v: usize| incident[v].len() != 2 || pc.is_pinned(v);
    let mut used = alloc::vec![false; pc.edges.len()];
    let mut out = Vec::new();
    let walk = |start: usize, first: usize, used: &mut Vec<bool>| {
        let mut path = alloc::vec![start];
        let mut e = first;
        let mut v = start;
        loop {
            used[e] = true;
            let [a, b] = pc.edges[e].v;
            v = if a == v { b } else { a };
            path.push(v);
            if is_node(v) || v == start {
                break;
            }
            match incident[v].iter().copied().find(|&f| !used[f]) {
                Some(f) => e = f,
                None => break,
            }
        }
        (path, pc.edges[first].label)
    };
    for v in 0..nv {
        if is_node(v) {
            for &e in &incident[v] {
                if !used[e] {
                    out.push(walk(v, e, &mut used));
                }
            }
        }
    }
    for e in 0..pc.edges.len() {
        if !used[e] {
            let start = pc.edges[e].v[0];
            out.push(walk(start, e, &mut used));
        }
    }
    out
}

/// Redistributes every chain's interior vertices at uniform arc length,
/// with spacing at most `spacing`; node vertices keep their positions
/// (and pinned status).
pub fn resample(pc: &PolyCluster, spacing: f64) -> PolyCluster {
    let mut out = PolyCluster {
        r_trunc: pc.r_trunc,
        vertices: Vec::new(),
        edges: Vec::new(),
        chambers: pc.chambers.clone(),
        pinned: Vec::new(),
    };
    let mut remap: Vec<Option<usize>> = alloc::vec![None; pc.vertices.len()];
    let mut keep = |v: usize, out: &mut PolyCluster| -> usize {
        if let Some(i) = remap[v] {
            return i;
        }
        out.vertices.push(pc.vertices[v]);
        let i = out.vertices.len() - 1;
        if pc.is_pinned(v) {
            out.pinned.push(i);
        }
        remap[v] = Some(i);
        i
    };
    for (path, label) in chains(pc) {
        let pts: Vec<Vec2> = path.iter().map(|&v| pc.vertices[v]).collect();
        let mut cum = alloc::vec![0.0];
        for w in pts.windows(2) {
            let last = *cum.last().unwrap();
            cum.push(last + w[0].dist(w[1]));
        }
        let total = *cum.last().unwrap();
        let k = ((total / spacing).ceil() as usize).max(if path[0] == *path.last().unwrap() { 3 } else { 1 });
        let first = keep(path[0], &mut out);
        let last = keep(*path.last().unwrap(), &mut out);
        let mut prev = first;
        let mut seg = 0;
        for i in 1..k {
            let s = total * i as f64 / k as f64;
            while seg + 1 < cum.len() - 1 && cum[seg + 1] < s {
                seg += 1;
            }
            let span = cum[seg + 1] - cum[seg];
            let f = if span > 0.0 { (s - cum[seg]) / span } else { 0.0 };
            out.vertices.push(pts[seg] + (pts[seg + 1] - pts[seg]) * f);
            let v = out.vertices.len() - 1;
            out.edges.push(Edge::new(prev, v, label.0, label.1));
            prev = v;
        }
        out.edges.push(Edge::new(prev, last, label.0, label.1));
    }
    out
}

/// Adds independent uniform `[-amplitude, amplitude]` offsets to both
/// coordinates of every free vertex.
pub fn jitter(pc: &PolyCluster, amplitude: f64, seed: u64) -> PolyCluster {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = pc.clone();
    for (i, p) in out.vertices.iter_mut().enumerate() {
        let dx = rng.gen_range(-amplitude..=amplitude);
        let dy = rng.gen_range(-amplitude..=amplitude);
        if !pc.is_pinned(i) {
            *p += Vec2::new(dx, dy);
        }
    }
    out
}

/// Square chamber 1 of the given area centred at the origin, with
/// junctions at the midpoints of its vertical sides and flat `(2,3)` rays
/// to `(±r_trunc, 0)`; sides subdivided at spacing at most `h`.
pub fn box_lens(area: f64, h: f64, r_trunc: f64) -> PolyCluster {
    let s = 0.5 * area.sqrt();
    let mut pc = PolyCluster {
        r_trunc,
        vertices: alloc::vec![Vec2::new(s, 0.0), Vec2::new(-s, 0.0)],
        edges: Vec::new(),
        chambers: alloc::vec![
            Chamber { id: 1, finite: true, target_volume: Some(area) },
            Chamber { id: 2, finite: false, target_volume: None },
            Chamber { id: 3, finite: false, target_volume: None },
        ],
        pinned: Vec::new(),
    };
    for (sign, label) in [(1.0, (1u8, 2u8)), (-1.0, (1, 3))] {
        let corners = [
            Vec2::new(s, 0.0),
            Vec2::new(s, sign * s),
            Vec2::new(-s, sign * s),
            Vec2::new(-s, 0.0),
        ];
        let mut prev = 0;
        for (c, w) in corners.windows(2).enumerate() {
            let n = ((w[0].dist(w[1]) / h).ceil() as usize).max(1);
            for i in 1..=n {
                let v = if c == 2 && i == n {
                    1
                } else {
                    pc.vertices.push(w[0] + (w[1] - w[0]) * (i as f64 / n as f64));
                    pc.vertices.len() - 1
                };
                pc.edges.push(Edge::new(prev, v, label.0, label.1));
                prev = v;
            }
        }
    }
    pc.vertices.push(Vec2::new(r_trunc, 0.0));
    pc.vertices.push(Vec2::new(-r_trunc, 0.0));
    let n = pc.vertices.len();
    pc.edges.push(Edge::new(0, n - 2, 2, 3));
    pc.edges.push(Edge::new(1, n - 1, 2, 3));
    pc.pinned = alloc::vec![n - 2, n - 1];
    pc
}

/// Mean edge length.
pub fn mean_edge_length(pc: &PolyCluster) -> f64 {
    let total: f64 = (0..pc.edges.len()).map(|i| pc.edge_length(i)).sum();
    total / pc.edges.len().max(1) as f64
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster2d::{validate_cluster, volume_vector};

    #[test]
    fn box_lens_is_valid() {
        let b = box_lens(1.0, 0.1, 2.0);
        assert_eq!(validate_cluster(&b), Vec::new());
        assert!((volume_vector(&b)[0] - 1.0).abs() < 1e-14);
        assert_eq!(b.junctions().len(), 2);
    }

    #[test]
    fn resampling_keeps_nodes_and_shape() {
        let b = box_lens(1.0, 0.1, 2.0);
        let r = resample(&b, 0.03);
        assert_eq!(validate_cluster(&r), Vec::new());
        assert_eq!(r.junctions().len(), 2);
        assert_eq!(r.pinned.len(), 2);
        assert!((volume_vector(&r)[0] - 1.0).abs() < 1e-3);
        assert!(mean_edge_length(&r) <= 0.03 + 1e-12);
    }

    #[test]
    fn jitter_is_reproducible() {
        let b = box_lens(1.0, 0.1, 2.0);
        assert_eq!(jitter(&b, 0.05, 7), jitter(&b, 0.05, 7));
        assert_ne!(jitter(&b, 0.05, 7), jitter(&b, 0.05, 8));
        let j = jitter(&b, 0.05, 7);
        for &p in &b.pinned {
            assert_eq!(j.vertices[p], b.vertices[p]);
        }
    }
}
