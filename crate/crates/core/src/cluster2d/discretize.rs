//! Polygonal approximations of the analytic planar clusters.

use alloc::vec::Vec;

use super::{default_chambers, Edge, PolyCluster};
use crate::analytic::{ChordArc, DoubleBubble2D, LensCluster};
use crate::error::{Error, Result};
use crate::geom::Vec2;
#[allow(unused_imports)]
use crate::math::Real;
use crate::roots::bracketed_root;

/// Planar analytic clusters that can be discretized.
#[derive(Debug, Clone, Copy)]
pub enum AnalyticShape<'a> {
    Lens(&'a LensCluster),
    Bubble(&'a DoubleBubble2D),
}

pub fn discretize_analytic(obj: AnalyticShape<'_>, h: f64, r_trunc: f64) -> Result<PolyCluster> {
    match obj {
        AnalyticShape::Lens(l) => discretize_lens(l, h, r_trunc),
        AnalyticShape::Bubble(b) => discretize_bubble(b, h, r_trunc),
    }
}

fn check_step(h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain("edge length h must be positive"));
    }
    Ok(())
}

struct Builder {
    pc: PolyCluster,
}

impl Builder {
    fn vertex(&mut self, p: Vec2) -> usize {
        self.pc.vertices.push(p);
        self.pc.vertices.len() - 1
    }

    fn pinned(&mut self, p: Vec2) -> usize {
        let r = self.pc.r_trunc;
        let v = self.vertex(p * (r / p.norm()));
        self.pc.pinned.push(v);
        v
    }

    /// Samples `arc` on `[s0, s1]` with uniform arc-length steps of at most
    /// `h`, joining the given end vertices.
    fn arc(&mut self, arc: &ChordArc, s0: f64, s1: f64, from: usize, to: usize, h: f64, label: (u8, u8)) {
        let len = arc.length() * (s1 - s0);
        let n = ((len / h).ceil() as usize).max(1);
        let mut prev = from;
        for i in 1..n {
            let s = s0 + (s1 - s0) * i as f64 / n as f64;
            let v = self.vertex(arc.point_at(s));
            self.pc.edges.push(Edge::new(prev, v, label.0, label.1));
            prev = v;
        }
        self.pc.edges.push(Edge::new(prev, to, label.0, label.1));
    }
}

/// Polygonal lens: both caps sampled at arc length at most `h`, the flat
/// `(2,3)` interface as one segment on each side out to the pinned points
/// `(±r_trunc, 0)`.
pub fn discretize_lens(lens: &LensCluster, h: f64, r_trunc: f64) -> Result<PolyCluster> {
    check_step(h)?;
    let (up, down) = lens.arcs().ok_or(Error::Domain("discretization needs a planar lens"))?;
    let extent = lens.radial_extent();
    if !(r_trunc > extent) {
        return Err(Error::TruncationTooSmall { truncation: r_trunc, extent });
    }
    let mut b = Builder {
        pc: PolyCluster {
            r_trunc,
            vertices: Vec::new(),
            edges: Vec::new(),
            chambers: default_chambers(lens.volume, None),
            pinned: Vec::new(),
        },
    };
    let r = lens.r_disk;
    let right = b.vertex(Vec2::new(r, 0.0));
    let left = b.vertex(Vec2::new(-r, 0.0));
    b.arc(&up, 0.0, 1.0, right, left, h, (1, 2));
    b.arc(&down, 0.0, 1.0, right, left, h, (1, 3));
    let pr = b.pinned(Vec2::new(r_trunc, 0.0));
    let pl = b.pinned(Vec2::new(-r_trunc, 0.0));
    b.pc.edges.push(Edge::new(right, pr, 2, 3));
    b.pc.edges.push(Edge::new(left, pl, 2, 3));
    Ok(b.pc)
}

/// Polygonal double bubble. Where the `(2,3)` arc leaves the truncation
/// disk it is cut at the circle and its ends pinned there.
pub fn discretize_bubble(bubble: &DoubleBubble2D, h: f64, r_trunc: f64) -> Result<PolyCluster> {
    check_step(h)?;
    let extent = bubble.chamber1_radial_extent();
    if !(r_trunc > extent) {
        return Err(Error::TruncationTooSmall { truncation: r_trunc, extent });
    }
    let mut b = Builder {
        pc: PolyCluster {
            r_trunc,
            vertices: Vec::new(),
            edges: Vec::new(),
            chambers: default_chambers(1.0, Some(bubble.m)),
            pinned: Vec::new(),
        },
    };
    let [jr, jl] = bubble.junctions();
    let right = b.vertex(jr);
    let left = b.vertex(jl);
    b.arc(&bubble.chord_arc(0), 0.0, 1.0, right, left, h, (1, 2));
    b.arc(&bubble.chord_arc(1), 0.0, 1.0, right, left, h, (1, 3));
    let outer = bubble.chord_arc(2);
    let cuts = circle_crossings(&outer, r_trunc, h);
    if cuts.is_empty() {
        b.arc(&outer, 0.0, 1.0, right, left, h, (2, 3));
    } else {
        // inside on [0, c0], [c1, c2], ..., [c_last, 1]
        let mut bounds = Vec::with_capacity(cuts.len() + 2);
        bounds.push(0.0);
        bounds.extend_from_slice(&cuts);
        bounds.push(1.0);
        for pair in bounds.chunks(2) {
            let (s0, s1) = (pair[0], pair[1]);
            let from = if s0 == 0.0 { right } else { b.pinned(outer.point_at(s0)) };
            let to = if s1 == 1.0 { left } else { b.pinned(outer.point_at(s1)) };
            b.arc(&outer, s0, s1, from, to, h, (2, 3));
        }
    }
    Ok(b.pc)
}

/// Arc fractions where the arc crosses the circle `|x| = radius`, assuming
/// both arc ends lie inside it.
fn circle_crossings(arc: &ChordArc, radius: f64, h: f64) -> Vec<f64> {
    let g = |s: f64| arc.point_at(s).norm() - radius;
    let n = ((arc.length() / h).ceil() as usize).clamp(1000, 1_000_000);
    let mut out = Vec::new();
    let mut prev = g(0.0);
    for i in 1..=n {
        let s1 = i as f64 / n as f64;
        let cur = g(s1);
        if (prev < 0.0) != (cur < 0.0) {
            let s0 = (i - 1) as f64 / n as f64;
            if let Some(s) = bracketed_root(g, s0, s1, 1e-15) {
                out.push(s);
            }
        }
        prev = cur;
    }
    out
}
