//! Chamber regions as oriented boundary pieces: polygon edges plus arcs of
//! the truncation circle.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{Diagnostic, PolyCluster};
use crate::geom::Vec2;
#[allow(unused_imports)]
use crate::math::Real;

const TAU: f64 = 2.0 * PI;

/// One oriented piece of a chamber boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    /// Edge `edge` traversed from `a` to `b`; `forward` tells whether this
    /// is the stored direction `v[0] -> v[1]`.
    Seg { a: Vec2, b: Vec2, edge: usize, forward: bool },
    /// Counter-clockwise arc of the truncation circle, `t0 < t1 <= t0 + 2π`.
    Arc { t0: f64, t1: f64 },
}

/// Oriented boundary of a chamber within the truncation disk, with the
/// chamber on the left of every piece.
#[derive(Debug, Clone, PartialEq)]
pub struct ChamberRegion {
    pub chamber: u8,
    pub radius: f64,
    pub pieces: Vec<Piece>,
}

impl ChamberRegion {
    /// Area by Green's theorem, `½ ∮ x dy - y dx`.
    pub fn area(&self) -> f64 {
        let mut acc = 0.0;
        for p in &self.pieces {
            acc += match *p {
                Piece::Seg { a, b, .. } => 0.5 * a.cross(b),
                Piece::Arc { t0, t1 } => 0.5 * self.radius * self.radius * (t1 - t0),
            };
        }
        acc
    }

    /// Winding number of the boundary around `p` (a point strictly inside
    /// the truncation disk and off the boundary), by signed crossings of the
    /// ray from `p` in the `+x` direction.
    pub fn winding(&self, p: Vec2) -> i32 {
        let mut w = 0;
        for piece in &self.pieces {
            match *piece {
                Piece::Seg { a, b, .. } => {
                    if a.y <= p.y {
                        if b.y > p.y && (b - a).cross(p - a) > 0.0 {
                            w += 1;
                        }
                    } else if b.y <= p.y && (b - a).cross(p - a) < 0.0 {
                        w -= 1;
                    }
                }
                Piece::Arc { t0, t1 } => {
                    let r = self.radius;
                    if p.y.abs() >= r {
                        continue;
                    }
                    // the ray leaves the disk once, crossing the circle upward
                    let t = p.y.atan2((r * r - p.y * p.y).sqrt());
                    if angle_in(t, t0, t1) {
                        w += 1;
                    }
                }
            }
        }
        w
    }

    pub fn arcs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.pieces.iter().filter_map(|p| match *p {
            Piece::Arc { t0, t1 } => Some((t0, t1)),
            _ => None,
        })
    }

    pub fn segments(&self) -> impl Iterator<Item = (Vec2, Vec2, usize, bool)> + '_ {
        self.pieces.iter().filter_map(|p| match *p {
            Piece::Seg { a, b, edge, forward } => Some((a, b, edge, forward)),
            _ => None,
        })
    }
}

pub(crate) fn angle_in(t: f64, t0: f64, t1: f64) -> bool {
    let k = ((t0 - t) / TAU).ceil();
    t + k * TAU < t1
}

/// Polar angle in `[0, 2π)`.
pub(crate) fn angle_of(p: Vec2) -> f64 {
    let a = p.y.atan2(p.x);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

/// A connected piece of a chamber's boundary graph: a closed cycle, or a
/// path between two pinned vertices.
struct Component {
    steps: Vec<(usize, bool)>,
    closed: bool,
}

impl Component {
    fn reverse(&mut self) {
        self.steps.reverse();
        for s in &mut self.steps {
            s.1 = !s.1;
        }
    }
}

fn step_ends(pc: &PolyCluster, (e, fwd): (usize, bool)) -> (usize, usize) {
    let [a, b] = pc.edges[e].v;
    if fwd {
        (a, b)
    } else {
        (b, a)
    }
}

fn components(pc: &PolyCluster, chamber: u8) -> Result<Vec<Component>, Diagnostic> {
    let broken = Diagnostic::BoundaryNotClosed { chamber };
    let nv = pc.vertices.len();
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); nv];
    for (i, e) in pc.edges.iter().enumerate() {
        if e.touches(chamber) {
            for &v in &e.v {
                incident.get_mut(v).ok_or(broken.clone())?.push(i);
            }
        }
    }
    for (v, inc) in incident.iter().enumerate() {
        let want = if pc.is_pinned(v) { 1 } else { 2 };
        if !inc.is_empty() && inc.len() != want {
            return Err(broken);
        }
    }
    let mut used = alloc::vec![false; pc.edges.len()];
    let mut out = Vec::new();
    let walk = |start_edge: usize, start_vertex: usize, used: &mut Vec<bool>| -> Vec<(usize, bool)> {
        let mut steps = Vec::new();
        let mut e = start_edge;
        let mut v = start_vertex;
        loop {
            used[e] = true;
            let fwd = pc.edges[e].v[0] == v;
            steps.push((e, fwd));
            let next_v = if fwd { pc.edges[e].v[1] } else { pc.edges[e].v[0] };
            match incident[next_v].iter().copied().find(|&f| !used[f]) {
                Some(f) => {
                    e = f;
                    v = next_v;
                }
                None => break,
            }
        }
        steps
    };
    let mut pinned_sorted = pc.pinned.clone();
    pinned_sorted.sort_unstable();
    for &p in &pinned_sorted {
        if p < nv && incident[p].len() == 1 && !used[incident[p][0]] {
            let steps = walk(incident[p][0], p, &mut used);
            let (_, end) = step_ends(pc, *steps.last().unwrap());
            if !pc.is_pinned(end) {
                return Err(broken);
            }
            out.push(Component { steps, closed: false });
        }
    }
    for i in 0..pc.edges.len() {
        if pc.edges[i].touches(chamber) && !used[i] {
            let steps = walk(i, pc.edges[i].v[0], &mut used);
            let (first, _) = step_ends(pc, steps[0]);
            let (_, last) = step_ends(pc, *steps.last().unwrap());
            if first != last {
                return Err(broken);
            }
            out.push(Component { steps, closed: true });
        }
    }
    Ok(out)
}

fn signed_area(pc: &PolyCluster, steps: &[(usize, bool)]) -> f64 {
    let mut acc = 0.0;
    for &s in steps {
        let (a, b) = step_ends(pc, s);
        acc += pc.vertices[a].cross(pc.vertices[b]);
    }
    0.5 * acc
}

/// Direction in which chamber 1's counter-clockwise boundary runs along each edge.
fn chamber_one_directions(pc: &PolyCluster) -> Result<Vec<Option<bool>>, Diagnostic> {
    let mut dir = alloc::vec![None; pc.edges.len()];
    for mut c in components(pc, 1)? {
        if !c.closed {
            return Err(Diagnostic::UnboundedChamber { chamber: 1 });
        }
        if signed_area(pc, &c.steps) < 0.0 {
            c.reverse();
        }
        for (e, fwd) in c.steps {
            dir[e] = Some(fwd);
        }
    }
    Ok(dir)
}

/// Traces the oriented boundary of `chamber`.
///
/// Chamber 1 runs counter-clockwise. Every other boundary component runs
/// against chamber 1 along their common edges; components touching only
/// chambers 2 and 3 put chamber 2 on the side of `+x_n` at the truncation
/// circle (or inside, for a closed loop around a finite chamber 2).
/// Consecutive path ends are joined counter-clockwise along the circle.
pub(crate) fn trace(pc: &PolyCluster, chamber: u8) -> Result<ChamberRegion, Diagnostic> {
    let dir1 = chamber_one_directions(pc)?;
    let mut comps = components(pc, chamber)?;
    for c in &mut comps {
        if chamber == 1 {
            if signed_area(pc, &c.steps) < 0.0 {
                c.reverse();
            }
            continue;
        }
        let shared = c.steps.iter().find_map(|&(e, fwd)| dir1[e].map(|d| d == fwd));
        let flip = match shared {
            Some(same) => same,
            None if c.closed => {
                let ccw = signed_area(pc, &c.steps) > 0.0;
                let want_ccw = pc.is_finite(chamber);
                ccw != want_ccw
            }
            None => {
                let (s, _) = step_ends(pc, c.steps[0]);
                let (_, e) = step_ends(pc, *c.steps.last().unwrap());
                let ts = angle_of(pc.vertices[s]);
                let te = angle_of(pc.vertices[e]);
                let up = (PI / 2.0 - te).rem_euclid(TAU) < (ts - te).rem_euclid(TAU);
                up != (chamber == 2)
            }
        };
        if flip {
            c.reverse();
        }
    }
    let mut pieces = Vec::new();
    let mut starts = Vec::new();
    let mut ends = Vec::new();
    for c in &comps {
        for &(e, fwd) in &c.steps {
            let (a, b) = step_ends(pc, (e, fwd));
            pieces.push(Piece::Seg { a: pc.vertices[a], b: pc.vertices[b], edge: e, forward: fwd });
        }
        if !c.closed {
            let (s, _) = step_ends(pc, c.steps[0]);
            let (_, e) = step_ends(pc, *c.steps.last().unwrap());
            starts.push(angle_of(pc.vertices[s]));
            ends.push(angle_of(pc.vertices[e]));
        }
    }
    for &te in &ends {
        let gap = starts
            .iter()
            .map(|&ts| {
                let d = (ts - te).rem_euclid(TAU);
                if d == 0.0 {
                    TAU
                } else {
                    d
                }
            })
            .fold(f64::INFINITY, f64::min);
        pieces.push(Piece::Arc { t0: te, t1: te + gap });
    }
    if ends.is_empty() && !pc.is_finite(chamber) {
        pieces.push(Piece::Arc { t0: 0.0, t1: TAU });
    }
    Ok(ChamberRegion { chamber, radius: pc.r_trunc, pieces })
}
