//! Junction angles and slice diagnostics of polygonal clusters.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::gradient::chamber_one_cycle;
use crate::cluster2d::PolyCluster;
use crate::error::{Error, Result};
use crate::geom::Vec2;
#[allow(unused_imports)]
use crate::math::Real;

const TAU: f64 = 2.0 * PI;

/// Next vertex along a degree-2 chain after stepping `from -> at`.
fn continue_chain(pc: &PolyCluster, incident: &[Vec<usize>], from: usize, at: usize) -> Option<usize> {
    if incident[at].len() != 2 {
        return None;
    }
    incident[at].iter().map(|&e| pc.edges[e].v).find_map(|[a, b]| {
        let other = if a == at { b } else { a };
        (other != from).then_some(other)
    })
}

/// Unit tangent at `j` of the circle through `j, p1, p2` (the chord
/// direction when the points are collinear), pointing toward `p1`.
pub fn circle_tangent(j: Vec2, p1: Vec2, p2: Option<Vec2>) -> Vec2 {
    let chord = (p1 - j).normalized();
    let Some(p2) = p2 else { return chord };
    let (a, b) = (p1 - j, p2 - j);
    let den = 2.0 * a.cross(b);
    if den.abs() <= 1e-14 * a.norm_sq().max(b.norm_sq()) {
        return chord;
    }
    // circumcentre relative to j
    let c = Vec2::new(b.y * a.norm_sq() - a.y * b.norm_sq(), a.x * b.norm_sq() - b.x * a.norm_sq()) * (1.0 / den);
    let t = (-c).perp().normalized();
    if t.dot(a) >= 0.0 {
        t
    } else {
        -t
    }
}

/// Counter-clockwise angle from direction `a` to direction `b`, in `[0, 2π)`.
fn ccw(a: f64, b: f64) -> f64 {
    (b - a).rem_euclid(TAU)
}

/// Angle between directions `x` and `y` on the side not containing `z`.
fn sector(x: f64, y: f64, z: f64) -> f64 {
    let g = ccw(x, y);
    if ccw(x, z) < g {
        TAU - g
    } else {
        g
    }
}

/// Angles `(θ1, θ2, θ3)` of chambers 1, 2, 3 at each triple junction
/// (right junction first), measured between circle-fit tangents of the
/// incident interfaces.
pub fn junction_angles(pc: &PolyCluster) -> Result<[[f64; 3]; 2]> {
    let mut junctions = pc.junctions();
    if junctions.len() != 2 {
        return Err(Error::WrongJunctionCount(junctions.len()));
    }
    junctions.sort_by(|&a, &b| pc.vertices[b].x.partial_cmp(&pc.vertices[a].x).unwrap());
    let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); pc.vertices.len()];
    for (i, e) in pc.edges.iter().enumerate() {
        incident[e.v[0]].push(i);
        incident[e.v[1]].push(i);
    }
    let mut out = [[0.0; 3]; 2];
    for (k, &j) in junctions.iter().enumerate() {
        let mut dirs = [f64::NAN; 3];
        for &e in &incident[j] {
            let edge = pc.edges[e];
            let p1 = if edge.v[0] == j { edge.v[1] } else { edge.v[0] };
            let p2 = continue_chain(pc, &incident, j, p1).map(|v| pc.vertices[v]);
            let t = circle_tangent(pc.vertices[j], pc.vertices[p1], p2);
            let slot = match edge.label {
                (1, 2) => 0,
                (1, 3) => 1,
                _ => 2,
            };
            dirs[slot] = t.angle();
        }
        if dirs.iter().any(|d| d.is_nan()) {
            return Err(Error::InvalidInput("triple junction without all three labels"));
        }
        let [d12, d13, d23] = dirs;
        out[k] = [sector(d12, d13, d23), sector(d12, d23, d13), sector(d13, d23, d12)];
    }
    Ok(out)
}

/// Fraction of `samples` evenly spaced vertical lines through the interior
/// of chamber 1's horizontal extent that cross its boundary exactly twice.
pub fn single_interval_fraction(pc: &PolyCluster, samples: usize) -> Result<f64> {
    let cycle = chamber_one_cycle(pc)?;
    let pts: Vec<Vec2> = cycle.iter().map(|&v| pc.vertices[v]).collect();
    let lo = pts.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let hi = pts.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let n = pts.len();
    let mut good = 0;
    for s in 0..samples {
        let x = lo + (hi - lo) * (s as f64 + 0.5) / samples as f64;
        let crossings = (0..n)
            .filter(|&i| {
                let (a, b) = (pts[i], pts[(i + 1) % n]);
                (a.x <= x) != (b.x <= x)
            })
            .count();
        if crossings == 2 {
            good += 1;
        }
    }
    Ok(good as f64 / samples as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::build_lens;
    use crate::cluster2d::{discretize_lens, square_fixture};
    use crate::weights::{solve_junction_angles, WeightSystem};

    #[test]
    fn tangent_of_a_circle() {
        let j = Vec2::new(1.0, 0.0);
        let t = circle_tangent(j, Vec2::polar(1.0, 0.1), Some(Vec2::polar(1.0, 0.2)));
        assert!((t - Vec2::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn analytic_lens_angles() {
        for w in [WeightSystem::equal(), WeightSystem::new(1.0, 1.0, 1.5).unwrap()] {
            let lens = build_lens(&w, 2, 1.0).unwrap();
            let pc = discretize_lens(&lens, 1e-3, 2.0).unwrap();
            let oracle = solve_junction_angles(&w).as_array();
            for triple in junction_angles(&pc).unwrap() {
                for i in 0..3 {
                    assert!((triple[i] - oracle[i]).abs() < 0.2f64.to_radians());
                }
            }
        }
    }

    #[test]
    fn square_corners_are_far_from_equilibrium() {
        let a = junction_angles(&square_fixture(4.0)).unwrap();
        for t in a {
            assert!((t[0] + t[1] + t[2] - 2.0 * PI).abs() < 1e-12);
            assert!(t.iter().any(|x| (x - 2.0 * PI / 3.0).abs() > 0.2));
        }
        assert_eq!(single_interval_fraction(&square_fixture(4.0), 100).unwrap(), 1.0);
    }
}
