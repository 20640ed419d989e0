//! Hausdorff distance between chamber boundaries inside a ball.

use alloc::vec::Vec;

use super::PolyCluster;
use crate::error::{Error, Result};
use crate::geom::{point_segment_distance, Region, Vec2};
#[allow(unused_imports)]
use crate::math::Real;

/// Boundary edges of `chamber` clipped to `B_rho`, as segments.
fn clipped_segments(pc: &PolyCluster, chamber: u8, rho: f64) -> Vec<(Vec2, Vec2)> {
    let ball = Region::Ball(rho);
    pc.edges
        .iter()
        .filter(|e| e.touches(chamber))
        .filter_map(|e| {
            let (a, b) = (pc.vertices[e.v[0]], pc.vertices[e.v[1]]);
            ball.clip_segment(a, b).map(|(s0, s1)| (a + (b - a) * s0, a + (b - a) * s1))
        })
        .collect()
}

/// Points along the boundary of `chamber` inside `B_rho`, spaced at most
/// `pitch` apart along each edge (edge ends included).
pub fn sample_boundary(pc: &PolyCluster, chamber: u8, rho: f64, pitch: f64) -> Vec<Vec2> {
    let mut out = Vec::new();
    for (a, b) in clipped_segments(pc, chamber, rho) {
        let n = ((a.dist(b) / pitch).ceil() as usize).max(1);
        for i in 0..=n {
            out.push(a + (b - a) * (i as f64 / n as f64));
        }
    }
    out
}

fn one_sided(points: &[Vec2], segs: &[(Vec2, Vec2)]) -> f64 {
    let mut worst: f64 = 0.0;
    for &p in points {
        let mut best = f64::INFINITY;
        for &(a, b) in segs {
            best = best.min(point_segment_distance(p, a, b));
            if best <= worst {
                break;
            }
        }
        worst = worst.max(best);
    }
    worst
}

/// Symmetric Hausdorff distance between the boundaries of `chamber` in the
/// two clusters, both clipped to `B_rho`, resampled at pitch `1e-3 rho`.
///
/// Returns `f64::INFINITY` when exactly one of the clipped boundaries is
/// empty.
pub fn hausdorff_distance(a: &PolyCluster, b: &PolyCluster, chamber: u8, rho: f64) -> Result<f64> {
    let limit = a.r_trunc.min(b.r_trunc);
    if rho > limit {
        return Err(Error::RegionExceedsTruncation { radius: rho, truncation: limit });
    }
    if !(rho > 0.0) {
        return Err(Error::Domain("window radius must be positive"));
    }
    let pitch = 1e-3 * rho;
    let (sa, sb) = (clipped_segments(a, chamber, rho), clipped_segments(b, chamber, rho));
    match (sa.is_empty(), sb.is_empty()) {
        (true, true) => return Ok(0.0),
        (true, false) | (false, true) => return Ok(f64::INFINITY),
        _ => {}
    }
    let pa = sample_boundary(a, chamber, rho, pitch);
    let pb = sample_boundary(b, chamber, rho, pitch);
    Ok(one_sided(&pa, &sb).max(one_sided(&pb, &sa)))
}

#[cfg(test)]
mod tests {
    use super::super::discretize_lens;
    use super::*;
    use crate::analytic::build_lens;
    use crate::weights::WeightSystem;

    #[test]
    fn identity_and_translation() {
        let lens = build_lens(&WeightSystem::equal(), 2, 1.0).unwrap();
        let pc = discretize_lens(&lens, 1e-2, 3.0).unwrap();
        assert!(hausdorff_distance(&pc, &pc, 1, 2.0).unwrap() <= 1e-15);
        let moved = pc.mapped(|p| p + Vec2::new(0.1, 0.0));
        let d = hausdorff_distance(&pc, &moved, 1, 2.0).unwrap();
        assert!((d - 0.1).abs() < 1e-3, "{d}");
        assert!(hausdorff_distance(&pc, &moved, 1, 3.5).is_err());
    }
}
