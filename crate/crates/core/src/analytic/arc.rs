//! Circular arcs through the two points `(±r, 0)`.
//!
//! Every such arc is fixed by the angle `delta ∈ (-π, π)` between its
//! tangent at `(r, 0)` and the chord direction `-e_1`; positive `delta`
//! bulges into `{y > 0}` and `delta = 0` is the straight chord.

use core::f64::consts::PI;

use crate::geom::{Region, Vec2};
#[allow(unused_imports)]
use crate::math::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordArc {
    pub half_chord: f64,
    pub delta: f64,
}

/// `(δ - sin δ cos δ) / sin² δ`, odd and smooth on `(-π, π)`.
pub(crate) fn segment_area_factor(delta: f64) -> f64 {
    if delta.abs() < 1e-4 {
        let d2 = delta * delta;
        return 2.0 * delta / 3.0 * (1.0 + 2.0 * d2 / 15.0);
    }
    let s = delta.sin();
    (delta - s * delta.cos()) / (s * s)
}

const STRAIGHT: f64 = 1e-9;

impl ChordArc {
    pub fn new(half_chord: f64, delta: f64) -> Self {
        ChordArc { half_chord, delta }
    }

    /// Arcs this flat are indistinguishable from their chord in double
    /// precision (the length defect is `r δ² / 3`).
    pub fn is_straight(&self) -> bool {
        self.delta.abs() < STRAIGHT
    }

    /// Signed curvature `sin δ / r` (positive when bulging upward).
    pub fn signed_curvature(&self) -> f64 {
        if self.is_straight() {
            0.0
        } else {
            self.delta.sin() / self.half_chord
        }
    }

    pub fn radius(&self) -> Option<f64> {
        (!self.is_straight()).then(|| self.half_chord / self.delta.sin().abs())
    }

    pub fn center(&self) -> Option<Vec2> {
        (!self.is_straight()).then(|| {
            Vec2::new(0.0, -self.half_chord * self.delta.cos() / self.delta.sin())
        })
    }

    pub fn length(&self) -> f64 {
        if self.is_straight() {
            2.0 * self.half_chord
        } else {
            2.0 * self.half_chord * self.delta / self.delta.sin()
        }
    }

    /// Signed area between the arc and the chord (positive above).
    pub fn signed_area(&self) -> f64 {
        self.half_chord * self.half_chord * segment_area_factor(self.delta)
    }

    /// Angular parameter interval `[t0, t1]` around the centre, `t0 < t1`.
    pub fn parameter_range(&self) -> Option<(f64, f64)> {
        let c = self.center()?;
        let t_right = (-c.y).atan2(self.half_chord);
        Some(if self.delta > 0.0 {
            (t_right, t_right + 2.0 * self.delta)
        } else {
            (t_right + 2.0 * self.delta, t_right)
        })
    }

    /// Point at arc-length fraction `s ∈ [0, 1]`, from `(r, 0)` to `(-r, 0)`.
    pub fn point_at(&self, s: f64) -> Vec2 {
        match (self.center(), self.radius()) {
            (Some(c), Some(radius)) => {
                let t_right = (-c.y).atan2(self.half_chord);
                let t = t_right + 2.0 * self.delta * s;
                c + Vec2::polar(radius, t)
            }
            _ => Vec2::new(self.half_chord * (1.0 - 2.0 * s), 0.0),
        }
    }

    /// Unit tangent at `(r, 0)` pointing into the arc.
    pub fn start_tangent(&self) -> Vec2 {
        Vec2::polar(1.0, PI - self.delta)
    }

    pub fn length_in(&self, region: &Region) -> f64 {
        match (self.center(), self.radius(), self.parameter_range()) {
            (Some(c), Some(radius), Some((t0, t1))) => region.arc_length(c, radius, t0, t1),
            _ => region.segment_length(Vec2::new(self.half_chord, 0.0), Vec2::new(-self.half_chord, 0.0)),
        }
    }

    /// Largest distance of an arc point from the origin.
    pub fn radial_extent(&self) -> f64 {
        let mut best = self.half_chord;
        if let (Some(c), Some(radius), Some((t0, t1))) =
            (self.center(), self.radius(), self.parameter_range())
        {
            for t in [PI / 2.0, -PI / 2.0] {
                if angle_in_range(t, t0, t1) {
                    best = best.max((c + Vec2::polar(radius, t)).norm());
                }
            }
        }
        best
    }

    /// Largest `|x|` over the arc.
    pub fn lateral_extent(&self) -> f64 {
        let mut best = self.half_chord;
        if let (Some(radius), Some((t0, t1))) = (self.radius(), self.parameter_range()) {
            for t in [0.0, PI] {
                if angle_in_range(t, t0, t1) {
                    best = best.max(radius);
                }
            }
        }
        best
    }
}

fn angle_in_range(t: f64, t0: f64, t1: f64) -> bool {
    let tau = 2.0 * PI;
    let k = ((t0 - t) / tau).ceil();
    t + k * tau <= t1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_area;
    use alloc::vec::Vec;

    #[test]
    fn semicircle() {
        let a = ChordArc::new(1.0, PI / 2.0);
        assert!((a.signed_area() - PI / 2.0).abs() < 1e-14);
        assert!((a.length() - PI).abs() < 1e-14);
        assert!(a.center().unwrap().norm() < 1e-15);
        let top = a.point_at(0.5);
        assert!((top.y - 1.0).abs() < 1e-15 && top.x.abs() < 1e-15);
    }

    #[test]
    fn area_matches_shoelace() {
        for &delta in &[-2.5, -1.0, -0.3, 1e-5, 0.2, 1.4, 2.9] {
            let a = ChordArc::new(0.7, delta);
            let pts: Vec<Vec2> = (0..=20000).map(|i| a.point_at(i as f64 / 20000.0)).collect();
            // polygon: arc from right to left, then the chord back
            let shoelace = polygon_area(&pts);
            assert!((shoelace - a.signed_area()).abs() < 1e-6, "delta {delta}");
        }
    }

    #[test]
    fn tangent_direction() {
        let a = ChordArc::new(1.0, 0.4);
        let p = a.point_at(1e-7);
        let dir = (p - Vec2::new(1.0, 0.0)).normalized();
        assert!((dir.dot(a.start_tangent()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn extents() {
        let a = ChordArc::new(1.0, PI / 2.0);
        assert!((a.radial_extent() - 1.0).abs() < 1e-15);
        let big = ChordArc::new(1.0, 2.5);
        let c = big.center().unwrap();
        let r = big.radius().unwrap();
        assert!((big.radial_extent() - (c.y + r)).abs() < 1e-14);
        assert!((big.lateral_extent() - r).abs() < 1e-15);
        assert_eq!(ChordArc::new(1.0, 0.5).lateral_extent(), 1.0);
    }

    #[test]
    fn region_lengths() {
        let a = ChordArc::new(1.0, PI / 2.0);
        assert!((a.length_in(&Region::Ball(2.0)) - PI).abs() < 1e-14);
        assert!((a.length_in(&Region::All) - PI).abs() < 1e-14);
        let flat = ChordArc::new(1.0, 0.0);
        assert!((flat.length_in(&Region::Cylinder(0.5)) - 1.0).abs() < 1e-15);
    }
}
