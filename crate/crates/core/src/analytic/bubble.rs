//! The planar standard weighted double bubble.

use core::f64::consts::PI;

use super::arc::{segment_area_factor, ChordArc};
use crate::error::{Error, Result};
use crate::geom::Vec2;
#[allow(unused_imports)]
use crate::math::Real;
use crate::roots::bracketed_root;
use crate::weights::{solve_junction_angles, AngleTriple, WeightSystem};

/// One of the three arcs of a double bubble.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BubbleArc {
    pub interface_label: (u8, u8),
    /// Tangent-chord angle at the right junction.
    pub delta: f64,
    /// `None` for a straight segment.
    pub center: Option<[f64; 2]>,
    pub radius: Option<f64>,
    pub signed_curvature: f64,
}

impl BubbleArc {
    fn from_chord_arc(label: (u8, u8), arc: ChordArc) -> Self {
        BubbleArc {
            interface_label: label,
            delta: arc.delta,
            center: arc.center().map(|c| [c.x, c.y]),
            radius: arc.radius(),
            signed_curvature: arc.signed_curvature(),
        }
    }
}

/// Chamber 1 (area 1) and chamber 2 (area `m`) bounded by three circular
/// arcs through the junctions `(±r_junction, 0)`; chamber 3 is the
/// unbounded exterior. Arcs are stored in the order `(1,2)`, `(1,3)`, `(2,3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DoubleBubble2D {
    pub weights: WeightSystem,
    pub angles: AngleTriple,
    pub m: f64,
    pub r_junction: f64,
    pub arcs: [BubbleArc; 3],
    /// Direction angle of the `(2,3)` tangent at the right junction.
    pub frame_angle: f64,
}

/// Tangent-chord angles `(δ12, δ13, δ23)` for a frame tilt `phi`.
///
/// Around the right junction the tangents are met counter-clockwise in
/// the order `(2,3)`, `(1,2)`, `(1,3)`, with chambers 2, 1, 3 in the gaps.
fn deltas(angles: &AngleTriple, phi: f64) -> (f64, f64, f64) {
    let d23 = PI - phi;
    let d12 = d23 - angles.theta2;
    let d13 = d12 - angles.theta1;
    (d12, d13, d23)
}

/// Area of chambers 1 and 2 for unit half-chord.
fn unit_areas(angles: &AngleTriple, phi: f64) -> (f64, f64) {
    let (d12, d13, d23) = deltas(angles, phi);
    let s12 = segment_area_factor(d12);
    (s12 - segment_area_factor(d13), segment_area_factor(d23) - s12)
}

/// Solves for the bubble with `|X(1)| = 1`, `|X(2)| = m`.
///
/// For unit half-chord the area ratio depends only on the frame tilt
/// `phi ∈ (0, θ3)`, decreasing from `+∞` to `0`; `phi` is bracketed and
/// the half-chord is then fixed by `|X(1)| = 1`.
pub fn build_double_bubble(w: &WeightSystem, m: f64) -> Result<DoubleBubble2D> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::Domain("bubble volume m must be positive"));
    }
    let angles = solve_junction_angles(w);
    let log_m = m.ln();
    let eps = 1e-14 * angles.theta3;
    let phi = bracketed_root(
        |phi| {
            let (a1, a2) = unit_areas(&angles, phi);
            a2.ln() - a1.ln() - log_m
        },
        eps,
        angles.theta3 - eps,
        1e-15,
    )
    .ok_or(Error::SolveFailed { residual: f64::INFINITY })?;
    let (u1, u2) = unit_areas(&angles, phi);
    let r = (1.0 / u1).sqrt();
    let (d12, d13, d23) = deltas(&angles, phi);
    let bubble = DoubleBubble2D {
        weights: *w,
        angles,
        m,
        r_junction: r,
        arcs: [
            BubbleArc::from_chord_arc((1, 2), ChordArc::new(r, d12)),
            BubbleArc::from_chord_arc((1, 3), ChordArc::new(r, d13)),
            BubbleArc::from_chord_arc((2, 3), ChordArc::new(r, d23)),
        ],
        frame_angle: phi,
    };
    let residual = (r * r * u1 - 1.0).abs().max((r * r * u2 - m).abs() / m.max(1.0));
    if !(residual <= 1e-10) {
        return Err(Error::SolveFailed { residual });
    }
    Ok(bubble)
}

impl DoubleBubble2D {
    pub fn chord_arc(&self, index: usize) -> ChordArc {
        ChordArc::new(self.r_junction, self.arcs[index].delta)
    }

    /// `(|X(1)|, |X(2)|)` from the circular-segment formula.
    pub fn areas(&self) -> (f64, f64) {
        let s: [f64; 3] = core::array::from_fn(|i| self.chord_arc(i).signed_area());
        (s[0] - s[1], s[2] - s[0])
    }

    pub fn junctions(&self) -> [Vec2; 2] {
        [Vec2::new(self.r_junction, 0.0), Vec2::new(-self.r_junction, 0.0)]
    }

    /// Radius of the smallest centred ball containing chamber 1.
    pub fn chamber1_radial_extent(&self) -> f64 {
        self.chord_arc(0).radial_extent().max(self.chord_arc(1).radial_extent())
    }

    pub fn chamber1_lateral_extent(&self) -> f64 {
        self.chord_arc(0).lateral_extent().max(self.chord_arc(1).lateral_extent())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_area;
    use alloc::vec::Vec;

    fn shoelace_between(a: &ChordArc, b: &ChordArc, samples: usize) -> f64 {
        // closed curve: along a from right to left, back along b from left to right
        let mut pts: Vec<Vec2> = (0..=samples).map(|i| a.point_at(i as f64 / samples as f64)).collect();
        pts.extend((1..samples).map(|i| b.point_at(1.0 - i as f64 / samples as f64)));
        polygon_area(&pts)
    }

    #[test]
    fn equal_volumes_give_flat_middle_wall() {
        let b = build_double_bubble(&WeightSystem::equal(), 1.0).unwrap();
        assert!(b.arcs[0].signed_curvature.abs() < 1e-12);
        assert!((b.frame_angle - PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn areas_match_discretized_shoelace() {
        let ws = [WeightSystem::equal(), WeightSystem::new(1.0, 1.4, 0.8).unwrap()];
        for w in ws {
            for &m in &[0.3, 1.0, 7.0, 1000.0] {
                let b = build_double_bubble(&w, m).unwrap();
                let (a1, a2) = b.areas();
                assert!((a1 - 1.0).abs() < 1e-8);
                assert!((a2 - m).abs() < 1e-8);
                // independent oracle on a fine polygon; chord error O(n^-2)
                let n = 200_000;
                let s1 = shoelace_between(&b.chord_arc(0), &b.chord_arc(1), n);
                let s2 = shoelace_between(&b.chord_arc(2), &b.chord_arc(0), n);
                assert!((s1 - 1.0).abs() < 1e-6, "m {m}: {s1}");
                assert!((s2 - m).abs() < 1e-6 * m.max(1.0), "m {m}: {s2}");
            }
        }
    }

    #[test]
    fn tangent_angles_at_junction() {
        let w = WeightSystem::new(1.0, 1.2, 1.5).unwrap();
        let b = build_double_bubble(&w, 3.0).unwrap();
        let t: [Vec2; 3] = core::array::from_fn(|i| b.chord_arc(i).start_tangent());
        let ang = |u: Vec2, v: Vec2| u.dot(v).clamp(-1.0, 1.0).acos();
        // chamber 1 between (1,2) and (1,3), chamber 2 between (1,2) and (2,3)
        let th = b.angles;
        let d1 = ang(t[0], t[1]);
        let d2 = ang(t[0], t[2]);
        let d3 = ang(t[1], t[2]);
        let fold = |x: f64| if x > PI { 2.0 * PI - x } else { x };
        assert!((d1 - fold(th.theta1)).abs() < 1e-9);
        assert!((d2 - fold(th.theta2)).abs() < 1e-9);
        assert!((d3 - fold(th.theta3)).abs() < 1e-9);
    }

    #[test]
    fn large_bubble_approaches_lens_angles() {
        let b = build_double_bubble(&WeightSystem::equal(), 1e6).unwrap();
        assert!((b.arcs[0].delta - PI / 3.0).abs() < 1e-2);
        assert!((b.arcs[1].delta + PI / 3.0).abs() < 1e-2);
        assert!(b.arcs[2].delta > 3.0);
    }

    #[test]
    fn rejects_bad_m() {
        assert!(build_double_bubble(&WeightSystem::equal(), 0.0).is_err());
        assert!(build_double_bubble(&WeightSystem::equal(), f64::NAN).is_err());
    }
}
