//! Planar vectors and exact clipping of segments and circular arcs.

use core::f64::consts::PI;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[allow(unused_imports)]
use crate::math::Real;

const TAU: f64 = 2.0 * PI;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }
    #[inline]
    pub fn polar(r: f64, angle: f64) -> Self {
        Vec2::new(r * angle.cos(), r * angle.sin())
    }
    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }
    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }
    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }
    #[inline]
    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }
    /// Counter-clockwise rotation by a right angle.
    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }
    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
    #[inline]
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = (angle.sin(), angle.cos());
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
    #[inline]
    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}
impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}
impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}
impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}
impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}
impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}
impl SubAssign for Vec2 {
    #[inline]
    fn sub_assign(&mut self, o: Vec2) {
        self.x -= o.x;
        self.y -= o.y;
    }
}

/// Integration region for interface measures.
///
/// `Ball(r)` is the open ball `B_r(0)`; `Cylinder(r)` is `B^{n-1}_r(0) x R`,
/// which in the plane is the vertical strip `|x| < r`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "radius", rename_all = "lowercase"))]
pub enum Region {
    Ball(f64),
    Cylinder(f64),
    All,
}

impl Region {
    pub fn radius(&self) -> Option<f64> {
        match *self {
            Region::Ball(r) | Region::Cylinder(r) => Some(r),
            Region::All => None,
        }
    }

    /// Strict containment test for a planar point.
    pub fn contains(&self, p: Vec2) -> bool {
        match *self {
            Region::Ball(r) => p.norm_sq() < r * r,
            Region::Cylinder(r) => p.x.abs() < r,
            Region::All => true,
        }
    }

    /// Parameter interval `[s0, s1] ⊂ [0, 1]` of the segment `a + s (b - a)`
    /// inside the region, if any.
    pub fn clip_segment(&self, a: Vec2, b: Vec2) -> Option<(f64, f64)> {
        let d = b - a;
        let (lo, hi) = match *self {
            Region::All => (0.0, 1.0),
            Region::Ball(r) => {
                let qa = d.norm_sq();
                if qa == 0.0 {
                    return if a.norm_sq() < r * r { Some((0.0, 1.0)) } else { None };
                }
                let qb = a.dot(d);
                let qc = a.norm_sq() - r * r;
                let disc = qb * qb - qa * qc;
                if disc <= 0.0 {
                    return None;
                }
                let sq = disc.sqrt();
                // numerically stable pair of roots
                let q = -(qb + qb.signum() * sq);
                let (mut s1, mut s2) = if q == 0.0 {
                    (-sq / qa, sq / qa)
                } else {
                    (q / qa, qc / q)
                };
                if s1 > s2 {
                    core::mem::swap(&mut s1, &mut s2);
                }
                (s1.max(0.0), s2.min(1.0))
            }
            Region::Cylinder(r) => {
                if d.x == 0.0 {
                    return if a.x.abs() < r { Some((0.0, 1.0)) } else { None };
                }
                let mut s1 = (-r - a.x) / d.x;
                let mut s2 = (r - a.x) / d.x;
                if s1 > s2 {
                    core::mem::swap(&mut s1, &mut s2);
                }
                (s1.max(0.0), s2.min(1.0))
            }
        };
        if hi > lo {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Length of the segment `[a, b]` inside the region.
    pub fn segment_length(&self, a: Vec2, b: Vec2) -> f64 {
        match self.clip_segment(a, b) {
            Some((s0, s1)) if (s0, s1) == (0.0, 1.0) => a.dist(b),
            Some((s0, s1)) => (s1 - s0) * a.dist(b),
            None => 0.0,
        }
    }

    /// Length of the circular arc `center + radius (cos t, sin t)`,
    /// `t ∈ [t0, t1]` (`t0 <= t1`), inside the region.
    pub fn arc_length(&self, center: Vec2, radius: f64, t0: f64, t1: f64) -> f64 {
        debug_assert!(t1 >= t0);
        let inside = match *self {
            Region::All => return radius * (t1 - t0),
            Region::Ball(r) => {
                let c = center.norm();
                if c == 0.0 {
                    return if radius < r { radius * (t1 - t0) } else { 0.0 };
                }
                // |center + radius u(t)| < r  <=>  cos(t - phi) < k
                let k = (r * r - radius * radius - c * c) / (2.0 * radius * c);
                if k <= -1.0 {
                    return 0.0;
                }
                if k >= 1.0 {
                    return radius * (t1 - t0);
                }
                let phi = center.angle();
                let a = k.acos();
                periodic_overlap(t0, t1, phi + a, phi + TAU - a)
            }
            Region::Cylinder(r) => {
                // cos t in (lo, hi)
                let lo = (-r - center.x) / radius;
                let hi = (r - center.x) / radius;
                if lo >= 1.0 || hi <= -1.0 {
                    return 0.0;
                }
                let a_hi = if hi >= 1.0 { 0.0 } else { hi.acos() };
                let a_lo = if lo <= -1.0 { PI } else { lo.acos() };
                periodic_overlap(t0, t1, a_hi, a_lo) + periodic_overlap(t0, t1, -a_lo, -a_hi)
            }
        };
        radius * inside
    }
}

/// Measure of `[t0, t1] ∩ ⋃_k (lo + 2πk, hi + 2πk)` for `hi - lo <= 2π`.
fn periodic_overlap(t0: f64, t1: f64, lo: f64, hi: f64) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    let k0 = ((t0 - hi) / TAU).floor() as i64;
    let k1 = ((t1 - lo) / TAU).ceil() as i64;
    let mut total = 0.0;
    for k in k0..=k1 {
        let shift = k as f64 * TAU;
        let a = (lo + shift).max(t0);
        let b = (hi + shift).min(t1);
        if b > a {
            total += b - a;
        }
    }
    total
}

/// Signed area enclosed by a closed polygon (counter-clockwise positive).
pub fn polygon_area(points: &[Vec2]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += points[i].cross(points[(i + 1) % n]);
    }
    0.5 * acc
}

/// Distance from `p` to the segment `[a, b]`.
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let d = b - a;
    let len2 = d.norm_sq();
    if len2 == 0.0 {
        return p.dist(a);
    }
    let s = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a + d * s)
}

/// Proper or touching intersection test for segments `[a, b]` and `[c, d]`.
pub fn segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    let o1 = (b - a).cross(c - a);
    let o2 = (b - a).cross(d - a);
    let o3 = (d - c).cross(a - c);
    let o4 = (d - c).cross(b - c);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))
        && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))
    {
        return true;
    }
    let on = |p: Vec2, q: Vec2, r: Vec2, o: f64| {
        o == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on(a, b, c, o1) || on(a, b, d, o2) || on(c, d, a, o3) || on(c, d, b, o4)
}
