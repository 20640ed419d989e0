//! The standard weighted lens cluster.

use core::f64::consts::PI;

use super::arc::ChordArc;
use super::cap::{cap_volume, SphericalCapSpec};
use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::math::Real;
use crate::weights::{solve_junction_angles, AngleTriple, WeightSystem};

/// Chamber 1 is bounded by `cap_up` (the `(1,2)` interface, in `{x_n > 0}`)
/// and `cap_down` (the `(1,3)` interface, in `{x_n < 0}`); the `(2,3)`
/// interface is the hyperplane `{x_n = 0}` minus the closed disk of radius
/// `r_disk`. Chamber 2 lies above the plane, chamber 3 below.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LensCluster {
    pub n: usize,
    pub weights: WeightSystem,
    pub angles: AngleTriple,
    pub r_disk: f64,
    pub cap_up: SphericalCapSpec,
    pub cap_down: SphericalCapSpec,
    pub volume: f64,
}

/// Builds the lens with `|X(1)| = volume` in `R^n`.
///
/// The cap opening angles follow from the junction angles
/// (`gamma_up = π - θ2`, `gamma_down = π - θ3`); both caps share the contact
/// sphere, so the volume is homogeneous of degree `n` in `r_disk` and the
/// scale follows from one evaluation at `r_disk = 1`.
pub fn build_lens(w: &WeightSystem, n: usize, volume: f64) -> Result<LensCluster> {
    if n < 2 {
        return Err(Error::Domain("dimension must be at least 2"));
    }
    if !(volume > 0.0) || !volume.is_finite() {
        return Err(Error::Domain("volume must be positive"));
    }
    let angles = solve_junction_angles(w);
    let gamma_up = PI - angles.theta2;
    let gamma_down = PI - angles.theta3;
    let unit_up = 1.0 / gamma_up.sin();
    let unit_down = 1.0 / gamma_down.sin();
    let unit_volume = cap_volume(n, unit_up, gamma_up)? + cap_volume(n, unit_down, gamma_down)?;
    let r_disk = (volume / unit_volume).powf(1.0 / n as f64);
    Ok(LensCluster {
        n,
        weights: *w,
        angles,
        r_disk,
        cap_up: SphericalCapSpec { n, radius: r_disk * unit_up, gamma: gamma_up, apex_sign: 1 },
        cap_down: SphericalCapSpec {
            n,
            radius: r_disk * unit_down,
            gamma: gamma_down,
            apex_sign: -1,
        },
        volume,
    })
}

/// `c12 |cap_up| + c13 |cap_down|`.
pub fn lens_boundary_energy(lens: &LensCluster) -> f64 {
    lens.weights.c12() * lens.cap_up.area() + lens.weights.c13() * lens.cap_down.area()
}

impl LensCluster {
    /// Volume enclosed by the two caps.
    pub fn enclosed_volume(&self) -> f64 {
        self.cap_up.volume() + self.cap_down.volume()
    }

    /// Profile arcs of the planar lens: `(1,2)` upper arc and `(1,3)` lower arc.
    pub fn arcs(&self) -> Option<(ChordArc, ChordArc)> {
        (self.n == 2).then(|| {
            (
                ChordArc::new(self.r_disk, self.cap_up.gamma),
                ChordArc::new(self.r_disk, -self.cap_down.gamma),
            )
        })
    }

    /// Radius of the smallest centred ball containing chamber 1.
    pub fn radial_extent(&self) -> f64 {
        self.cap_up.radial_extent().max(self.cap_down.radial_extent())
    }

    /// Radius of the smallest vertical cylinder containing chamber 1.
    pub fn lateral_extent(&self) -> f64 {
        self.cap_up.lateral_extent().max(self.cap_down.lateral_extent())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::cap::{cap_area_closed_form, cap_volume_closed_form};

    #[test]
    fn equal_weights_planar_lens() {
        let lens = build_lens(&WeightSystem::equal(), 2, 1.0).unwrap();
        // independent oracle: two circular segments of angle π/3,
        // 2 R² (π/3 - √3/4) = 1
        let r_oracle = (0.5 / (PI / 3.0 - 3f64.sqrt() / 4.0)).sqrt();
        assert!((lens.cap_up.radius - r_oracle).abs() < 1e-12);
        assert!((lens.cap_up.radius - 0.90227).abs() < 1e-5);
        assert!((lens.r_disk - 0.78139).abs() < 1e-5);
        assert!((lens.cap_up.gamma - PI / 3.0).abs() < 1e-12);
        assert_eq!(lens.cap_up.radius, lens.cap_down.radius);
        assert_eq!(lens.cap_up.gamma, lens.cap_down.gamma);
        assert!((lens.enclosed_volume() - 1.0).abs() < 1e-12);
        let e = lens_boundary_energy(&lens);
        assert!((e - 2.0 * 2.0 * (PI / 3.0) * r_oracle).abs() < 1e-12);
        assert!((e - 3.77941).abs() < 1e-5);
    }

    #[test]
    fn equal_weights_spatial_lens() {
        let lens = build_lens(&WeightSystem::equal(), 3, 1.0).unwrap();
        let c = (PI / 3.0).cos();
        let r_oracle = (3.0 / (2.0 * PI * (2.0 + c) * (1.0 - c) * (1.0 - c))).powf(1.0 / 3.0);
        assert!((lens.cap_up.radius - r_oracle).abs() < 1e-12);
        assert!((lens.cap_up.radius - 0.91416).abs() < 1e-5);
        assert!((lens.r_disk - 0.79168).abs() < 1e-5);
        let e = lens_boundary_energy(&lens);
        let oracle = 2.0 * cap_area_closed_form(3, r_oracle, PI / 3.0).unwrap();
        assert!((e - oracle).abs() < 1e-10);
        assert!((e - 5.2506).abs() < 1e-3);
    }

    #[test]
    fn caps_share_contact_sphere_and_realize_angles() {
        let w = WeightSystem::new(1.0, 1.3, 1.6).unwrap();
        for n in 2..6 {
            let lens = build_lens(&w, n, 2.5).unwrap();
            assert!((lens.cap_up.base_radius() - lens.r_disk).abs() < 1e-12);
            assert!((lens.cap_down.base_radius() - lens.r_disk).abs() < 1e-12);
            assert!((lens.enclosed_volume() - 2.5).abs() < 1e-8);
            assert!(
                (lens.cap_up.gamma + lens.cap_down.gamma - lens.angles.theta1).abs() < 1e-12
            );
            if n <= 3 {
                let v = cap_volume_closed_form(n, lens.cap_up.radius, lens.cap_up.gamma).unwrap()
                    + cap_volume_closed_form(n, lens.cap_down.radius, lens.cap_down.gamma).unwrap();
                assert!((v - 2.5).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn weights_scaling_scales_energy_only() {
        let w = WeightSystem::new(1.0, 1.2, 0.9).unwrap();
        let a = build_lens(&w, 2, 1.0).unwrap();
        let b = build_lens(&w.scaled(3.0).unwrap(), 2, 1.0).unwrap();
        assert!((a.r_disk - b.r_disk).abs() < 1e-14);
        assert!((3.0 * lens_boundary_energy(&a) - lens_boundary_energy(&b)).abs() < 1e-12);
    }

    #[test]
    fn invalid_inputs() {
        assert!(build_lens(&WeightSystem::equal(), 1, 1.0).is_err());
        assert!(build_lens(&WeightSystem::equal(), 2, 0.0).is_err());
    }
}
