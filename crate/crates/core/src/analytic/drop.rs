//! Liquid drops resting on the hyperplane `{x_n = 0}`.

use super::cap::{cap_area, cap_volume, SphericalCapSpec};
use super::lens::LensCluster;
use crate::error::{Error, Result};
use crate::math::unit_ball_measure;
#[allow(unused_imports)]
use crate::math::Real;
use crate::weights::WeightSystem;

/// Spherical cap `B ∩ {x_n > 0}` whose outward normal along the contact
/// sphere has vertical component `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CapDrop {
    pub n: usize,
    pub beta: f64,
    pub volume: f64,
    #[cfg_attr(feature = "serde", serde(rename = "R"))]
    pub radius: f64,
    pub gamma: f64,
    pub contact_radius: f64,
    pub contact_cosine: f64,
}

/// Sets resting in the closed upper halfspace with a free energy
/// `P(E; H) - β P(E; ∂H)`.
pub trait HalfspaceSet {
    /// Relative perimeter in the open halfspace.
    fn perimeter_in_halfspace(&self) -> Result<f64>;
    /// Measure of the trace on the boundary hyperplane.
    fn contact_measure(&self) -> Result<f64>;
}

/// `P(E; H) - beta P(E; ∂H)`.
pub fn free_energy<S: HalfspaceSet + ?Sized>(set: &S, beta: f64) -> Result<f64> {
    Ok(set.perimeter_in_halfspace()? - beta * set.contact_measure()?)
}

/// Minimizer of the free energy at fixed volume: the cap with opening
/// `acos(beta)`, scaled to the requested volume.
pub fn liquid_drop_min(beta: f64, volume: f64, n: usize) -> Result<CapDrop> {
    if !(beta > -1.0 && beta < 1.0) {
        return Err(Error::BetaOutOfRange(beta));
    }
    if !(volume > 0.0) || !volume.is_finite() {
        return Err(Error::Domain("volume must be positive"));
    }
    let gamma = beta.acos();
    let unit = cap_volume(n, 1.0, gamma)?;
    let radius = (volume / unit).powf(1.0 / n as f64);
    Ok(CapDrop {
        n,
        beta,
        volume,
        radius,
        gamma,
        contact_radius: radius * gamma.sin(),
        contact_cosine: gamma.cos(),
    })
}

impl CapDrop {
    /// Upper half of a lens as a drop (needs `c12 = c13` for the contact
    /// law to hold with `beta = young_beta`).
    pub fn upper_half_of(lens: &LensCluster) -> CapDrop {
        let cap = lens.cap_up;
        CapDrop {
            n: lens.n,
            beta: cap.gamma.cos(),
            volume: cap.volume(),
            radius: cap.radius,
            gamma: cap.gamma,
            contact_radius: cap.base_radius(),
            contact_cosine: cap.gamma.cos(),
        }
    }

    pub fn cap(&self) -> SphericalCapSpec {
        SphericalCapSpec { n: self.n, radius: self.radius, gamma: self.gamma, apex_sign: 1 }
    }

    /// Reflects the drop across the plane into a symmetric lens with
    /// weights `(c13, c13, 2 beta c13)`; needs `beta > 0`.
    pub fn to_lens(&self, c13: f64) -> Result<LensCluster> {
        let w = WeightSystem::new(c13, c13, 2.0 * self.beta * c13)?;
        super::lens::build_lens(&w, self.n, 2.0 * self.volume)
    }
}

impl HalfspaceSet for CapDrop {
    fn perimeter_in_halfspace(&self) -> Result<f64> {
        cap_area(self.n, self.radius, self.gamma)
    }
    fn contact_measure(&self) -> Result<f64> {
        Ok(unit_ball_measure(self.n - 1) * self.contact_radius.powi(self.n as i32 - 1))
    }
}
