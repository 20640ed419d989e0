//! Spherical caps in `R^n`.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::math::unit_ball_measure;
#[allow(unused_imports)]
use crate::math::Real;
use crate::quad;

const QUAD_TOL: f64 = 1e-12;

/// Cap of a sphere of radius `radius` cut by a horizontal hyperplane.
///
/// `gamma` is the polar half-angle seen from the centre, so the contact
/// sphere in the cutting plane has radius `radius * sin(gamma)`. With
/// `apex_sign = +1` the cap lies above the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SphericalCapSpec {
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(rename = "R"))]
    pub radius: f64,
    pub gamma: f64,
    pub apex_sign: i8,
}

impl SphericalCapSpec {
    pub fn base_radius(&self) -> f64 {
        self.radius * self.gamma.sin()
    }

    /// Height of the sphere centre above the cutting plane.
    pub fn center_height(&self) -> f64 {
        -(self.apex_sign as f64) * self.radius * self.gamma.cos()
    }

    /// Height of the apex above (or below) the plane.
    pub fn apex_height(&self) -> f64 {
        (self.apex_sign as f64) * self.radius * (1.0 - self.gamma.cos())
    }

    pub fn volume(&self) -> f64 {
        cap_volume(self.n, self.radius, self.gamma).expect("valid cap")
    }

    pub fn area(&self) -> f64 {
        cap_area(self.n, self.radius, self.gamma).expect("valid cap")
    }

    /// Largest distance from the axis reached by the cap.
    pub fn lateral_extent(&self) -> f64 {
        if self.gamma > PI / 2.0 {
            self.radius
        } else {
            self.base_radius()
        }
    }

    /// Largest distance from the centre of the contact sphere.
    pub fn radial_extent(&self) -> f64 {
        self.base_radius().max(self.radius * (1.0 - self.gamma.cos()))
    }
}

fn check(n: usize, radius: f64, gamma: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain("dimension must be at least 2"));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Domain("cap radius must be positive"));
    }
    if !(gamma > 0.0 && gamma <= PI) {
        return Err(Error::Domain("cap angle must lie in (0, pi]"));
    }
    Ok(())
}

/// `ω_{n-1} R^n ∫_0^γ sin^n φ dφ`, by adaptive quadrature.
pub fn cap_volume(n: usize, radius: f64, gamma: f64) -> Result<f64> {
    check(n, radius, gamma)?;
    let e = n as i32;
    let integral = quad::integrate(|phi| phi.sin().powi(e), 0.0, gamma, QUAD_TOL);
    Ok(unit_ball_measure(n - 1) * radius.powi(e) * integral)
}

/// `(n-1) ω_{n-1} R^{n-1} ∫_0^γ sin^{n-2} φ dφ`, by adaptive quadrature.
pub fn cap_area(n: usize, radius: f64, gamma: f64) -> Result<f64> {
    check(n, radius, gamma)?;
    let e = n as i32 - 2;
    let integral = quad::integrate(|phi| phi.sin().powi(e), 0.0, gamma, QUAD_TOL);
    Ok((n - 1) as f64 * unit_ball_measure(n - 1) * radius.powi(n as i32 - 1) * integral)
}

/// Closed-form cap volume for `n = 2, 3`.
pub fn cap_volume_closed_form(n: usize, radius: f64, gamma: f64) -> Option<f64> {
    let c = gamma.cos();
    match n {
        2 => Some(radius * radius * (gamma - gamma.sin() * c)),
        3 => Some(PI * radius.powi(3) * (2.0 + c) * (1.0 - c) * (1.0 - c) / 3.0),
        _ => None,
    }
}

/// Closed-form cap area for `n = 2, 3`.
pub fn cap_area_closed_form(n: usize, radius: f64, gamma: f64) -> Option<f64> {
    match n {
        2 => Some(2.0 * gamma * radius),
        3 => Some(2.0 * PI * radius * radius * (1.0 - gamma.cos())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volume_examples() {
        assert!((cap_volume(2, 1.0, PI / 2.0).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((cap_volume(3, 1.0, PI / 2.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!((cap_volume(2, 0.90227, PI / 3.0).unwrap() - 0.5).abs() < 1e-5);
    }

    #[test]
    fn area_examples() {
        assert!((cap_area(3, 1.0, PI).unwrap() - 4.0 * PI).abs() < 1e-11);
        assert!((cap_area(2, 1.0, PI / 3.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-12);
        assert!((cap_area(3, 2.0, PI / 3.0).unwrap() - 4.0 * PI).abs() < 1e-11);
    }

    #[test]
    fn full_ball_in_higher_dimensions() {
        for n in 2..8 {
            let v = cap_volume(n, 1.0, PI).unwrap();
            assert!((v - unit_ball_measure(n)).abs() < 1e-11, "n = {n}");
            // sphere area = n ω_n
            let a = cap_area(n, 1.0, PI).unwrap();
            assert!((a - n as f64 * unit_ball_measure(n)).abs() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(cap_volume(1, 1.0, 1.0).is_err());
        assert!(cap_volume(2, 0.0, 1.0).is_err());
        assert!(cap_area(2, 1.0, 0.0).is_err());
        assert!(cap_area(2, 1.0, 4.0).is_err());
    }

    #[test]
    fn geometry_helpers() {
        let up = SphericalCapSpec { n: 2, radius: 2.0, gamma: PI / 3.0, apex_sign: 1 };
        assert!((up.center_height() + 1.0).abs() < 1e-15);
        assert!((up.apex_height() - 1.0).abs() < 1e-15);
        assert!((up.base_radius() - 3f64.sqrt()).abs() < 1e-15);
        let big = SphericalCapSpec { n: 2, radius: 1.0, gamma: 2.0, apex_sign: -1 };
        assert_eq!(big.lateral_extent(), 1.0);
        assert!(big.center_height() < 0.0 && big.apex_height() < 0.0);
    }
}
