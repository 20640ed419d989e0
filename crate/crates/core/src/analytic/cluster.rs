//! Interface measures of analytic clusters inside balls and cylinders.

use alloc::vec::Vec;

use super::bubble::DoubleBubble2D;
use super::drop::CapDrop;
use super::lens::LensCluster;
use crate::energy::EnergyReport;
use crate::error::{Error, Result};
use crate::geom::Region;
use crate::math::unit_ball_measure;
#[allow(unused_imports)]
use crate::math::Real;
use crate::weights::WeightSystem;

/// An exactly described cluster whose interface measures can be evaluated
/// in closed form.
pub trait AnalyticCluster {
    fn dim(&self) -> usize;
    fn weights(&self) -> &WeightSystem;
    /// `H^{n-1}` of the `(1,2)`, `(1,3)`, `(2,3)` interfaces inside `region`.
    fn pair_measures(&self, region: &Region) -> Result<[f64; 3]>;
}

/// Weighted interface energy `P_c(X; region)` with its per-pair breakdown.
pub fn energy_in_region<C: AnalyticCluster + ?Sized>(obj: &C, region: &Region) -> Result<EnergyReport> {
    let measures = obj.pair_measures(region)?;
    Ok(EnergyReport::new(measures, obj.weights(), *region))
}

fn flat_measure(n: usize, rho: f64, hole: f64) -> f64 {
    let p = n as i32 - 1;
    unit_ball_measure(n - 1) * (rho.powi(p) - hole.powi(p))
}

impl AnalyticCluster for LensCluster {
    fn dim(&self) -> usize {
        self.n
    }
    fn weights(&self) -> &WeightSystem {
        &self.weights
    }
    fn pair_measures(&self, region: &Region) -> Result<[f64; 3]> {
        let (rho, required) = match *region {
            Region::Ball(r) => (r, self.radial_extent()),
            Region::Cylinder(r) => (r, self.lateral_extent()),
            Region::All => return Err(Error::Domain("the flat interface has infinite measure")),
        };
        if !(rho > required) {
            return Err(Error::RegionTooSmall { radius: rho, required });
        }
        // both regions cut {x_n = 0} in the same (n-1)-ball of radius rho
        Ok([self.cap_up.area(), self.cap_down.area(), flat_measure(self.n, rho, self.r_disk)])
    }
}

impl AnalyticCluster for DoubleBubble2D {
    fn dim(&self) -> usize {
        2
    }
    fn weights(&self) -> &WeightSystem {
        &self.weights
    }
    fn pair_measures(&self, region: &Region) -> Result<[f64; 3]> {
        let required = match *region {
            Region::Ball(_) => self.chamber1_radial_extent(),
            Region::Cylinder(_) => self.chamber1_lateral_extent(),
            Region::All => 0.0,
        };
        if let Some(rho) = region.radius() {
            if !(rho > required) {
                return Err(Error::RegionTooSmall { radius: rho, required });
            }
        }
        Ok(core::array::from_fn(|i| self.chord_arc(i).length_in(region)))
    }
}

/// The pair of complementary halfspaces `{x_n > 0}`, `{x_n < 0}` with no
/// bounded chamber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatPair {
    pub n: usize,
    pub weights: WeightSystem,
}

impl AnalyticCluster for FlatPair {
    fn dim(&self) -> usize {
        self.n
    }
    fn weights(&self) -> &WeightSystem {
        &self.weights
    }
    fn pair_measures(&self, region: &Region) -> Result<[f64; 3]> {
        let rho = region.radius().ok_or(Error::Domain("the flat interface has infinite measure"))?;
        Ok([0.0, 0.0, flat_measure(self.n, rho, 0.0)])
    }
}

/// The symmetric lens obtained by reflecting a drop, with unit `c13`.
pub struct DropCluster(pub LensCluster);

impl DropCluster {
    pub fn new(drop: &CapDrop, c13: f64) -> Result<Self> {
        Ok(DropCluster(drop.to_lens(c13)?))
    }
}

impl AnalyticCluster for DropCluster {
    fn dim(&self) -> usize {
        self.0.n
    }
    fn weights(&self) -> &WeightSystem {
        &self.0.weights
    }
    fn pair_measures(&self, region: &Region) -> Result<[f64; 3]> {
        self.0.pair_measures(region)
    }
}

/// Extrapolated `lim P_c(X; B_r) / r^{n-1}` with the residual of the last
/// two estimates.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityEstimate {
    pub value: f64,
    pub residual: f64,
    /// Raw ratios `P_c(X; B_r) / r^{n-1}` along the schedule.
    pub ratios: Vec<f64>,
}

/// Richardson extrapolation of the energy density over balls, eliminating
/// the `r^{1-n}` term contributed by the bounded chamber.
pub fn density_at_infinity<C: AnalyticCluster + ?Sized>(
    obj: &C,
    rho_schedule: &[f64],
) -> Result<DensityEstimate> {
    if rho_schedule.is_empty() {
        return Err(Error::Domain("empty radius schedule"));
    }
    if rho_schedule.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("radius schedule must be strictly increasing"));
    }
    let p = obj.dim() as i32 - 1;
    let mut ratios = Vec::with_capacity(rho_schedule.len());
    let mut scaled = Vec::with_capacity(rho_schedule.len());
    for &r in rho_schedule {
        let e = energy_in_region(obj, &Region::Ball(r))?.total;
        ratios.push(e / r.powi(p));
        scaled.push(r.powi(p));
    }
    let last = *ratios.last().unwrap();
    if ratios.iter().all(|&x| x == last) {
        return Ok(DensityEstimate { value: last, residual: 0.0, ratios });
    }
    if ratios.len() == 1 {
        return Ok(DensityEstimate { value: last, residual: f64::INFINITY, ratios });
    }
    // f(r) = L + K r^{-p}  =>  L = (f2 r2^p - f1 r1^p) / (r2^p - r1^p)
    let estimates: Vec<f64> = (1..ratios.len())
        .map(|i| {
            (ratios[i] * scaled[i] - ratios[i - 1] * scaled[i - 1]) / (scaled[i] - scaled[i - 1])
        })
        .collect();
    let value = *estimates.last().unwrap();
    let residual = if estimates.len() >= 2 {
        (value - estimates[estimates.len() - 2]).abs()
    } else {
        (value - last).abs()
    };
    Ok(DensityEstimate { value, residual, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{build_double_bubble, build_lens, lens_boundary_energy};
    use core::f64::consts::PI;

    #[test]
    fn planar_lens_in_cylinder() {
        let lens = build_lens(&WeightSystem::equal(), 2, 1.0).unwrap();
        let e = energy_in_region(&lens, &Region::Cylinder(2.0)).unwrap();
        let oracle = lens_boundary_energy(&lens) + 2.0 * (2.0 - lens.r_disk);
        assert!((e.total - oracle).abs() < 1e-12);
        assert!((e.total - 6.21664).abs() < 1e-5);
        let b = energy_in_region(&lens, &Region::Ball(2.0)).unwrap();
        assert!((b.total - e.total).abs() < 1e-14);
    }

    #[test]
    fn scaled_weights_double_exactly() {
        let w = WeightSystem::new(1.0, 1.1, 1.7).unwrap();
        let a = build_lens(&w, 3, 1.0).unwrap();
        let b = build_lens(&w.scaled(2.0).unwrap(), 3, 1.0).unwrap();
        let ea = energy_in_region(&a, &Region::Cylinder(3.0)).unwrap().total;
        let eb = energy_in_region(&b, &Region::Cylinder(3.0)).unwrap().total;
        assert_eq!(2.0 * ea, eb);
    }

    #[test]
    fn region_too_small() {
        let lens = build_lens(&WeightSystem::equal(), 2, 1.0).unwrap();
        assert!(matches!(
            energy_in_region(&lens, &Region::Cylinder(0.5)),
            Err(Error::RegionTooSmall { .. })
        ));
        assert!(energy_in_region(&lens, &Region::All).is_err());
    }

    #[test]
    fn density_of_lenses() {
        let sched = [4.0, 8.0, 16.0, 32.0];
        let l2 = build_lens(&WeightSystem::new(1.0, 1.0, 1.5).unwrap(), 2, 1.0).unwrap();
        let d = density_at_infinity(&l2, &sched).unwrap();
        assert!((d.value - 2.0 * 1.5).abs() < 1e-9);
        let l3 = build_lens(&WeightSystem::equal(), 3, 1.0).unwrap();
        let d = density_at_infinity(&l3, &sched).unwrap();
        assert!((d.value - PI).abs() < 1e-9);
        let flat = FlatPair { n: 4, weights: WeightSystem::equal() };
        let d = density_at_infinity(&flat, &sched).unwrap();
        assert_eq!(d.value, unit_ball_measure(3));
        assert!(density_at_infinity(&l3, &[3.0, 2.0]).is_err());
    }

    #[test]
    fn bubble_energy_everywhere_is_total_perimeter() {
        let b = build_double_bubble(&WeightSystem::equal(), 1.0).unwrap();
        let all = energy_in_region(&b, &Region::All).unwrap();
        let big = energy_in_region(&b, &Region::Ball(50.0)).unwrap();
        assert!((all.total - big.total).abs() < 1e-12, "{:?} {:?}", all, big);
        // symmetric bubble with m = 1: two arcs of tangent-chord angle π/3
        // and a straight wall of length 2r
        let r = b.r_junction;
        let arc = 2.0 * r * (2.0 * PI / 3.0) / (2.0 * PI / 3.0).sin();
        assert!((all.total - (2.0 * arc + 2.0 * r)).abs() < 1e-12);
    }
}
