//! Column clusters: chamber 1 as a column set, the `(2,3)` interface as a
//! height function over the cells where chamber 1 is absent.

use alloc::vec::Vec;

use super::columns::ColumnSet;
use crate::analytic::LensCluster;
use crate::error::{Error, Result};
use crate::geom::Region;
use crate::math::unit_ball_measure;
#[allow(unused_imports)]
use crate::math::Real;
use crate::weights::{young_beta, WeightSystem};

/// Chamber 2 lies above the interface graph, chamber 3 below.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnCluster {
    set1: ColumnSet,
    heights: Vec<Option<f64>>,
    a_strip: f64,
}

impl ColumnCluster {
    /// Validates that heights are given exactly on the cells with empty
    /// chamber-1 slice and that `|t| <= a_strip`.
    pub fn new(set1: ColumnSet, heights: Vec<Option<f64>>, a_strip: f64) -> Result<Self> {
        if heights.len() != set1.len() {
            return Err(Error::InvalidInput("one interface entry per cell is required"));
        }
        if !(a_strip > 0.0) {
            return Err(Error::InvalidInput("strip half-width must be positive"));
        }
        for (i, t) in heights.iter().enumerate() {
            match (set1.cell(i).is_empty(), t) {
                (true, Some(t)) if t.abs() <= a_strip => {}
                (true, Some(_)) => return Err(Error::InvalidInput("interface leaves the strip")),
                (true, None) => return Err(Error::InvalidInput("interface height missing under an empty slice")),
                (false, Some(_)) => return Err(Error::InvalidInput("interface height given under chamber 1")),
                (false, None) => {}
            }
        }
        if set1.cells().iter().flatten().any(|iv| iv.0 < -a_strip || iv.1 > a_strip) {
            return Err(Error::InvalidInput("chamber 1 leaves the strip"));
        }
        Ok(ColumnCluster { set1, heights, a_strip })
    }

    /// Flat interface `t = 0` on every empty cell.
    pub fn with_flat_interface(set1: ColumnSet, a_strip: f64) -> Result<Self> {
        let heights = set1.cells().iter().map(|c| c.is_empty().then_some(0.0)).collect();
        ColumnCluster::new(set1, heights, a_strip)
    }

    pub fn set1(&self) -> &ColumnSet {
        &self.set1
    }
    pub fn heights(&self) -> &[Option<f64>] {
        &self.heights
    }
    pub fn a_strip(&self) -> f64 {
        self.a_strip
    }

    /// Replaces the interface heights by `f(centre)` on the empty cells.
    pub fn with_heights(&self, f: impl Fn([f64; 2]) -> f64) -> Result<ColumnCluster> {
        let heights = (0..self.set1.len())
            .map(|i| self.heights[i].map(|_| f(self.set1.center(i))))
            .collect();
        ColumnCluster::new(self.set1.clone(), heights, self.a_strip)
    }

    /// Discrete gradient of the interface at cell `i`: forward differences,
    /// falling back to backward ones where the forward neighbour has no
    /// interface, and zero where neither exists.
    pub fn interface_gradient(&self, i: usize) -> [f64; 2] {
        let Some(t) = self.heights[i] else { return [0.0, 0.0] };
        let h = self.set1.h_base();
        let [nx, _] = self.set1.shape();
        let mut g = [0.0; 2];
        for (axis, fwd) in self.set1.forward_neighbours(i).into_iter().enumerate() {
            if axis == 1 && self.set1.dim() == 1 {
                break;
            }
            let stride = if axis == 0 { 1 } else { nx };
            let coord = if axis == 0 { i % nx } else { i / nx };
            let back = (coord > 0).then(|| i - stride);
            g[axis] = match (fwd.and_then(|j| self.heights[j]), back.and_then(|j| self.heights[j])) {
                (Some(tf), _) => (tf - t) / h,
                (None, Some(tb)) => (t - tb) / h,
                (None, None) => 0.0,
            };
        }
        g
    }
}

/// Cells whose chamber-1 slice is empty.
pub fn projection_zero_set(x: &ColumnCluster) -> Vec<usize> {
    (0..x.set1.len()).filter(|&i| x.set1.cell(i).is_empty()).collect()
}

/// Base measure of the empty-slice cells inside `region`.
pub fn projection_measure(x: &ColumnCluster, region: &Region) -> f64 {
    let n = projection_zero_set(x).into_iter().filter(|&i| x.set1.cell_in(i, region)).count();
    n as f64 * x.set1.cell_area()
}

/// Graph area `Σ sqrt(1 + |∇t|²) · cell area` of the interface over the
/// empty cells inside `region`.
pub fn interface_measure(x: &ColumnCluster, region: &Region) -> f64 {
    let area = x.set1.cell_area();
    let mut total = 0.0;
    for i in 0..x.set1.len() {
        if x.heights[i].is_some() && x.set1.cell_in(i, region) {
            let [gx, gy] = x.interface_gradient(i);
            total += (1.0 + gx * gx + gy * gy).sqrt();
        }
    }
    total * area
}

/// Symmetrizes chamber 1 and flattens the interface to `t = 0`.
pub fn symmetrize_cluster(x: &ColumnCluster) -> ColumnCluster {
    let set1 = x.set1.steiner_symmetral();
    let heights = set1.cells().iter().map(|c| c.is_empty().then_some(0.0)).collect();
    ColumnCluster { set1, heights, a_strip: x.a_strip }
}

/// `P_c(X; C_rho)` for a column cluster: chamber 1's column perimeter
/// split into its upper `(1,2)` and lower `(1,3)` parts, plus the
/// interface graph area.
pub fn cluster_energy(x: &ColumnCluster, w: &WeightSystem, rho: f64) -> f64 {
    let region = Region::Cylinder(rho);
    let (upper, lower) = split_perimeter(&x.set1, &region);
    w.c12() * upper + w.c13() * lower + w.c23() * interface_measure(x, &region)
}

/// Perimeter of chamber 1 attributed to its `(1,2)` part (facets above
/// `{x_n = 0}`) and `(1,3)` part (below). Horizontal faces go by their
/// sign of height (faces at height 0 count as lower for a bottom face and
/// upper for a top face); vertical facets are split at height 0.
fn split_perimeter(e: &ColumnSet, region: &Region) -> (f64, f64) {
    let clip = |list: &[(f64, f64)], upper: bool| -> Vec<(f64, f64)> {
        list.iter()
            .filter_map(|&(a, b)| {
                let (a, b) = if upper { (a.max(0.0), b) } else { (a, b.min(0.0)) };
                (a < b).then_some((a, b))
            })
            .collect()
    };
    let area = e.cell_area();
    let facet = e.facet_measure();
    let mut up = 0.0;
    let mut down = 0.0;
    for i in 0..e.len() {
        if !e.cell_in(i, region) {
            continue;
        }
        let c = e.cell(i);
        for &(a, b) in c {
            if b > 0.0 { up += area } else { down += area }
            if a >= 0.0 { up += area } else { down += area }
        }
        let (cu, cd) = (clip(c, true), clip(c, false));
        let outer = e.outer_facets(i) as f64 * facet;
        up += outer * cu.iter().map(|iv| iv.1 - iv.0).sum::<f64>();
        down += outer * cd.iter().map(|iv| iv.1 - iv.0).sum::<f64>();
        for j in e.forward_neighbours(i).into_iter().flatten() {
            if e.cell_in(j, region) {
                let d = e.cell(j);
                up += super::columns::symmetric_difference_length(&cu, &clip(d, true)) * facet;
                down += super::columns::symmetric_difference_length(&cd, &clip(d, false)) * facet;
            }
        }
    }
    (up, down)
}

/// Both sides of the symmetric-cluster energy identity in `C_rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnergyIdentity {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// `lhs = P_c(X; C_rho)`; `rhs = 2 c13 F_β(X(1) ∩ H) + c23 ω_d rho^d` with
/// `β = c23 / (2 c13)`. For symmetric clusters the gap is exactly `c23`
/// times the difference between the cell-quantized and the exact base
/// measure of the cylinder.
pub fn symmetric_energy_identity(x: &ColumnCluster, w: &WeightSystem, rho: f64) -> Result<EnergyIdentity> {
    let beta = young_beta(w)?;
    if symmetrize_cluster(x) != *x {
        return Err(Error::NotSymmetric);
    }
    let region = Region::Cylinder(rho);
    let lhs = cluster_energy(x, w, rho);
    let d = x.set1.dim();
    let upper = x.set1.upper_half();
    let rhs = 2.0 * w.c13() * upper.free_energy_in(beta, &region)? + w.c23() * unit_ball_measure(d) * rho.powi(d as i32);
    Ok(EnergyIdentity { lhs, rhs, gap: lhs - rhs })
}

/// Column cluster of a lens (`n = 2` or `3`) on a cell grid of spacing
/// `h_base` covering `[-half_width, half_width]^d`; the strip half-width is
/// ten times chamber 1's vertical extent.
pub fn lens_columns(lens: &LensCluster, h_base: f64, half_width: f64) -> Result<ColumnCluster> {
    let d = lens.n - 1;
    if d != 1 && d != 2 {
        return Err(Error::Domain("column clusters need n = 2 or 3"));
    }
    if !(h_base > 0.0) || !(half_width > lens.r_disk) {
        return Err(Error::Domain("grid must be positive and cover the lens"));
    }
    let n = (2.0 * half_width / h_base).round() as usize;
    let shape = if d == 1 { [n, 1] } else { [n, n] };
    let origin = [-0.5 * n as f64 * h_base, if d == 1 { 0.0 } else { -0.5 * n as f64 * h_base }];
    let height = |cap: &crate::analytic::SphericalCapSpec, s: f64| {
        (cap.radius * cap.radius - s * s).sqrt() - cap.radius * cap.gamma.cos()
    };
    let probe = ColumnSet::new(d, h_base, origin, shape, alloc::vec![Vec::new(); shape[0] * shape[1]])?;
    let mut cells = Vec::with_capacity(probe.len());
    for i in 0..probe.len() {
        let s = probe.center_norm(i);
        if s < lens.r_disk {
            let (lo, hi) = (-height(&lens.cap_down, s), height(&lens.cap_up, s));
            cells.push(if lo < hi { alloc::vec![(lo, hi)] } else { Vec::new() });
        } else {
            cells.push(Vec::new());
        }
    }
    let extent = lens.cap_up.apex_height().abs().max(lens.cap_down.apex_height().abs());
    let set1 = ColumnSet::new(d, h_base, origin, shape, cells)?;
    ColumnCluster::with_flat_interface(set1, 10.0 * extent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::build_lens;

    fn lens1d(h: f64) -> (LensCluster, ColumnCluster) {
        let lens = build_lens(&WeightSystem::equal(), 2, 1.0).unwrap();
        let x = lens_columns(&lens, h, 3.0).unwrap();
        (lens, x)
    }

    #[test]
    fn lens_slices() {
        let (lens, x) = lens1d(1e-2);
        let l = x.set1().slice_length();
        let imax = (0..l.values.len()).max_by(|&a, &b| l.values[a].partial_cmp(&l.values[b]).unwrap()).unwrap();
        assert!(x.set1().center_norm(imax) < 1e-2);
        for i in 0..l.values.len() {
            assert_eq!(l.values[i] > 0.0, x.set1().center_norm(i) < lens.r_disk);
        }
        assert!((x.set1().volume() - 1.0).abs() < 1e-3);
        let zero = projection_measure(&x, &Region::Cylinder(2.0));
        assert!((zero - 2.0 * (2.0 - lens.r_disk)).abs() < 2.0 * 1e-2);
    }

    #[test]
    fn symmetric_lens_is_fixed_and_identity_closes() {
        let (_, x) = lens1d(1e-3);
        assert_eq!(symmetrize_cluster(&x), x);
        let w = WeightSystem::equal();
        let id = symmetric_energy_identity(&x, &w, 2.0).unwrap();
        assert!(id.gap.abs() < 5e-3, "{id:?}");
        let id4 = symmetric_energy_identity(&x, &w, 2.5).unwrap();
        let rhs_jump = id4.rhs - id.rhs;
        // only the closed-form term and the cells added between the radii move
        assert!((rhs_jump - 2.0 * 0.5).abs() < 1e-9);
    }

    #[test]
    fn tilted_interface() {
        let (_, x) = lens1d(1e-2);
        let tilted = x.with_heights(|c| 0.3 * c[0]).unwrap();
        let region = Region::Cylinder(2.0);
        let base = projection_measure(&tilted, &region);
        let m = interface_measure(&tilted, &region);
        assert!((m - 1.09f64.sqrt() * base).abs() < 1e-10);
        assert!(m > base);
        let s = symmetrize_cluster(&tilted);
        assert!(s.heights().iter().flatten().all(|&t| t == 0.0));
        assert_eq!(interface_measure(&x, &region), base);
        assert_eq!(symmetric_energy_identity(&tilted, &WeightSystem::equal(), 2.0), Err(Error::NotSymmetric));
    }

    #[test]
    fn empty_chamber_gap_is_zero() {
        let set1 = ColumnSet::new_1d(0.5, -4.0, alloc::vec![Vec::new(); 16]).unwrap();
        let x = ColumnCluster::with_flat_interface(set1, 1.0).unwrap();
        let id = symmetric_energy_identity(&x, &WeightSystem::new(1.0, 1.0, 1.5).unwrap(), 2.0).unwrap();
        assert_eq!(id.gap, 0.0);
        assert_eq!(id.lhs, 1.5 * 4.0);
    }

    #[test]
    fn asymmetric_weights_rejected() {
        let (_, x) = lens1d(1e-2);
        let w = WeightSystem::new(1.0, 1.2, 1.0).unwrap();
        assert!(matches!(symmetric_energy_identity(&x, &w, 2.0), Err(Error::AsymmetricWeights { .. })));
    }
}
