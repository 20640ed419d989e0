//! Sets stored as vertical intervals over a uniform base grid.

use alloc::vec::Vec;

use crate::analytic::HalfspaceSet;
use crate::error::{Error, Result};
use crate::geom::Region;
#[allow(unused_imports)]
use crate::math::Real;

/// A set `E ⊂ R^d × R`, `d ∈ {1, 2}`, constant in each base cell: over
/// cell `i` the slice `E_x̄` is a sorted list of disjoint closed intervals.
///
/// Cells are stored row-major (`x` index fastest); the cell with index
/// `(i, j)` covers `origin + h [i, i+1] × [j, j+1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnSet {
    d: usize,
    h_base: f64,
    origin: [f64; 2],
    shape: [usize; 2],
    cells: Vec<Vec<(f64, f64)>>,
}

/// Per-cell slice length `L_E`.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceFunction {
    pub cell_area: f64,
    pub values: Vec<f64>,
}

impl SliceFunction {
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_area
    }
}

fn check_intervals(list: &[(f64, f64)]) -> Result<()> {
    for &(a, b) in list {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInput("interval must satisfy a < b"));
        }
    }
    if list.windows(2).any(|w| !(w[0].1 < w[1].0)) {
        return Err(Error::InvalidInput("intervals must be sorted and disjoint"));
    }
    Ok(())
}

/// `H^1` of the symmetric difference of two interval lists.
pub fn symmetric_difference_length(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut points: Vec<f64> = Vec::with_capacity(2 * (a.len() + b.len()));
    for &(x, y) in a.iter().chain(b) {
        points.push(x);
        points.push(y);
    }
    points.sort_by(|x, y| x.partial_cmp(y).unwrap());
    points.dedup();
    let covers = |list: &[(f64, f64)], t: f64| list.iter().any(|&(x, y)| x <= t && t <= y);
    let mut total = 0.0;
    for w in points.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        if covers(a, mid) != covers(b, mid) {
            total += w[1] - w[0];
        }
    }
    total
}

fn length(list: &[(f64, f64)]) -> f64 {
    list.iter().map(|&(a, b)| b - a).sum()
}

impl ColumnSet {
    /// Builds a set over `shape[0] × shape[1]` cells (`shape[1] = 1` when `d = 1`).
    pub fn new(d: usize, h_base: f64, origin: [f64; 2], shape: [usize; 2], cells: Vec<Vec<(f64, f64)>>) -> Result<Self> {
        if d != 1 && d != 2 {
            return Err(Error::InvalidInput("base dimension must be 1 or 2"));
        }
        if !(h_base > 0.0) || !h_base.is_finite() {
            return Err(Error::InvalidInput("cell spacing must be positive"));
        }
        if d == 1 && shape[1] != 1 {
            return Err(Error::InvalidInput("one-dimensional base needs shape[1] = 1"));
        }
        if cells.len() != shape[0] * shape[1] || cells.is_empty() {
            return Err(Error::InvalidInput("cell count does not match the grid shape"));
        }
        for c in &cells {
            check_intervals(c)?;
        }
        Ok(ColumnSet { d, h_base, origin, shape, cells })
    }

    /// One-dimensional base with cells starting at `x0`.
    pub fn new_1d(h_base: f64, x0: f64, cells: Vec<Vec<(f64, f64)>>) -> Result<Self> {
        let n = cells.len();
        ColumnSet::new(1, h_base, [x0, 0.0], [n, 1], cells)
    }

    /// The same grid with no intervals.
    pub fn empty_like(&self) -> ColumnSet {
        ColumnSet { cells: alloc::vec![Vec::new(); self.cells.len()], ..self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.d
    }
    pub fn h_base(&self) -> f64 {
        self.h_base
    }
    pub fn origin(&self) -> [f64; 2] {
        self.origin
    }
    pub fn shape(&self) -> [usize; 2] {
        self.shape
    }
    pub fn cells(&self) -> &[Vec<(f64, f64)>] {
        &self.cells
    }
    pub fn cell(&self, i: usize) -> &[(f64, f64)] {
        &self.cells[i]
    }
    pub fn len(&self) -> usize {
        self.cells.len()
    }
    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|c| c.is_empty())
    }

    pub fn cell_area(&self) -> f64 {
        self.h_base.powi(self.d as i32)
    }

    /// Measure of a vertical facet between adjacent cells (`H^0 = 1` when `d = 1`).
    pub fn facet_measure(&self) -> f64 {
        self.h_base.powi(self.d as i32 - 1)
    }

    /// Base coordinates of the centre of cell `i`.
    pub fn center(&self, i: usize) -> [f64; 2] {
        let (ix, iy) = (i % self.shape[0], i / self.shape[0]);
        let cx = self.origin[0] + (ix as f64 + 0.5) * self.h_base;
        if self.d == 1 {
            [cx, 0.0]
        } else {
            [cx, self.origin[1] + (iy as f64 + 0.5) * self.h_base]
        }
    }

    /// Distance of cell `i`'s centre from the axis.
    pub fn center_norm(&self, i: usize) -> f64 {
        let [x, y] = self.center(i);
        x.hypot(y)
    }

    /// Whether cell `i` counts as inside `region` (whole cells, by centre).
    pub fn cell_in(&self, i: usize, region: &Region) -> bool {
        match region.radius() {
            Some(r) => self.center_norm(i) < r,
            None => true,
        }
    }

    /// Grid neighbours of cell `i` in the positive `x` and `y` directions.
    pub fn forward_neighbours(&self, i: usize) -> [Option<usize>; 2] {
        let (ix, iy) = (i % self.shape[0], i / self.shape[0]);
        let right = (ix + 1 < self.shape[0]).then_some(i + 1);
        let up = (self.d == 2 && iy + 1 < self.shape[1]).then_some(i + self.shape[0]);
        [right, up]
    }

    /// Number of grid-boundary facets of cell `i`.
    pub fn outer_facets(&self, i: usize) -> usize {
        let (ix, iy) = (i % self.shape[0], i / self.shape[0]);
        let mut n = (ix == 0) as usize + (ix + 1 == self.shape[0]) as usize;
        if self.d == 2 {
            n += (iy == 0) as usize + (iy + 1 == self.shape[1]) as usize;
        }
        n
    }

    pub fn volume(&self) -> f64 {
        self.slice_length().integral()
    }

    /// `L_E(x̄) = H^1(E_x̄)` cell by cell.
    pub fn slice_length(&self) -> SliceFunction {
        SliceFunction { cell_area: self.cell_area(), values: self.cells.iter().map(|c| length(c)).collect() }
    }

    /// Replaces every nonempty slice by the centred interval `[-L/2, L/2]`.
    pub fn steiner_symmetral(&self) -> ColumnSet {
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let l = length(c);
                if l > 0.0 {
                    alloc::vec![(-0.5 * l, 0.5 * l)]
                } else {
                    Vec::new()
                }
            })
            .collect();
        ColumnSet { cells, ..self.clone() }
    }

    /// Whether every slice is empty or a single interval centred at 0.
    pub fn is_symmetric(&self) -> bool {
        self.cells.iter().all(|c| c.is_empty() || (c.len() == 1 && c[0].0 == -c[0].1))
    }

    /// Perimeter of the polyhedral set in `region × R`: top and bottom
    /// faces of each interval, plus vertical facets weighted by the
    /// symmetric difference of neighbouring slices. Only cells inside the
    /// region and facets between two such cells (or on the grid boundary)
    /// are counted.
    pub fn column_perimeter(&self, region: &Region) -> f64 {
        let area = self.cell_area();
        let facet = self.facet_measure();
        let mut total = 0.0;
        for i in 0..self.cells.len() {
            if !self.cell_in(i, region) {
                continue;
            }
            let c = &self.cells[i];
            total += 2.0 * c.len() as f64 * area;
            total += self.outer_facets(i) as f64 * length(c) * facet;
            for j in self.forward_neighbours(i).into_iter().flatten() {
                if self.cell_in(j, region) {
                    total += symmetric_difference_length(c, &self.cells[j]) * facet;
                }
            }
        }
        total
    }

    /// Base measure of cells inside `region` whose slice meets `{x_n = 0}`
    /// from above, i.e. starts at height 0.
    pub fn trace_measure(&self, region: &Region) -> f64 {
        let n = (0..self.cells.len())
            .filter(|&i| self.cell_in(i, region) && self.cells[i].first().map_or(false, |iv| iv.0 == 0.0))
            .count();
        n as f64 * self.cell_area()
    }

    /// The part of the set in `{x_n > 0}`.
    pub fn upper_half(&self) -> ColumnSet {
        let cells = self
            .cells
            .iter()
            .map(|c| c.iter().filter(|iv| iv.1 > 0.0).map(|&(a, b)| (a.max(0.0), b)).collect())
            .collect();
        ColumnSet { cells, ..self.clone() }
    }

    /// `P(E; H) - beta P(E; ∂H)` with both measures restricted to `region`.
    pub fn free_energy_in(&self, beta: f64, region: &Region) -> Result<f64> {
        if self.cells.iter().flatten().any(|iv| iv.0 < 0.0) {
            return Err(Error::SetLeavesHalfspace);
        }
        let trace = self.trace_measure(region);
        Ok(self.column_perimeter(region) - trace - beta * trace)
    }
}

impl HalfspaceSet for ColumnSet {
    fn perimeter_in_halfspace(&self) -> Result<f64> {
        if self.cells.iter().flatten().any(|iv| iv.0 < 0.0) {
            return Err(Error::SetLeavesHalfspace);
        }
        Ok(self.column_perimeter(&Region::All) - self.trace_measure(&Region::All))
    }

    fn contact_measure(&self) -> Result<f64> {
        Ok(self.trace_measure(&Region::All))
    }
}

pub fn slice_length(e: &ColumnSet) -> SliceFunction {
    e.slice_length()
}

pub fn steiner_symmetral(e: &ColumnSet) -> ColumnSet {
    e.steiner_symmetral()
}

pub fn column_perimeter(e: &ColumnSet, region: &Region) -> f64 {
    e.column_perimeter(region)
}
