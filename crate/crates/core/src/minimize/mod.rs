//! Volume-constrained descent of the weighted length of a [`PolyCluster`].

mod angles;
mod gradient;
mod reshape;

pub use angles::{circle_tangent, junction_angles, single_interval_fraction};
pub use gradient::{area_gradient, chamber_one_cycle, energy_gradient, project_volume, total_energy};
pub use reshape::{box_lens, chains, jitter, mean_edge_length, resample};

use alloc::vec::Vec;

use crate::cluster2d::{cycle_area, PolyCluster};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::weights::WeightSystem;

/// How the chamber-1 area constraint is enforced. Only normal projection
/// after each step is implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum VolumeMode {
    #[default]
    LagrangeProjection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct MinimizeConfig {
    pub step: f64,
    pub max_iter: usize,
    /// Stop once an accepted step lowers the energy by less than this
    /// fraction while the projected gradient is already below 1e-4.
    pub energy_tol: f64,
    /// Stop once the largest constraint-projected vertex gradient is below
    /// this.
    pub grad_tol: f64,
    /// 0 disables resampling.
    pub resample_every: usize,
    pub volume_mode: VolumeMode,
    pub backtrack_factor: f64,
    pub seed: u64,
}

impl Default for MinimizeConfig {
    fn default() -> Self {
        MinimizeConfig {
            step: 0.05,
            max_iter: 20_000,
            energy_tol: 1e-10,
            grad_tol: 1e-5,
            resample_every: 25,
            volume_mode: VolumeMode::LagrangeProjection,
            backtrack_factor: 0.5,
            seed: 7,
        }
    }
}

impl MinimizeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::Domain("step must be positive"));
        }
        if !(self.backtrack_factor > 0.0 && self.backtrack_factor < 1.0) {
            return Err(Error::Domain("backtrack_factor must lie in (0, 1)"));
        }
        if !(self.energy_tol > 0.0) {
            return Err(Error::Domain("energy_tol must be positive"));
        }
        if !(self.grad_tol >= 0.0) {
            return Err(Error::Domain("grad_tol must be non-negative"));
        }
        Ok(())
    }
}

/// One accepted iterate.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TraceRow {
    pub iter: usize,
    pub energy: f64,
    pub volume: f64,
    pub max_grad: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinimizeReport {
    pub iterations: usize,
    /// Accepted iterates, starting with the projected initial state.
    pub trace: Vec<TraceRow>,
    pub final_energy: f64,
    /// Largest `|area(chamber 1) - target|` over accepted iterates.
    pub volume_drift: f64,
    /// `None` unless the cluster has exactly two triple junctions.
    pub junction_angles: Option<[[f64; 3]; 2]>,
    pub converged: bool,
    /// Largest constraint-projected vertex gradient of the final state.
    pub max_grad: f64,
}

impl MinimizeReport {
    /// `(iter, energy)` pairs of the accepted iterates.
    pub fn energy_trace(&self) -> Vec<(usize, f64)> {
        self.trace.iter().map(|r| (r.iter, r.energy)).collect()
    }
}

/// Energy gradient with its component along the area gradient removed,
/// i.e. `g - μ a` with `μ = <g, a> / <a, a>`.
pub fn projected_gradient(pc: &PolyCluster, w: &WeightSystem, cycle: &[usize]) -> Vec<Vec2> {
    let mut g = energy_gradient(pc, w);
    let mut a = alloc::vec![Vec2::ZERO; g.len()];
    for (v, d) in area_gradient(&pc.vertices, cycle) {
        if !pc.is_pinned(v) {
            a[v] += d;
        }
    }
    let (mut ga, mut aa) = (0.0, 0.0);
    for (gv, av) in g.iter().zip(&a) {
        ga += gv.dot(*av);
        aa += av.dot(*av);
    }
    if aa > 0.0 {
        let mu = ga / aa;
        for (gv, av) in g.iter_mut().zip(&a) {
            *gv -= *av * mu;
        }
    }
    g
}

fn max_norm(v: &[Vec2]) -> f64 {
    v.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

const STEP_FLOOR: f64 = 1e-15;

fn shortest_edge(pc: &PolyCluster) -> f64 {
    (0..pc.edges.len()).map(|i| pc.edge_length(i)).fold(f64::INFINITY, f64::min)
}

/// Largest step that moves no vertex by more than a quarter of its
/// shortest incident edge, so a descent step cannot fold a polyline.
fn step_cap(pc: &PolyCluster, grad: &[Vec2]) -> f64 {
    let mut shortest = alloc::vec![f64::INFINITY; pc.vertices.len()];
    for (i, e) in pc.edges.iter().enumerate() {
        let l = pc.edge_length(i);
        for v in e.v {
            shortest[v] = shortest[v].min(l);
        }
    }
    let mut cap = f64::INFINITY;
    for (l, g) in shortest.iter().zip(grad) {
        let n = g.norm();
        if n > 0.0 {
            cap = cap.min(0.25 * l / n);
        }
    }
    cap
}
const CRITICAL_GRAD: f64 = 1e-4;

/// Backtracking projected-gradient descent at fixed chamber-1 area.
///
/// The target area is chamber 1's `target_volume`, or its current area if
/// none is set. Every proposal `x - step * g` is projected back onto the
/// area constraint and accepted only if the energy strictly drops; after an
/// accepted step the step grows back toward `cfg.step`. Every
/// `resample_every` iterations, and whenever some edge has shrunk below a
/// quarter of the initial mean edge length, the polylines are redistributed
/// at that length; the result is kept only if its energy is still below the
/// previous accepted iterate's.
pub fn minimize(pc: &PolyCluster, w: &WeightSystem, cfg: &MinimizeConfig) -> Result<(PolyCluster, MinimizeReport)> {
    cfg.validate()?;
    let mut cycle = chamber_one_cycle(pc)?;
    let target = match pc.chamber(1).and_then(|c| c.target_volume) {
        Some(t) => t,
        None => cycle_area(&pc.vertices, &cycle),
    };
    if !(target > 0.0) {
        return Err(Error::InvalidInput("chamber 1 has no positive area"));
    }
    let spacing = mean_edge_length(pc);
    let mut x = gradient::project_volume_on(pc, &cycle, target)?;
    let mut energy = total_energy(&x, w);
    let mut grad = projected_gradient(&x, w, &cycle);
    let mut max_grad = max_norm(&grad);
    let volume = cycle_area(&x.vertices, &cycle);
    let mut drift = (volume - target).abs();
    let mut trace = alloc::vec![TraceRow { iter: 0, energy, volume, max_grad }];
    let mut step = cfg.step;
    let mut converged = max_grad < cfg.grad_tol;
    let mut iter = 0;
    while !converged && iter < cfg.max_iter {
        iter += 1;
        let mut accepted = None;
        let cap = step_cap(&x, &grad);
        while step >= STEP_FLOOR {
            let mut trial = x.clone();
            let s = step.min(cap);
            for (p, g) in trial.vertices.iter_mut().zip(&grad) {
                *p -= *g * s;
            }
            if let Ok(trial) = gradient::project_volume_on(&trial, &cycle, target) {
                let e = total_energy(&trial, w);
                if e < energy {
                    accepted = Some((trial, e));
                    break;
                }
            }
            step *= cfg.backtrack_factor;
        }
        let Some((next, e)) = accepted else {
            if max_grad < CRITICAL_GRAD {
                converged = true;
                break;
            }
            return Err(Error::Diverged { iterations: iter });
        };
        let decrease = (energy - e) / energy.abs().max(f64::MIN_POSITIVE);
        x = next;
        energy = e;
        step = (step / cfg.backtrack_factor).min(cfg.step);
        let cramped = cfg.resample_every > 0 && shortest_edge(&x) < 0.25 * spacing;
        if cramped || (cfg.resample_every > 0 && iter % cfg.resample_every == 0) {
            let r = resample(&x, spacing);
            if let Ok(rc) = chamber_one_cycle(&r) {
                if let Ok(r) = gradient::project_volume_on(&r, &rc, target) {
                    let er = total_energy(&r, w);
                    // may give back part of this iteration's descent, never
                    // more, so the trace stays strictly decreasing
                    if er < trace[trace.len() - 1].energy {
                        x = r;
                        energy = er;
                        cycle = rc;
                    }
                }
            }
        }
        grad = projected_gradient(&x, w, &cycle);
        max_grad = max_norm(&grad);
        let volume = cycle_area(&x.vertices, &cycle);
        drift = drift.max((volume - target).abs());
        trace.push(TraceRow { iter, energy, volume, max_grad });
        converged = max_grad < cfg.grad_tol || (decrease < cfg.energy_tol && max_grad < CRITICAL_GRAD);
    }
    let junction_angles = junction_angles(&x).ok();
    let report = MinimizeReport {
        iterations: iter,
        trace,
        final_energy: energy,
        volume_drift: drift,
        junction_angles,
        converged,
        max_grad,
    };
    Ok((x, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::build_lens;
    use crate::cluster2d::{discretize_lens, validate_cluster};

    #[test]
    fn config_validation() {
        assert!(MinimizeConfig::default().validate().is_ok());
        let bad = MinimizeConfig { backtrack_factor: 1.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = MinimizeConfig { step: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = MinimizeConfig { energy_tol: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn exact_lens_is_nearly_critical() {
        let w = WeightSystem::equal();
        let lens = build_lens(&w, 2, 1.0).unwrap();
        let pc = discretize_lens(&lens, 0.05, 2.0).unwrap();
        let (out, rep) = minimize(&pc, &w, &MinimizeConfig::default()).unwrap();
        assert!(rep.converged);
        assert!(rep.iterations < 50, "{}", rep.iterations);
        assert!(rep.trace[0].energy - rep.final_energy < 1e-6);
        assert_eq!(validate_cluster(&out), Vec::new());
    }
}
