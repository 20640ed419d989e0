//! Rotationally symmetric exterior minimal graphs `u(|x̄|)` over `R^{n-1}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::math::Real;
use crate::ode::{self, OdeStats};
use crate::roots::golden_min;

/// Least-squares fit of the far-field model on the outer half of the range.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AsymptoticFit {
    /// Limit value (intercept for `n = 2`).
    pub a: f64,
    /// Coefficient of `r^{3-n}`, of `ln r` when `n = 3`, or the slope when `n = 2`.
    pub b_coeff: f64,
    /// Root-mean-square misfit of the model.
    pub residual: f64,
    /// Exponent `p` of the best model `a + b r^{-p}` for `n >= 4`.
    pub decay_exponent: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RadialGraphSolution {
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    pub flux: f64,
    pub r0: f64,
    pub rmax: f64,
    pub samples: Vec<(f64, f64)>,
    pub fit: AsymptoticFit,
    /// Largest `|r^{n-2} u' / sqrt(1 + u'^2) - C|` over the samples.
    pub ode_residual: f64,
    pub ode_steps: usize,
}

fn slope(n: usize, c: f64, r: f64) -> f64 {
    let q = r.powi(n as i32 - 2);
    c / (q * q - c * c).sqrt()
}

/// Linear least squares for `y ≈ a + b x`; returns `(a, b, rms)`.
fn line_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let b = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let a = my - b * mx;
    let ss: f64 = xs.iter().zip(ys).map(|(x, y)| (a + b * x - y).powi(2)).sum();
    (a, b, (ss / k).sqrt())
}

/// Integrates `u'(r) = C / sqrt(r^{2(n-2)} - C^2)` from `u(r0) = 0` and
/// fits the far-field expansion.
pub fn radial_exterior_graph(n: usize, flux: f64, r0: f64, rmax: f64, steps: usize) -> Result<RadialGraphSolution> {
    if n < 2 {
        return Err(Error::Domain("dimension must be at least 2"));
    }
    if !(r0 > 0.0) || !(rmax > r0) || !rmax.is_finite() {
        return Err(Error::Domain("need 0 < r0 < rmax"));
    }
    if steps < 4 {
        return Err(Error::Domain("need at least 4 steps"));
    }
    let limit = r0.powi(n as i32 - 2);
    if !(flux.abs() < limit) {
        return Err(Error::FluxTooLarge { flux, limit });
    }
    let mut stats = OdeStats::default();
    let mut samples = Vec::with_capacity(steps + 1);
    let mut u = 0.0;
    let mut prev = r0;
    samples.push((r0, 0.0));
    for i in 1..=steps {
        let r = if i == steps { rmax } else { r0 + (rmax - r0) * i as f64 / steps as f64 };
        u = ode::integrate(|t, _| slope(n, flux, t), prev, u, r, 1e-10, &mut stats)
            .ok_or(Error::SolveFailed { residual: f64::NAN })?;
        samples.push((r, u));
        prev = r;
    }
    let ode_residual = samples
        .iter()
        .map(|&(r, _)| {
            let du = slope(n, flux, r);
            (r.powi(n as i32 - 2) * du / (1.0 + du * du).sqrt() - flux).abs()
        })
        .fold(0.0, f64::max);

    let mid = 0.5 * (r0 + rmax);
    let outer: Vec<(f64, f64)> = samples.iter().copied().filter(|&(r, _)| r >= mid).collect();
    let ys: Vec<f64> = outer.iter().map(|p| p.1).collect();
    let basis = |p: f64| -> Vec<f64> {
        outer
            .iter()
            .map(|&(r, _)| match n {
                2 => r,
                3 => r.ln(),
                _ => r.powf(-p),
            })
            .collect()
    };
    let (a, b_coeff, residual) = line_fit(&basis(n as f64 - 3.0), &ys);
    let decay_exponent = if n >= 4 && flux != 0.0 {
        let misfit = |p: f64| line_fit(&basis(p), &ys).2;
        Some(golden_min(misfit, 0.05, 3.0 * n as f64, 1e-10))
    } else {
        None
    };
    Ok(RadialGraphSolution {
        n,
        flux,
        r0,
        rmax,
        samples,
        fit: AsymptoticFit { a, b_coeff, residual, decay_exponent },
        ode_residual,
        ode_steps: stats.accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_graph_is_a_line() {
        let s = radial_exterior_graph(2, 0.5, 1.0, 10.0, 50).unwrap();
        let k = 0.5 / (0.75f64).sqrt();
        assert!((k - 0.57735).abs() < 1e-5);
        for &(r, u) in &s.samples {
            assert!((u - k * (r - 1.0)).abs() < 1e-9);
        }
        assert!((s.fit.b_coeff - k).abs() < 1e-9);
    }

    #[test]
    fn catenoid_profile() {
        // n = 3: u = C acosh(r / C) - C acosh(r0 / C)
        let (c, r0) = (1.0f64, 2.0f64);
        let s = radial_exterior_graph(3, c, r0, 200.0, 400).unwrap();
        let acosh = |x: f64| (x + (x * x - 1.0).sqrt()).ln();
        for &(r, u) in s.samples.iter().step_by(37) {
            assert!((u - (acosh(r) - acosh(r0))).abs() < 1e-8);
        }
        assert!((s.fit.b_coeff - 1.0).abs() < 0.02);
        assert!(s.ode_residual < 1e-10);
    }

    #[test]
    fn four_dimensional_decay() {
        let s = radial_exterior_graph(4, 1.0, 2.0, 200.0, 400).unwrap();
        let p = s.fit.decay_exponent.unwrap();
        assert!((p - 1.0).abs() < 0.02, "{p}");
        // u(∞) - u(r) ≈ C / r
        assert!((s.fit.b_coeff + 1.0).abs() < 0.02);
        let w: Vec<f64> = s.samples.iter().map(|p| p.1).collect();
        assert!(w.windows(2).all(|v| v[1] > v[0]));
    }

    #[test]
    fn flux_limit() {
        assert!(matches!(radial_exterior_graph(3, 2.0, 2.0, 10.0, 10), Err(Error::FluxTooLarge { .. })));
        assert!(matches!(radial_exterior_graph(2, 1.0, 2.0, 10.0, 10), Err(Error::FluxTooLarge { .. })));
    }
}
