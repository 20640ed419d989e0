//! Adaptive Dormand–Prince 5(4) integrator for scalar ODEs `y' = f(t, y)`.

#[allow(unused_imports)]
use crate::math::Real;

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Statistics of one [`integrate`] call.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OdeStats {
    pub accepted: usize,
    pub rejected: usize,
}

/// Integrates from `t0` to `t1` with local error tolerance `tol`
/// (mixed absolute/relative). Returns `None` if the step size underflows.
pub fn integrate<F: Fn(f64, f64) -> f64>(
    f: F,
    t0: f64,
    y0: f64,
    t1: f64,
    tol: f64,
    stats: &mut OdeStats,
) -> Option<f64> {
    let span = t1 - t0;
    if span == 0.0 {
        return Some(y0);
    }
    let dir = span.signum();
    let mut t = t0;
    let mut y = y0;
    let mut h = span.abs() * 1e-3;
    let mut k = [0.0f64; 7];
    while (t1 - t) * dir > 0.0 {
        if h < 1e-14 * (1.0 + t.abs()) {
            return None;
        }
        let step = h.min((t1 - t).abs()) * dir;
        k[0] = f(t, y);
        for s in 1..7 {
            let mut acc = y;
            for (j, kj) in k.iter().enumerate().take(s) {
                acc += step * A[s][j] * kj;
            }
            k[s] = f(t + C[s] * step, acc);
        }
        let mut y5 = y;
        let mut y4 = y;
        for s in 0..7 {
            y5 += step * B5[s] * k[s];
            y4 += step * B4[s] * k[s];
        }
        let err = (y5 - y4).abs() / (tol * (1.0 + y.abs().max(y5.abs())));
        if err <= 1.0 && y5.is_finite() {
            t += step;
            y = y5;
            stats.accepted += 1;
            let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            h = step.abs() * fac;
        } else {
            stats.rejected += 1;
            let fac = if err.is_finite() { (0.9 * err.powf(-0.25)).clamp(0.1, 0.5) } else { 0.1 };
            h = step.abs() * fac;
        }
    }
    Some(y)
}
