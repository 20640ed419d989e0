//! Bracketing root finding and 1-D minimization.

#[allow(unused_imports)]
use crate::math::Real;

/// Finds a root of `f` in `[lo, hi]` where `f(lo)` and `f(hi)` differ in sign.
///
/// Secant steps are taken while they stay inside the bracket and shrink it
/// fast enough; otherwise the bracket is bisected. Stops when the bracket
/// width is below `rel_tol * max(|lo|, |hi|, 1e-300)` or `f` hits zero.
pub fn bracketed_root<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    rel_tol: f64,
) -> Option<f64> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Some(lo);
    }
    if fhi == 0.0 {
        return Some(hi);
    }
    if flo.signum() == fhi.signum() || !flo.is_finite() && !fhi.is_finite() {
        return None;
    }
    let mut last_width = hi - lo;
    for _ in 0..400 {
        let width = hi - lo;
        if width.abs() <= rel_tol * lo.abs().max(hi.abs()).max(1e-300) {
            break;
        }
        let mut x = 0.5 * (lo + hi);
        if flo.is_finite() && fhi.is_finite() && width < 0.5 * last_width {
            let s = lo - flo * (hi - lo) / (fhi - flo);
            if s > lo && s < hi {
                x = s;
            }
        }
        last_width = width;
        let fx = f(x);
        if fx == 0.0 {
            return Some(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    Some(if flo.abs() < fhi.abs() { lo } else { hi })
}

/// Golden-section search for a minimum of a unimodal `f` on `[a, b]`.
pub fn golden_min<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let g = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_root_of_two() {
        let r = bracketed_root(|x| x * x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2.0f64.powf(1.0 / 3.0)).abs() < 1e-13);
    }

    #[test]
    fn no_sign_change_is_none() {
        assert!(bracketed_root(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn golden_section_parabola() {
        let x = golden_min(|x| (x - 0.3) * (x - 0.3), -1.0, 2.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8);
    }
}
