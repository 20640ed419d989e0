//! Float helpers for a `no_std` build, backed by `libm`.

use core::f64::consts::PI;

/// Elementary functions on `f64` routed through `libm` for `no_std` builds.
/// When `std` is anywhere in the dependency graph its inherent methods win
/// method resolution, which is why the imports of this trait carry
/// `allow(unused_imports)`.
pub trait Real: Copy {
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn acos(self) -> Self;
    fn atan2(self, other: Self) -> Self;
    fn powf(self, e: Self) -> Self;
    fn powi(self, e: i32) -> Self;
    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn hypot(self, other: Self) -> Self;
    fn abs(self) -> Self;
    fn round(self) -> Self;
    fn floor(self) -> Self;
    fn ceil(self) -> Self;
    fn rem_euclid(self, rhs: Self) -> Self;
}

impl Real for f64 {
    #[inline]
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }
    #[inline]
    fn sin(self) -> f64 {
        libm::sin(self)
    }
    #[inline]
    fn cos(self) -> f64 {
        libm::cos(self)
    }
    #[inline]
    fn tan(self) -> f64 {
        libm::tan(self)
    }
    #[inline]
    fn acos(self) -> f64 {
        libm::acos(self)
    }
    #[inline]
    fn atan2(self, other: f64) -> f64 {
        libm::atan2(self, other)
    }
    #[inline]
    fn powf(self, e: f64) -> f64 {
        libm::pow(self, e)
    }
    #[inline]
    fn powi(self, e: i32) -> f64 {
        let mut base = if e < 0 { 1.0 / self } else { self };
        let mut n = e.unsigned_abs();
        let mut acc = 1.0;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base *= base;
            n >>= 1;
        }
        acc
    }
    #[inline]
    fn ln(self) -> f64 {
        libm::log(self)
    }
    #[inline]
    fn exp(self) -> f64 {
        libm::exp(self)
    }
    #[inline]
    fn hypot(self, other: f64) -> f64 {
        libm::hypot(self, other)
    }
    #[inline]
    fn abs(self) -> f64 {
        libm::fabs(self)
    }
    #[inline]
    fn round(self) -> f64 {
        libm::round(self)
    }
    #[inline]
    fn floor(self) -> f64 {
        libm::floor(self)
    }
    #[inline]
    fn ceil(self) -> f64 {
        libm::ceil(self)
    }
    #[inline]
    fn rem_euclid(self, rhs: f64) -> f64 {
        let r = self % rhs;
        if r < 0.0 {
            r + rhs.abs()
        } else {
            r
        }
    }
}

/// Lebesgue measure of the unit ball in `R^k` (ω_0 = 1, ω_1 = 2, ω_2 = π, ...).
pub fn unit_ball_measure(k: usize) -> f64 {
    let (mut w, start) = if k % 2 == 0 { (1.0, 2) } else { (2.0, 3) };
    let mut j = start;
    while j <= k {
        w *= 2.0 * PI / j as f64;
        j += 2;
    }
    w
}

/// `acos` with the argument clamped to `[-1, 1]`.
#[inline]
pub fn acos_clamped(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// Relative difference `|a - b| / max(|a|, |b|, tiny)`.
#[inline]
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
    (a - b).abs() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ball_measures() {
        assert_eq!(unit_ball_measure(0), 1.0);
        assert_eq!(unit_ball_measure(1), 2.0);
        assert!((unit_ball_measure(2) - PI).abs() < 1e-15);
        assert!((unit_ball_measure(3) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((unit_ball_measure(4) - PI * PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn powi_matches_repeated_product() {
        assert_eq!(3.0f64.powi(0), 1.0);
        assert_eq!(2.0f64.powi(10), 1024.0);
        assert_eq!(2.0f64.powi(-2), 0.25);
    }
}
