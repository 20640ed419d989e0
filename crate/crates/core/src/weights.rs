//! Interface weight triples of a (1,2)-cluster, their chamber decomposition
//! and the junction angles they force.

use core::f64::consts::PI;

use crate::error::{Error, Result};
#[allow(unused_imports)]
use crate::math::Real;

/// Validated weights `c12, c13, c23`: all positive, strict triangle inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawWeights"))]
pub struct WeightSystem {
    c12: f64,
    c13: f64,
    c23: f64,
}

/// Unvalidated weight triple, the shape of the JSON input.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RawWeights {
    pub c12: f64,
    pub c13: f64,
    pub c23: f64,
}

impl TryFrom<RawWeights> for WeightSystem {
    type Error = Error;
    fn try_from(raw: RawWeights) -> Result<Self> {
        WeightSystem::new(raw.c12, raw.c13, raw.c23)
    }
}

impl WeightSystem {
    pub fn new(c12: f64, c13: f64, c23: f64) -> Result<Self> {
        validate_weights(c12, c13, c23)
    }

    /// Equal weights `(1, 1, 1)`.
    pub fn equal() -> Self {
        WeightSystem { c12: 1.0, c13: 1.0, c23: 1.0 }
    }

    pub fn c12(&self) -> f64 {
        self.c12
    }
    pub fn c13(&self) -> f64 {
        self.c13
    }
    pub fn c23(&self) -> f64 {
        self.c23
    }

    /// Weight of the interface between chambers `j` and `k` (any order).
    pub fn pair(&self, j: u8, k: u8) -> f64 {
        match (j.min(k), j.max(k)) {
            (1, 2) => self.c12,
            (1, 3) => self.c13,
            (2, 3) => self.c23,
            _ => panic!("no interface between chambers {j} and {k}"),
        }
    }

    /// The same weights multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        WeightSystem::new(self.c12 * factor, self.c13 * factor, self.c23 * factor)
    }

    pub fn raw(&self) -> RawWeights {
        RawWeights { c12: self.c12, c13: self.c13, c23: self.c23 }
    }
}

/// Checks positivity and the strict triangle inequalities.
pub fn validate_weights(c12: f64, c13: f64, c23: f64) -> Result<WeightSystem> {
    for (pair, value) in [((1, 2), c12), ((1, 3), c13), ((2, 3), c23)] {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::NonPositiveWeight { pair, value });
        }
    }
    if !(c12 < c13 + c23) {
        return Err(Error::TriangleViolation { pair: (1, 2) });
    }
    if !(c13 < c12 + c23) {
        return Err(Error::TriangleViolation { pair: (1, 3) });
    }
    if !(c23 < c12 + c13) {
        return Err(Error::TriangleViolation { pair: (2, 3) });
    }
    Ok(WeightSystem { c12, c13, c23 })
}

/// Chamber coefficients with `c_jk = c_j + c_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChamberCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl ChamberCoefficients {
    /// `(c1 + c2, c1 + c3, c2 + c3)`.
    pub fn recompose(&self) -> (f64, f64, f64) {
        (self.c1 + self.c2, self.c1 + self.c3, self.c2 + self.c3)
    }
}

pub fn decompose_weights(w: &WeightSystem) -> ChamberCoefficients {
    ChamberCoefficients {
        c1: (w.c12 + w.c13 - w.c23) / 2.0,
        c2: (w.c12 + w.c23 - w.c13) / 2.0,
        c3: (w.c13 + w.c23 - w.c12) / 2.0,
    }
}

/// Junction angles: `theta_j` is the opening of chamber `j` where the three
/// interfaces meet.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AngleTriple {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    /// Common value of `sin(theta1)/c23 = sin(theta2)/c13 = sin(theta3)/c12`.
    pub ratio: f64,
}

impl AngleTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }

    /// Largest relative deviation among the three law-of-sines ratios.
    pub fn sine_law_defect(&self, w: &WeightSystem) -> f64 {
        let r = [self.theta1.sin() / w.c23, self.theta2.sin() / w.c13, self.theta3.sin() / w.c12];
        let max = r.iter().cloned().fold(f64::MIN, f64::max);
        let min = r.iter().cloned().fold(f64::MAX, f64::min);
        (max - min) / max.abs()
    }
}

/// Each `theta_i` is `pi` minus the angle of the triangle with sides
/// `(c23, c13, c12)` opposite that side. Triangle angles use Kahan's
/// half-angle form on sorted sides, which keeps full relative accuracy
/// for needle-like triangles where the law of cosines does not.
pub fn solve_junction_angles(w: &WeightSystem) -> AngleTriple {
    let sides = [w.c23, w.c13, w.c12];
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| sides[j].total_cmp(&sides[i]));
    let (a, b, c) = (sides[order[0]], sides[order[1]], sides[order[2]]);
    let p = a + (b + c);
    let mut q = [c - (a - b), c + (a - b), a + (b - c)];
    if b == c {
        // both equal `a` exactly; keep the two equal angles bit-identical
        q[1] = q[2];
    }
    // angle opposite the k-th sorted side: tan(A/2)^2 = q_j q_l / (p q_k)
    let half = |k: usize, j: usize, l: usize| 2.0 * (q[j] * q[l]).sqrt().atan2((p * q[k]).sqrt());
    let sorted = [half(0, 1, 2), half(1, 0, 2), half(2, 0, 1)];
    let mut alpha = [0.0; 3];
    for (k, &i) in order.iter().enumerate() {
        alpha[i] = sorted[k];
    }
    let ratio = alpha[0].sin() / w.c23;
    AngleTriple { theta1: PI - alpha[0], theta2: PI - alpha[1], theta3: PI - alpha[2], ratio }
}

/// Contact parameter `c23 / (2 c13)` of the symmetric regime `c12 = c13`.
pub fn young_beta(w: &WeightSystem) -> Result<f64> {
    if w.c12 != w.c13 {
        return Err(Error::AsymmetricWeights { c12: w.c12, c13: w.c13 });
    }
    Ok(w.c23 / (2.0 * w.c13))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_pair_gives_identical_angles() {
        for (x, y) in [(1.0, 1.5), (0.3, 0.59), (7.0, 0.1), (1.0 / 3.0, 0.2), (2.1, 4.1)] {
            for w in [validate_weights(x, x, y), validate_weights(x, y, x), validate_weights(y, x, x)] {
                let w = w.unwrap();
                let t = solve_junction_angles(&w);
                if w.c12 == w.c13 {
                    assert_eq!(t.theta2, t.theta3);
                }
                if w.c12 == w.c23 {
                    assert_eq!(t.theta1, t.theta3);
                }
                if w.c13 == w.c23 {
                    assert_eq!(t.theta1, t.theta2);
                }
            }
        }
    }

    #[test]
    fn validation_examples() {
        assert!(validate_weights(1.0, 1.0, 1.0).is_ok());
        assert!(validate_weights(1.0, 1.0, 1.5).is_ok());
        assert_eq!(
            validate_weights(1.0, 1.0, 2.0),
            Err(Error::TriangleViolation { pair: (2, 3) })
        );
        assert!(matches!(
            validate_weights(0.0, 1.0, 1.0),
            Err(Error::NonPositiveWeight { pair: (1, 2), .. })
        ));
        assert!(matches!(
            validate_weights(1.0, -2.0, 1.0),
            Err(Error::NonPositiveWeight { pair: (1, 3), .. })
        ));
        assert!(validate_weights(f64::NAN, 1.0, 1.0).is_err());
        assert_eq!(
            validate_weights(3.0, 1.0, 1.5),
            Err(Error::TriangleViolation { pair: (1, 2) })
        );
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_weights(&WeightSystem::equal());
        assert_eq!((d.c1, d.c2, d.c3), (0.5, 0.5, 0.5));
        let d = decompose_weights(&WeightSystem::new(1.0, 1.0, 1.5).unwrap());
        assert_eq!((d.c1, d.c2, d.c3), (0.25, 0.75, 0.75));
        assert_eq!(d.recompose(), (1.0, 1.0, 1.5));
    }

    #[test]
    fn equal_weight_angles() {
        let a = solve_junction_angles(&WeightSystem::equal());
        for t in a.as_array() {
            assert!((t - 2.0 * PI / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn asymmetric_angles_from_law_of_cosines() {
        let w = WeightSystem::new(1.0, 1.0, 1.5).unwrap();
        let a = solve_junction_angles(&w);
        // independent oracle: cos A1 = (1 + 1 - 2.25) / 2
        let a1 = (-0.125f64).acos();
        assert!((a.theta1 - (PI - a1)).abs() < 1e-12);
        assert!((a.theta1 - 1.4455).abs() < 1e-4);
        assert!((a.theta2 - 2.41886).abs() < 1e-5);
        assert!((a.as_array().iter().sum::<f64>() - 2.0 * PI).abs() < 1e-12);
        assert!((a.theta2 - a.theta3).abs() < 1e-12);
        assert!(a.sine_law_defect(&w) < 1e-12);
    }

    #[test]
    fn beta() {
        assert_eq!(young_beta(&WeightSystem::equal()), Ok(0.5));
        assert_eq!(young_beta(&WeightSystem::new(1.0, 1.0, 1.5).unwrap()), Ok(0.75));
        assert!(matches!(
            young_beta(&WeightSystem::new(1.0, 1.2, 1.0).unwrap()),
            Err(Error::AsymmetricWeights { .. })
        ));
    }
}
