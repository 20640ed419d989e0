//! Weighted (1,2)-clusters: analytic lens clusters, double bubbles and
//! liquid drops, polygonal clusters in the plane, Steiner symmetrization
//! on column sets, and volume-constrained gradient descent.
#![no_std]
#![cfg_attr(test, allow(unused_imports))]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod cluster2d;
pub mod energy;
pub mod error;
pub mod geom;
pub mod math;
pub mod minimize;
pub mod ode;
pub mod quad;
pub mod roots;
pub mod symmetrize;
pub mod weights;

pub use energy::{EnergyReport, PAIRS};
pub use error::{Error, Result};
pub use geom::{Region, Vec2};
pub use weights::{decompose_weights, solve_junction_angles, validate_weights, young_beta, AngleTriple, ChamberCoefficients, WeightSystem};
