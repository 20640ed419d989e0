use lenscluster_core::analytic::{
    build_double_bubble, build_lens, cap_area, cap_volume, energy_in_region, free_energy, lens_boundary_energy,
    liquid_drop_min, CapDrop,
};
use lenscluster_core::cluster2d::{discretize_bubble, validate_cluster, volume_vector, PolyCluster};
use lenscluster_core::math::unit_ball_measure;
use lenscluster_core::minimize::total_energy;
use lenscluster_core::{validate_weights, young_beta, Region, Vec2, WeightSystem};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn symmetric_weights() -> impl Strategy<Value = WeightSystem> {
    (0.2f64..5.0, 0.02f64..0.98).prop_map(|(c, t)| validate_weights(c, c, 2.0 * c * t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn caps_match_planar_and_spatial_formulas(r in 0.01f64..50.0, gamma in 0.01f64..PI) {
        let c = gamma.cos();
        let s = gamma.sin();
        prop_assert!(rel(cap_volume(2, r, gamma).unwrap(), r * r * (gamma - s * c)) < 1e-10);
        prop_assert!(rel(cap_area(2, r, gamma).unwrap(), 2.0 * gamma * r) < 1e-10);
        let v3 = PI * r.powi(3) * (1.0 - c).powi(2) * (2.0 + c) / 3.0;
        prop_assert!(rel(cap_volume(3, r, gamma).unwrap(), v3) < 1e-10);
        prop_assert!(rel(cap_area(3, r, gamma).unwrap(), 2.0 * PI * r * r * (1.0 - c)) < 1e-10);
    }

    #[test]
    fn lens_scales_with_volume(
        a in 0.3f64..3.0, b in 0.3f64..3.0, t in 0.05f64..0.95,
        n in 2usize..5, v in 0.1f64..10.0, lambda in 0.01f64..100.0,
    ) {
        let c = (a - b).abs() + t * (2.0 * a.min(b));
        let w = validate_weights(a, b, c).unwrap();
        let l1 = build_lens(&w, n, v).unwrap();
        let l2 = build_lens(&w, n, lambda * v).unwrap();
        let k = lambda.powf(1.0 / n as f64);
        prop_assert!(rel(l2.r_disk, k * l1.r_disk) < 1e-8);
        prop_assert!(rel(l2.cap_up.radius, k * l1.cap_up.radius) < 1e-8);
        prop_assert!(rel(l2.cap_down.radius, k * l1.cap_down.radius) < 1e-8);
        let ke = lambda.powf((n - 1) as f64 / n as f64);
        prop_assert!(rel(lens_boundary_energy(&l2), ke * lens_boundary_energy(&l1)) < 1e-8);
        prop_assert!(rel(l2.enclosed_volume(), lambda * v) < 1e-8);
    }

    #[test]
    fn symmetric_lens_splits_into_two_drops(w in symmetric_weights(), n in 2usize..4, rho_factor in 1.01f64..20.0) {
        let lens = build_lens(&w, n, 1.0).unwrap();
        let beta = young_beta(&w).unwrap();
        let rho = rho_factor * lens.lateral_extent();
        let drop = CapDrop::upper_half_of(&lens);
        let lhs = 2.0 * w.c13() * free_energy(&drop, beta).unwrap()
            + w.c23() * unit_ball_measure(n - 1) * rho.powi(n as i32 - 1);
        let rhs = energy_in_region(&lens, &Region::Cylinder(rho)).unwrap().total;
        prop_assert!(rel(lhs, rhs) < 1e-8, "{} {}", lhs, rhs);
        // the drop minimizer at this beta and volume is the same cap
        let min = liquid_drop_min(beta, drop.volume, n).unwrap();
        prop_assert!(rel(min.radius, drop.radius) < 1e-8);
        prop_assert!((min.contact_cosine - drop.contact_cosine).abs() < 1e-10);
    }
}

/// Interior vertices of the `(1,2)` interface.
fn wall_vertices(pc: &PolyCluster) -> Vec<usize> {
    let deg = pc.degrees();
    let mut out: Vec<usize> = pc
        .edges
        .iter()
        .filter(|e| e.label == (1, 2))
        .flat_map(|e| e.v)
        .filter(|&v| deg[v] == 2)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Restores `|X(1)| = 1`, `|X(2)| = m` by sliding the `(1,2)` wall along the
/// normal of the junction chord (area is affine in the shift) and then
/// scaling about the origin.
fn restore_areas(pc: &PolyCluster, m: f64) -> PolyCluster {
    let js = pc.junctions();
    let chord = pc.vertices[js[1]] - pc.vertices[js[0]];
    let d = chord.perp().normalized();
    let wall = wall_vertices(pc);
    let shifted = |alpha: f64| {
        let mut q = pc.clone();
        for &v in &wall {
            q.vertices[v] += d * alpha;
        }
        q
    };
    let a0 = volume_vector(pc);
    let probe = 1e-3 * chord.norm();
    let a1 = volume_vector(&shifted(probe));
    let total = a0[0] + a0[1];
    let alpha = probe * (total / (1.0 + m) - a0[0]) / (a1[0] - a0[0]);
    let s = ((1.0 + m) / total).sqrt();
    let mut q = shifted(alpha).mapped(|p| p * s);
    q.r_trunc *= s;
    q
}

fn perturbed(base: &PolyCluster, scale: f64, rng: &mut ChaCha8Rng) -> PolyCluster {
    let modes: Vec<(f64, f64, f64, f64)> = (0..4)
        .map(|_| {
            (
                rng.gen_range(-0.04..0.04) * scale,
                rng.gen_range(0.5..3.0) / scale,
                rng.gen_range(0.0..2.0 * PI),
                rng.gen_range(0.0..2.0 * PI),
            )
        })
        .collect();
    base.mapped(|p| {
        let mut out = p;
        for (i, &(amp, k, phi, psi)) in modes.iter().enumerate() {
            if i % 2 == 0 {
                out.x += amp * (k * p.y + phi).sin();
                out.y += amp * (k * p.x + psi).cos();
            } else {
                out.x += amp * (k * (p.x + p.y) + phi).cos();
                out.y += amp * (k * (p.x - p.y) + psi).sin();
            }
        }
        out
    })
}

#[test]
fn bubble_beats_perturbed_competitors() {
    let w = WeightSystem::equal();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [1.0, 10.0, 100.0] {
        let bub = build_double_bubble(&w, m).unwrap();
        let exact = energy_in_region(&bub, &Region::All).unwrap().total;
        let scale = (1.0 + m).sqrt();
        let base = discretize_bubble(&bub, 0.02 * scale, 20.0 * scale).unwrap();
        assert!(base.pinned.is_empty());
        let mut tried = 0;
        let mut accepted = 0;
        while accepted < 50 {
            tried += 1;
            assert!(tried < 500, "too many invalid competitors");
            let q = restore_areas(&perturbed(&base, scale, &mut rng), m);
            if !validate_cluster(&q).is_empty() {
                continue;
            }
            let v = volume_vector(&q);
            assert!(rel(v[0], 1.0) < 1e-9 && rel(v[1], m) < 1e-9, "{:?}", v);
            let e = total_energy(&q, &w);
            assert!(e >= exact, "m = {m}: competitor {e} < bubble {exact}");
            accepted += 1;
        }
    }
}

#[test]
fn restored_polygon_bubble_is_close_to_exact() {
    let w = WeightSystem::equal();
    let bub = build_double_bubble(&w, 10.0).unwrap();
    let exact = energy_in_region(&bub, &Region::All).unwrap().total;
    let q = restore_areas(&discretize_bubble(&bub, 0.01, 100.0).unwrap(), 10.0);
    let e = total_energy(&q, &w);
    assert!(e >= exact && e - exact < 1e-3, "{e} {exact}");
    let _ = Vec2::ZERO;
}
