use lenscluster_core::analytic::{build_lens, energy_in_region};
use lenscluster_core::cluster2d::{discretize_lens, hausdorff_distance, validate_cluster, volume_vector, weighted_energy, PolyCluster};
use lenscluster_core::minimize::jitter;
use lenscluster_core::{validate_weights, Region, Vec2, WeightSystem};
use proptest::prelude::*;

fn jittered_lens(seed: u64, c23: f64) -> (PolyCluster, WeightSystem) {
    let w = validate_weights(1.0, 1.0, c23).unwrap();
    let lens = build_lens(&w, 2, 1.0).unwrap();
    let pc = discretize_lens(&lens, 0.05, 3.0).unwrap();
    (jitter(&pc, 0.01, seed), w)
}

/// Length of segment `a b` with `lo <= |x| < hi`, by clipping the
/// parameter range against the two half-strips.
fn shell_length(a: Vec2, b: Vec2, lo: f64, hi: f64) -> f64 {
    let mut s = 0.0;
    for (x0, x1) in [(lo, hi), (-hi, -lo)] {
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        let dx = b.x - a.x;
        if dx == 0.0 {
            if !(a.x >= x0 && a.x <= x1) {
                continue;
            }
        } else {
            let (u, v) = ((x0 - a.x) / dx, (x1 - a.x) / dx);
            t0 = t0.max(u.min(v));
            t1 = t1.min(u.max(v));
        }
        if t1 > t0 {
            s += (t1 - t0) * a.dist(b);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn energy_is_additive_over_shells(seed in 0u64..1000, r1 in 0.05f64..1.5, dr in 0.0f64..1.5) {
        let (pc, w) = jittered_lens(seed, 1.3);
        let r2 = r1 + dr;
        let inner = weighted_energy(&pc, &w, &Region::Cylinder(r1)).unwrap().total;
        let outer = weighted_energy(&pc, &w, &Region::Cylinder(r2)).unwrap().total;
        let shell: f64 = pc.edges.iter().map(|e| {
            w.pair(e.label.0, e.label.1) * shell_length(pc.vertices[e.v[0]], pc.vertices[e.v[1]], r1, r2)
        }).sum();
        prop_assert!((outer - (inner + shell)).abs() < 1e-12, "{} {} {}", outer, inner, shell);
    }

    #[test]
    fn energy_is_rigid_motion_invariant(seed in 0u64..1000, angle in -3.2f64..3.2, tx in -5.0f64..5.0, ty in -5.0f64..5.0, rho in 0.1f64..3.0) {
        let (pc, w) = jittered_lens(seed, 1.0);
        let rotated = pc.mapped(|p| p.rotated(angle));
        let e0 = weighted_energy(&pc, &w, &Region::Ball(rho)).unwrap().total;
        let e1 = weighted_energy(&rotated, &w, &Region::Ball(rho)).unwrap().total;
        prop_assert!((e0 - e1).abs() < 1e-12);
        let moved = pc.mapped(|p| p.rotated(angle) + Vec2::new(tx, ty));
        let a0 = weighted_energy(&pc, &w, &Region::All).unwrap().total;
        let a1 = weighted_energy(&moved, &w, &Region::All).unwrap().total;
        prop_assert!((a0 - a1).abs() < 1e-12);
        let v0 = volume_vector(&pc)[0];
        let v1 = volume_vector(&moved)[0];
        prop_assert!((v0 - v1).abs() < 1e-12);
    }
}

fn slope(hs: &[f64], errs: &[f64]) -> f64 {
    let n = hs.len() as f64;
    let xs: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[test]
fn lens_discretization_converges_at_second_order() {
    for w in [WeightSystem::equal(), WeightSystem::new(1.0, 1.0, 1.5).unwrap()] {
        let lens = build_lens(&w, 2, 1.0).unwrap();
        let exact = energy_in_region(&lens, &Region::Cylinder(2.0)).unwrap().total;
        let hs = [4e-2, 2e-2, 1e-2, 5e-3];
        let mut de = Vec::new();
        let mut dv = Vec::new();
        for h in hs {
            let pc = discretize_lens(&lens, h, 3.0).unwrap();
            de.push((weighted_energy(&pc, &w, &Region::Cylinder(2.0)).unwrap().total - exact).abs());
            dv.push((volume_vector(&pc)[0] - 1.0).abs());
        }
        let se = slope(&hs, &de);
        let sv = slope(&hs, &dv);
        assert!((1.8..=2.2).contains(&se), "energy slope {se}");
        assert!((1.8..=2.2).contains(&sv), "volume slope {sv}");
    }
}

#[test]
fn jittered_lenses_stay_valid_and_close() {
    let w = WeightSystem::equal();
    let lens = build_lens(&w, 2, 1.0).unwrap();
    let pc = discretize_lens(&lens, 0.05, 3.0).unwrap();
    for seed in 0..20 {
        let j = jitter(&pc, 0.01, seed);
        assert_eq!(validate_cluster(&j), Vec::new());
        let d = hausdorff_distance(&pc, &j, 1, 2.0).unwrap();
        assert!(d > 0.0 && d < 0.015, "{d}");
    }
}
