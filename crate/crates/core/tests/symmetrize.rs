use lenscluster_core::symmetrize::{
    cluster_energy, interface_measure, projection_measure, projection_zero_set, symmetrize_cluster, ColumnCluster,
    ColumnSet,
};
use lenscluster_core::{validate_weights, Region};
use proptest::prelude::*;

const EIGHTH: f64 = 0.125;

/// Sorted disjoint intervals with endpoints on the 1/8 grid in [-2, 2].
fn intervals() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::btree_set(-16i32..=16, 0..=6).prop_map(|set| {
        let pts: Vec<i32> = set.into_iter().collect();
        let mut out = Vec::new();
        let mut k = 0;
        while k + 1 < pts.len() {
            out.push((pts[k] as f64 * EIGHTH, pts[k + 1] as f64 * EIGHTH));
            k += 2;
        }
        out
    })
}

fn column_set() -> impl Strategy<Value = ColumnSet> {
    (1usize..=2, 1usize..=6, 1usize..=6, prop::sample::select(vec![0.25, 0.5, 1.0]), -4i32..4, -4i32..4)
        .prop_flat_map(|(d, nx, ny, h, ox, oy)| {
            let ny = if d == 1 { 1 } else { ny };
            let shape = [if d == 1 { 2 * nx } else { nx }, ny];
            prop::collection::vec(intervals(), shape[0] * shape[1]).prop_map(move |cells| {
                let origin = [ox as f64 * 0.25, if d == 1 { 0.0 } else { oy as f64 * 0.25 }];
                ColumnSet::new(d, h, origin, shape, cells).unwrap()
            })
        })
}

/// Perimeter by counting exposed faces of voxels of height 1/16.
fn voxel_perimeter(e: &ColumnSet) -> f64 {
    const BINS: usize = 128;
    let step = 1.0 / 16.0;
    let occupied = |i: usize, k: usize| {
        let mid = -4.0 + (k as f64 + 0.5) * step;
        e.cell(i).iter().any(|&(a, b)| a < mid && mid < b)
    };
    let [nx, ny] = e.shape();
    let h = e.h_base();
    let (area, facet) = if e.dim() == 1 { (h, 1.0) } else { (h * h, h) };
    let mut total = 0.0;
    for i in 0..e.len() {
        let (ix, iy) = (i % nx, i / nx);
        for k in 0..BINS {
            let here = occupied(i, k);
            let below = k > 0 && occupied(i, k - 1);
            if here != below {
                total += area;
            }
            if k == BINS - 1 && here {
                total += area;
            }
            if !here {
                continue;
            }
            let mut sides: Vec<Option<usize>> = vec![
                (ix > 0).then(|| i - 1),
                (ix + 1 < nx).then(|| i + 1),
            ];
            if e.dim() == 2 {
                sides.push((iy > 0).then(|| i - nx));
                sides.push((iy + 1 < ny).then(|| i + nx));
            }
            for s in sides {
                if s.map_or(true, |j| !occupied(j, k)) {
                    total += facet * step;
                }
            }
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn steiner_suite(e in column_set()) {
        let s = e.steiner_symmetral();
        prop_assert_eq!(s.volume(), e.volume());
        let p = e.column_perimeter(&Region::All);
        let ps = s.column_perimeter(&Region::All);
        prop_assert_eq!(p, voxel_perimeter(&e));
        prop_assert_eq!(ps, voxel_perimeter(&s));
        prop_assert!(ps <= p);
        for c in s.cells() {
            prop_assert!(c.is_empty() || (c.len() == 1 && c[0].0 == -c[0].1));
        }
        prop_assert_eq!(s.steiner_symmetral(), s.clone());
        for rho in [0.3, 0.8, 1.7] {
            prop_assert!(s.column_perimeter(&Region::Cylinder(rho)) <= e.column_perimeter(&Region::Cylinder(rho)));
        }
    }
}

fn column_cluster() -> impl Strategy<Value = ColumnCluster> {
    (column_set(), any::<bool>(), any::<u64>()).prop_map(|(e, flat, seed)| {
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 17) as f64 * EIGHTH - 1.0
        };
        let level = next();
        let heights = e.cells().iter().map(|c| c.is_empty().then(|| if flat { level } else { next() })).collect();
        ColumnCluster::new(e, heights, 4.0).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn projection_inequality_and_equality_case(x in column_cluster(), rho in 0.1f64..3.0) {
        for region in [Region::Cylinder(rho), Region::All] {
            let graph = interface_measure(&x, &region);
            let base = projection_measure(&x, &region);
            prop_assert!(graph >= base);
            let tilted = projection_zero_set(&x).into_iter().any(|i| {
                let g = x.interface_gradient(i);
                x.set1().cell_in(i, &region) && (g[0] != 0.0 || g[1] != 0.0)
            });
            prop_assert_eq!(graph > base, tilted);
        }
    }

    #[test]
    fn symmetrization_lowers_cluster_energy(x in column_cluster(), c in 0.2f64..3.0, t in 0.05f64..0.95, rho in 0.1f64..3.0) {
        let w = validate_weights(c, c, 2.0 * c * t).unwrap();
        let s = symmetrize_cluster(&x);
        prop_assert_eq!(s.set1().volume(), x.set1().volume());
        prop_assert_eq!(projection_zero_set(&s), projection_zero_set(&x));
        prop_assert!(cluster_energy(&s, &w, rho) <= cluster_energy(&x, &w, rho) + 1e-12);
        prop_assert_eq!(symmetrize_cluster(&s), s);
    }
}
