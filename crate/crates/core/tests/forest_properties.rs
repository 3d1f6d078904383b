mod common;

use common::connected_er;
use compact_span::forest::{build_laplacian, downdate_after_deletion, edge_metrics, forest_matrix, ForestMatrices};
use compact_span::oracle::enumerate_rooted_forests;
use compact_span::{forest, parse_graph, serialize_graph, ForestMatrices64, Graph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trip(g in connected_er(1..=25, 0.1..0.9)) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        prop_assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.edges().iter().all(|e| e.u() < e.v()));
    }

    #[test]
    fn volume_is_twice_edge_count(g in connected_er(1..=40, 0.2..0.9)) {
        prop_assert_eq!(g.degree_profile().volume, 2 * g.m());
    }

    #[test]
    fn forest_matrix_is_doubly_stochastic_and_positive(g in connected_er(2..=50, 0.1..0.8)) {
        let q = forest_matrix::<f64>(&g).unwrap();
        let worst = q.row_sums().iter().map(|s| (s - 1.0).abs()).fold(0.0, f64::max);
        prop_assert!(worst < 1e-9, "row-sum deviation {}", worst);
        prop_assert!(q.is_symmetric(1e-12));
        for i in 0..g.n() {
            for j in 0..g.n() {
                prop_assert!(q[(i, j)] > 0.0);
            }
        }
        prop_assert!(q.cholesky().is_ok());
    }

    #[test]
    fn pseudoinverse_properties(g in connected_er(2..=40, 0.1..0.8)) {
        let l = build_laplacian::<f64>(&g);
        let lp = forest::laplacian_pseudoinverse::<f64>(&g).unwrap();
        prop_assert!(lp.row_sums().iter().all(|s| s.abs() < 1e-9));
        prop_assert!(lp.is_symmetric(1e-12));
        let scale = l.max_abs().max(1.0);
        prop_assert!(l.matmul(&lp).matmul(&l).max_abs_diff(&l) < 1e-8 * scale);
    }

    #[test]
    fn forest_distance_is_a_metric(g in connected_er(2..=20, 0.1..0.8)) {
        let fm = ForestMatrices64::compute(&g).unwrap();
        let n = g.n();
        let d = |i, j| fm.forest_distance(i, j);
        for i in 0..n {
            prop_assert!(d(i, i).abs() < 1e-12);
            for j in 0..n {
                if i != j {
                    prop_assert!(d(i, j) > 0.0);
                }
                prop_assert!((d(i, j) - d(j, i)).abs() < 1e-12);
                for k in 0..n {
                    prop_assert!(d(i, k) <= d(i, j) + d(j, k) + 1e-9);
                }
            }
        }
    }

    #[test]
    fn edge_metric_ranges(g in connected_er(2..=30, 0.15..0.8)) {
        let fm = ForestMatrices64::compute(&g).unwrap();
        for m in edge_metrics(&g, &fm) {
            prop_assert!(m.delta > 0.0 && m.delta < 1.0);
            prop_assert!(m.omega > 0.0 && m.omega <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn resistances_over_edges_sum_to_n_minus_one(g in connected_er(2..=60, 0.15..0.8)) {
        let fm = ForestMatrices64::compute(&g).unwrap();
        let total: f64 = edge_metrics(&g, &fm).iter().map(|m| m.omega).sum();
        prop_assert!((total - (g.n() - 1) as f64).abs() < 1e-6);
    }

    #[test]
    fn determinant_counts_rooted_forests(g in connected_er(2..=7, 0.2..0.7).prop_filter("m <= 16", |g| g.m() <= 16)) {
        let census = enumerate_rooted_forests(&g).unwrap();
        let det = forest::forest_determinant::<f64>(&g).unwrap();
        let total = census.total() as f64;
        prop_assert!((det - total).abs() / total < 1e-6, "det {} census {}", det, total);
    }

    #[test]
    fn resistance_detects_exactly_the_bridges(g in connected_er(2..=7, 0.15..0.6)) {
        let fm = ForestMatrices64::compute(&g).unwrap();
        for m in edge_metrics(&g, &fm) {
            prop_assert_eq!(m.omega >= 1.0 - 1e-9, g.is_bridge(m.edge), "edge {}", m.edge);
        }
    }
}

#[test]
fn downdate_agrees_with_recompute_on_random_pairs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.random_range(3..=30);
        let rho = rng.random_range(0.15..0.7);
        let g = common::er(n, rho, rng.random());
        let non_bridges: Vec<_> = g.edges().iter().copied().filter(|&e| !g.is_bridge(e)).collect();
        if non_bridges.is_empty() {
            continue;
        }
        let e = non_bridges[rng.random_range(0..non_bridges.len())];
        let fm = ForestMatrices64::compute(&g).unwrap();
        let m = fm.metric(e);
        let down = downdate_after_deletion(&fm, e, m.delta, m.omega).unwrap();
        let fresh = ForestMatrices64::compute(&g.without_edge(e).unwrap()).unwrap();
        assert!(down.q().max_abs_diff(fresh.q()) < 1e-8);
        assert!(down.lplus().max_abs_diff(fresh.lplus()) < 1e-8);
        checked += 1;
    }
}

#[test]
fn forest_matrix_does_not_need_connectivity() {
    let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
    let q = forest_matrix::<f64>(&g).unwrap();
    assert!(q.row_sums().iter().all(|s| (s - 1.0).abs() < 1e-12));
    assert!(ForestMatrices::<f64>::compute(&g).is_err());
}
