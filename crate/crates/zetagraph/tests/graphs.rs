//! Cographs, models, both `W⁻` routes, kites and class counting.

use proptest::prelude::*;
use zetagraph::graphzeta::{
    all_cographs, alpha_cc, alpha_kite, class_number_poly, cotree, find_p4, kite_build,
    kite_counts, kite_parse, model, nonneg_check, w_kite, w_minus, w_minus_join_route, Composition,
    SimpleGraph,
};
use zetagraph::rat;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let edges: Vec<_> = all
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn recognition_matches_p4_scan(g in graph(7)) {
        prop_assert_eq!(cotree(&g).is_ok(), find_p4(&g).is_none());
        if let Ok(t) = cotree(&g) {
            prop_assert_eq!(t.vertex_mask(), g.full_mask());
        }
    }

    #[test]
    fn model_counts(g in graph(6)) {
        if let Ok(m) = model(&g) {
            prop_assert_eq!(m.hypergraph.m(), g.n() - m.components);
            prop_assert_eq!(m.hypergraph.incidences(), 2 * g.m());
        }
    }

    #[test]
    fn complement_of_cograph_is_cograph(g in graph(6)) {
        prop_assert_eq!(cotree(&g).is_ok(), cotree(&g.complement()).is_ok());
    }
}

#[test]
fn both_routes_on_six_vertex_cographs() {
    let graphs = all_cographs(6);
    assert_eq!(graphs.len(), 66);
    for g in &graphs {
        let w = w_minus(g).unwrap();
        assert!(
            w.same_value(&w_minus_join_route(g).unwrap()),
            "{:?}",
            g.edges()
        );
        assert!(w.funceq_check(g.n() as i64));
        assert!(w.reduced_zeta_check(10));
    }
}

#[test]
fn kites_round_trip() {
    for total in 1..=6 {
        for k in Composition::all_of(total) {
            let g = kite_build(&k);
            assert_eq!(kite_parse(&g).unwrap(), k);
            assert_eq!(kite_counts(&k), (g.n(), g.m()));
            assert!(w_kite(&k).same_value(&w_minus(&g).unwrap()), "{k}");
            assert_eq!(alpha_kite(&k), alpha_cc(&g).unwrap(), "{k}");
        }
    }
}

#[test]
fn class_numbers_small() {
    let g = SimpleGraph::star(3);
    assert!(class_number_poly(&g, 0).unwrap().is_one());
    for n in 1..=4 {
        let d = class_number_poly(&SimpleGraph::discrete(n), 2).unwrap();
        assert_eq!(d.eval(&rat(3)), rat(3i64.pow(2 * n as u32)));
        assert!(nonneg_check(&SimpleGraph::complete(n), 3).unwrap());
    }
}
