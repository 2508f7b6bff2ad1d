//! Zeta functions against brute-force enumeration over `Z/p^k`.

use proptest::prelude::*;
use zetagraph::graphzeta::{all_cographs, class_number_poly, w_minus, SimpleGraph};
use zetagraph::hypergraph::Hypergraph;
use zetagraph::oracle::{
    ask_bruteforce, ask_dual, conjugacy_count, verify_series, FinRing, ModuleSpec, DEFAULT_BUDGET,
};
use zetagraph::zetacore::w_master;
use zetagraph::Rational;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hypergraph_series(n in 1usize..=3, sups in prop::collection::vec((1u64..8, 1u32..=2), 0..3), p in prop::sample::select(vec![2u64, 3])) {
        let sups: Vec<(u64, u32)> = sups.into_iter().map(|(s, m)| (s & ((1 << n) - 1), m)).collect();
        let h = Hypergraph::new(n, sups).unwrap();
        let spec = ModuleSpec::incidence(&h);
        prop_assert!(verify_series(&w_master(&h, 0), &spec, p, 2, 2_000_000).is_ok());
    }

    #[test]
    fn column_order_is_irrelevant(n in 1usize..=3, sups in prop::collection::vec(1u64..8, 1..4)) {
        let sups: Vec<Vec<usize>> = sups.iter().map(|s| (0..n).filter(|v| s >> v & 1 == 1).collect()).collect();
        let mut rev = sups.clone();
        rev.reverse();
        let a = ModuleSpec::incidence(&Hypergraph::from_hyperedges(n, &sups).unwrap());
        let b = ModuleSpec::incidence(&Hypergraph::from_hyperedges(n, &rev).unwrap());
        let ring = FinRing::new(2, 2).unwrap();
        prop_assert_eq!(ask_dual(&a, ring, DEFAULT_BUDGET), ask_dual(&b, ring, DEFAULT_BUDGET));
    }
}

#[test]
fn cograph_series_at_two_and_three() {
    for n in 1..=4 {
        for g in all_cographs(n) {
            let w = w_minus(&g).unwrap();
            let spec = ModuleSpec::adj_minus(&g);
            for p in [2, 3] {
                verify_series(&w, &spec, p, 2, 2_000_000)
                    .unwrap_or_else(|e| panic!("{:?} p={p}: {e}", g.edges()));
            }
        }
    }
}

#[test]
fn baer_bridge() {
    for g in [
        SimpleGraph::complete(2),
        SimpleGraph::path(3),
        SimpleGraph::complete(3),
        SimpleGraph::star(4),
    ] {
        for p in [2u64, 3] {
            if (p as f64).powi((g.n() + g.m()) as i32) > (1u64 << 20) as f64 {
                continue;
            }
            let classes = conjugacy_count(&g, p).unwrap();
            let ask = ask_bruteforce(
                &ModuleSpec::adj_minus(&g),
                FinRing::new(p, 1).unwrap(),
                DEFAULT_BUDGET,
            )
            .unwrap();
            let scaled = ask * Rational::from_integer(p.pow(g.m() as u32).into());
            assert_eq!(
                scaled,
                Rational::from_integer(classes.into()),
                "{:?} p={p}",
                g.edges()
            );
            let poly = class_number_poly(&g, 1).unwrap();
            assert_eq!(
                poly.eval(&Rational::from_integer(p.into())),
                Rational::from_integer(classes.into())
            );
        }
    }
}
