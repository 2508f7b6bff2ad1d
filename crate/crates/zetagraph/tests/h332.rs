use std::time::Instant;

use zetagraph::hypergraph::Hypergraph;
use zetagraph::zetacore::{
    pole_data, w_block_disjoint, w_complete_union_block, w_master_with_stats, w_recursive,
    w_row_col_ops, RowColOp,
};
use zetagraph::{BiPolyQ, GeoFactor, ZetaRat};

fn h332() -> ZetaRat {
    let num = BiPolyQ::from_terms(
        [
            (0, 0, 1),
            (-6, 1, 1),
            (-4, 1, -2),
            (-3, 1, -2),
            (-1, 1, 1),
            (-7, 2, 1),
        ]
        .map(|(x, t, c)| (x, t, zetagraph::rat(c))),
    );
    ZetaRat::new(num, [GeoFactor::new(0, 1, 2), GeoFactor::new(1, 1, 1)])
}

fn m11() -> Hypergraph {
    Hypergraph::block(2, 2)
        .complete_union(&Hypergraph::block_disjoint(&[3, 3], &[2, 2]).insert_zero_col())
}

#[test]
fn weak_order_sum_over_all_flags() {
    let start = Instant::now();
    let (w, stats) = w_master_with_stats(&m11(), 0);
    eprintln!(
        "M11: {} flags, {} groups, {:?}",
        stats.flags,
        stats.classes,
        start.elapsed()
    );
    assert_eq!(stats.flags, 2_183_340);
    assert_eq!(w, h332());
}

#[test]
fn recursion_and_operation_chain() {
    assert_eq!(w_recursive(&m11(), 0), h332());
    let pair = w_block_disjoint(&[3, 3], &[2, 2]);
    let padded = w_row_col_ops(&pair, 6, 4, RowColOp::ZeroCol);
    assert_eq!(w_complete_union_block(2, 2, &padded, 6, 5), h332());
}

#[test]
fn m11_poles() {
    let p = pole_data(&m11());
    assert_eq!(
        p.actual_pole_exponents.into_iter().collect::<Vec<_>>(),
        vec![0, 1]
    );
    assert_eq!(p.abscissa, 2);
    assert!(p.violations.is_empty());
}
