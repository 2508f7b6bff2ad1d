use zetagraph::exactalg::{pretty, JsonZeta};
use zetagraph::graphzeta::{kite_build, w_kite};
use zetagraph::ZetaRat;
use zetagraph_cli::expr::parse_zeta;
use zetagraph_cli::fixtures::{fixtures, FixtureKind, Subject};

#[test]
fn every_value_round_trips_through_text_and_json() {
    for f in fixtures() {
        assert_eq!(parse_zeta(&pretty(&f.value)).unwrap(), f.value, "{}", f.id);
        let json = serde_json::to_string(&JsonZeta::from(&f.value)).unwrap();
        let back: JsonZeta = serde_json::from_str(&json).unwrap();
        assert_eq!(ZetaRat::try_from(&back).unwrap(), f.value, "{}", f.id);
    }
}

#[test]
fn counts_match_subjects() {
    for f in fixtures() {
        match &f.subject {
            Subject::Graph(g) => assert_eq!((g.n(), g.m()), (f.n, f.m), "{}", f.id),
            Subject::Hypergraph(h) => assert_eq!((h.n(), h.m()), (f.n, f.m), "{}", f.id),
        }
    }
}

#[test]
fn table1_flags() {
    let minus: Vec<_> = fixtures()
        .iter()
        .filter(|f| f.suite() == "table1" && f.kind == FixtureKind::WMinus)
        .collect();
    assert_eq!(minus.len(), 18);
    assert_eq!(minus.iter().filter(|f| f.cograph).count(), 17);
    let not_kites: Vec<&str> = minus
        .iter()
        .filter(|f| f.kite.is_none())
        .map(|f| f.id.as_str())
        .collect();
    assert_eq!(
        not_kites,
        ["table1.K2+K2.minus", "table1.P4.minus", "table1.C4.minus"]
    );
}

#[test]
fn kite_rows_agree_with_closed_form() {
    for f in fixtures().iter().filter(|f| f.kind == FixtureKind::WMinus) {
        if let Some(k) = &f.kite {
            assert_eq!(w_kite(k), f.value, "{}", f.id);
            let rebuilt = kite_build(k);
            assert_eq!(
                rebuilt.canonical_code(),
                f.graph().unwrap().canonical_code(),
                "{}",
                f.id
            );
        }
    }
}

#[test]
fn denominators_have_expected_shapes() {
    let ninja = fixtures().iter().find(|f| f.id == "eq.ninja").unwrap();
    assert!(!ninja.value.is_t_linear());
    for f in fixtures().iter().filter(|f| f.kind != FixtureKind::WPlus) {
        if f.id != "eq.ninja" {
            assert!(f.value.is_t_linear(), "{}", f.id);
        }
    }
}
