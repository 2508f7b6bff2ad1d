//! Isomorphism-class representatives of small graphs.

use std::collections::BTreeMap;

use super::{cotree, SimpleGraph};

fn labelled(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..(1 << pairs.len())).map(move |code| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| code >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    })
}

/// One graph per isomorphism class on `n ≤ 6` vertices, ordered by
/// canonical code.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 6, "labelled enumeration is only meant for tiny n");
    let mut reps = BTreeMap::new();
    for g in labelled(n) {
        reps.entry(g.canonical_code()).or_insert(g);
    }
    reps.into_values().collect()
}

/// One cograph per isomorphism class on `n ≤ 7` vertices, keyed by
/// cotree shape.
pub fn all_cographs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 7, "labelled enumeration is only meant for tiny n");
    let mut reps = BTreeMap::new();
    for g in labelled(n) {
        if let Ok(t) = cotree(&g) {
            reps.entry(t.shape()).or_insert(g);
        }
    }
    reps.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
        let co: Vec<usize> = (1..=5).map(|n| all_cographs(n).len()).collect();
        assert_eq!(co, vec![1, 2, 4, 10, 24]);
        let no_isolated = all_graphs(5)
            .iter()
            .filter(|g| (0..5).all(|v| g.neighbours(v) != 0))
            .count();
        assert_eq!(no_isolated, 23);
    }
}
