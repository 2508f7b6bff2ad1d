//! Candidate and actual pole exponents, and the abscissa of convergence.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::ZetaRat;

use super::master::{exponent_table, w_master};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleData {
    pub candidate_set: BTreeSet<i64>,
    pub actual_pole_exponents: BTreeSet<i64>,
    pub abscissa: i64,
    /// Broken expectations, reported rather than asserted.
    pub violations: Vec<String>,
}

/// Exponents `a` of the `T`-linear factors `1 - X^a T` of a reduced `W`.
pub fn linear_pole_exponents(w: &ZetaRat) -> BTreeSet<i64> {
    w.den().iter().filter(|f| f.b == 1).map(|f| f.a).collect()
}

/// `max(1, a + 1)` over the given exponents.
pub fn abscissa_of(exps: &BTreeSet<i64>) -> i64 {
    exps.iter().map(|a| a + 1).max().unwrap_or(1).max(1)
}

pub fn pole_data(h: &Hypergraph) -> PoleData {
    let candidate_set: BTreeSet<i64> = exponent_table(h).into_iter().collect();
    let w = w_master(h, 0);
    let actual = linear_pole_exponents(&w);
    let abscissa = abscissa_of(&actual);
    let n = h.n() as i64;
    // e(∅) = 0 is always a candidate, which matters only when n = 0.
    let lo = (1 - h.m_nonempty() as i64).min(0);

    let mut violations = Vec::new();
    for a in actual.difference(&candidate_set) {
        violations.push(format!("pole exponent {a} is not a candidate"));
    }
    for a in actual.iter().filter(|&&a| a < lo || a > n) {
        violations.push(format!("pole exponent {a} outside [{lo}, {n}]"));
    }
    if abscissa > n + 1 {
        violations.push(format!("abscissa {abscissa} exceeds n + 1 = {}", n + 1));
    }
    if let Some(f) = w.den().iter().find(|f| f.b != 1) {
        violations.push(format!("non-linear factor 1 - X^{} T^{}", f.a, f.b));
    }
    PoleData {
        candidate_set,
        actual_pole_exponents: actual,
        abscissa,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_discrete() {
        for n in 0..=4usize {
            for m in 0..=4u32 {
                let p = pole_data(&Hypergraph::block(n, m));
                assert_eq!(p.abscissa, 1.max(n as i64 - m as i64 + 1), "BH_{n},{m}");
                assert!(p.violations.is_empty(), "{:?}", p.violations);
            }
        }
        for n in 1..=4 {
            assert_eq!(pole_data(&Hypergraph::discrete(n)).abscissa, n as i64 + 1);
        }
    }
}
