//! The weak-order sum and the subset recursion.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::hypergraph::Hypergraph;
use crate::{BiPoly, BiPolyQ, GeoFactor, Laurent, Rational, ZetaRat};

/// Integer polynomials for the accumulation; converted to `Q` once.
type IntPoly = BiPoly<i128>;

/// Size of the flag stream behind a [`flag_sum`] evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlagSumStats {
    pub flags: u64,
    pub classes: usize,
}

/// `Σ_y coef(sup y) ∏_{J∈y} gp(X^{exps[J]} T)` over every flag `y` of an
/// `n`-set (empty flag and flags through `∅` included).
///
/// Flags are grouped by their top member and the multiset of exponents, so
/// the rational-function work only touches one term per group.
pub(crate) fn flag_sum<C>(n: usize, exps: &[i64], coef: C) -> (ZetaRat, FlagSumStats)
where
    C: Fn(u64) -> Laurent<i128> + Sync,
{
    assert_eq!(exps.len(), 1usize << n);
    let lo = *exps.iter().min().unwrap();
    let hi = *exps.iter().max().unwrap();
    let width = (hi - lo + 1) as usize;
    let slot = |j: u64| (exps[j as usize] - lo) as usize;

    // One task per top member; the empty flag is added separately.
    let per_top: Vec<(u64, HashMap<Vec<u8>, u64>)> = (0..(1u64 << n))
        .into_par_iter()
        .map(|top| {
            let mut counts = vec![0u8; width];
            let mut groups = HashMap::new();
            counts[slot(top)] += 1;
            groups.insert(counts.clone(), 1u64);
            below(top, &slot, &mut counts, &mut groups);
            (top, groups)
        })
        .collect();

    // Deterministic merge keyed by top member.
    let mut merged: BTreeMap<u64, BTreeMap<Vec<u8>, u64>> = BTreeMap::new();
    merged.entry(0).or_default().insert(vec![0u8; width], 1);
    let mut stats = FlagSumStats {
        flags: 1,
        classes: 0,
    };
    for (top, groups) in per_top {
        let slotmap = merged.entry(top).or_default();
        for (k, c) in groups {
            stats.flags += c;
            *slotmap.entry(k).or_insert(0) += c;
        }
    }
    stats.classes = merged.values().map(BTreeMap::len).sum();

    let mut maxc = vec![0u32; width];
    for groups in merged.values() {
        for k in groups.keys() {
            for (m, &c) in maxc.iter_mut().zip(k) {
                *m = (*m).max(c as u32);
            }
        }
    }
    let mut powers: Vec<Vec<IntPoly>> = Vec::with_capacity(width);
    for (i, &m) in maxc.iter().enumerate() {
        let a = lo + i as i64;
        let mut row = vec![IntPoly::one()];
        for k in 1..=m as usize {
            let next = row[k - 1].mul_geo(a, 1);
            row.push(next);
        }
        powers.push(row);
    }

    let tops: Vec<(&u64, &BTreeMap<Vec<u8>, u64>)> = merged.iter().collect();
    let parts: Vec<IntPoly> = tops
        .par_iter()
        .map(|(top, groups)| {
            let mut acc = IntPoly::zero();
            for (k, &count) in groups.iter() {
                let mut term = IntPoly::one();
                let (mut xe, mut te) = (0i64, 0u32);
                for (i, &c) in k.iter().enumerate() {
                    xe += (lo + i as i64) * c as i64;
                    te += c as u32;
                    let rest = maxc[i] - c as u32;
                    if rest > 0 {
                        term = &term * &powers[i][rest as usize];
                    }
                }
                acc = &acc + &term.shift(xe, te).scale(&(count as i128));
            }
            let c = coef(**top);
            &acc * &BiPoly::from_t_coeffs(vec![c])
        })
        .collect();
    let mut num = IntPoly::zero();
    for p in &parts {
        num = &num + p;
    }
    let den = maxc
        .iter()
        .enumerate()
        .map(|(i, &m)| GeoFactor::new(lo + i as i64, 1, m));
    (ZetaRat::new(to_rational(&num), den), stats)
}

fn below<S: Fn(u64) -> usize>(
    top: u64,
    slot: &S,
    counts: &mut Vec<u8>,
    groups: &mut HashMap<Vec<u8>, u64>,
) {
    if top == 0 {
        return;
    }
    let mut j = (top - 1) & top;
    loop {
        let s = slot(j);
        counts[s] += 1;
        match groups.get_mut(counts.as_slice()) {
            Some(c) => *c += 1,
            None => {
                groups.insert(counts.clone(), 1);
            }
        }
        below(j, slot, counts, groups);
        counts[s] -= 1;
        if j == 0 {
            break;
        }
        j = (j - 1) & top;
    }
}

pub(crate) fn to_rational(p: &IntPoly) -> BiPolyQ {
    BiPolyQ::from_terms(
        p.terms()
            .map(|(x, t, &c)| (x, t, Rational::from_integer(c.into()))),
    )
}

/// `(1 - X^{-1})^k` over the integers.
pub(crate) fn one_minus_inv_x_pow(k: u32) -> Laurent<i128> {
    Laurent::from_terms([(0, 1i128), (-1, -1)]).pow(k)
}

/// `(1 - X^{n-m} T) / (1 - X^{d+n-m} T)`; trivial for `d = 0`.
fn socle_factor(h: &Hypergraph, d: u32) -> ZetaRat {
    let e = h.n() as i64 - h.m() as i64;
    ZetaRat::geo_ratio(e, 1, e + d as i64, 1)
}

/// Exponents `|J| - Σ_{I∩J≠∅} μ_I` for every `J ⊆ V`, indexed by bitmask.
pub(crate) fn exponent_table(h: &Hypergraph) -> Vec<i64> {
    (0..(1u64 << h.n())).map(|j| h.exponent(j)).collect()
}

/// `W_H(X, T)` with a socle of dimension `d` by the weak-order sum.
pub fn w_master(h: &Hypergraph, d: u32) -> ZetaRat {
    w_master_with_stats(h, d).0
}

/// As [`w_master`], also reporting how many flags were summed.
pub fn w_master_with_stats(h: &Hypergraph, d: u32) -> (ZetaRat, FlagSumStats) {
    let exps = exponent_table(h);
    let (sum, stats) = flag_sum(h.n(), &exps, |top| one_minus_inv_x_pow(top.count_ones()));
    (sum.mul(&socle_factor(h, d)), stats)
}

/// `W_H(X, T)` by the memoized subset recursion.
pub fn w_recursive(h: &Hypergraph, d: u32) -> ZetaRat {
    let n = h.n();
    let full = h.full_mask();
    let size = 1usize << n;
    let gps: Vec<ZetaRat> = (0..size as u64)
        .map(|j| ZetaRat::gp(h.exponent(full & !j)))
        .collect();
    let weights: Vec<ZetaRat> = (0..=n as u32)
        .map(|k| {
            ZetaRat::from_poly(to_rational(&BiPoly::from_t_coeffs(vec![
                one_minus_inv_x_pow(k),
            ])))
        })
        .collect();

    let mut order: Vec<u64> = (0..size as u64).collect();
    order.sort_by_key(|s| s.count_ones());
    let mut r: Vec<Option<ZetaRat>> = vec![None; size];
    for s in order {
        let mut terms = vec![ZetaRat::one()];
        if s != 0 {
            let mut j = (s - 1) & s;
            loop {
                let rj = r[j as usize].as_ref().expect("smaller subsets come first");
                let k = (s.count_ones() - j.count_ones()) as usize;
                terms.push(weights[k].mul(&gps[j as usize]).mul(rj));
                if j == 0 {
                    break;
                }
                j = (j - 1) & s;
            }
        }
        r[s as usize] = Some(ZetaRat::sum(terms.iter()));
    }
    let top = r[full as usize].take().unwrap();
    top.mul(&socle_factor(h, d)).mul(&ZetaRat::geo_inv(0, 1))
}

/// Which route [`w_hypergraph`] takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Recursion from 9 vertices on, weak-order sum below.
    Auto,
    Sum,
    Recursion,
}

pub fn w_hypergraph(h: &Hypergraph, d: u32, route: Route) -> ZetaRat {
    match route {
        Route::Sum => w_master(h, d),
        Route::Recursion => w_recursive(h, d),
        Route::Auto if h.n() >= 9 => w_recursive(h, d),
        Route::Auto => w_master(h, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn block_formula(n: i64, m: i64) -> ZetaRat {
        ZetaRat::new(
            BiPolyQ::geo(-m, 1),
            [GeoFactor::new(0, 1, 1), GeoFactor::new(n - m, 1, 1)],
        )
    }

    #[test]
    fn block_hypergraphs() {
        for n in 0..=4usize {
            for m in 0..=4u32 {
                let h = Hypergraph::block(n, m);
                let want = block_formula(n as i64, m as i64);
                assert!(w_master(&h, 0).same_value(&want), "BH_{n},{m}");
                assert!(w_recursive(&h, 0).same_value(&want), "BH_{n},{m}");
            }
        }
    }

    #[test]
    fn socle_only() {
        for m in 0..=3u32 {
            for d in 0..=3u32 {
                let h = Hypergraph::new(0, [(0u64, m)]).unwrap();
                let want = block_formula(d as i64, m as i64);
                assert!(w_master(&h, d).same_value(&want), "d={d} m={m}");
                assert!(w_recursive(&h, d).same_value(&want), "d={d} m={m}");
            }
        }
    }

    #[test]
    fn discrete_point() {
        let w = w_master(&Hypergraph::discrete(1), 0);
        assert_eq!(w, ZetaRat::geo_inv(1, 1));
        let (_, stats) = w_master_with_stats(&Hypergraph::discrete(3), 0);
        assert_eq!(stats.flags, 4 * 13);
    }

    #[test]
    fn k2_row() {
        let h = Hypergraph::block(2, 1);
        let want = ZetaRat::new(
            BiPolyQ::geo(-1, 1),
            [GeoFactor::new(0, 1, 1), GeoFactor::new(1, 1, 1)],
        );
        assert_eq!(w_master(&h, 0), want);
        assert_eq!(w_recursive(&h, 0), want);
        assert_eq!(
            w_master(&h, 0).t_coeff(2).eval(&rat(2)),
            crate::ratio(11, 2)
        );
    }
}
