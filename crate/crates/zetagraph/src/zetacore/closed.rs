//! Closed forms for named families and the operation calculus.

use crate::{BiPolyQ, GeoFactor, Laurent, ZetaRat};

use super::master::flag_sum;

/// Staircase hypergraph with multiplicities `m_0, .., m_n` on the prefix
/// supports `∅, [1], .., [n]`.
pub fn w_staircase(mults: &[u32]) -> ZetaRat {
    assert!(!mults.is_empty(), "staircase needs m_0");
    let n = mults.len() - 1;
    let mut acc = ZetaRat::geo_inv(0, 1);
    for j in 0..n {
        let s: i64 = mults[j + 1..].iter().map(|&m| m as i64).sum();
        let e = n as i64 - j as i64 - s;
        acc = acc.mul(&ZetaRat::geo_ratio(e - 1, 1, e, 1));
    }
    acc
}

/// `W` of `BH_{n_1,m_1} ⊕ .. ⊕ BH_{n_r,m_r}` by a flag sum over `r` blocks.
pub fn w_block_disjoint(nvec: &[usize], mvec: &[u32]) -> ZetaRat {
    assert_eq!(nvec.len(), mvec.len());
    let r = nvec.len();
    let exps: Vec<i64> = (0..(1u64 << r))
        .map(|j| {
            (0..r)
                .filter(|i| j >> i & 1 == 1)
                .map(|i| nvec[i] as i64 - mvec[i] as i64)
                .sum()
        })
        .collect();
    let coef = |top: u64| {
        let mut c = Laurent::one();
        for i in (0..r).filter(|i| top >> i & 1 == 1) {
            c = &c * &Laurent::from_terms([(0, 1i128), (-(nvec[i] as i64), -1)]);
        }
        c
    };
    flag_sum(r, &exps, coef).0
}

/// `W` of `RE_{n_1,m_1} ⊛ .. ⊛ RE_{n_r,m_r}`.
pub fn w_codisjoint(nvec: &[usize], mvec: &[u32]) -> ZetaRat {
    assert_eq!(nvec.len(), mvec.len());
    let n: i64 = nvec.iter().map(|&v| v as i64).sum();
    let m: i64 = mvec.iter().map(|&v| v as i64).sum();
    let mut inner = vec![ZetaRat::one()];
    for (&ni, &mi) in nvec.iter().zip(mvec) {
        let (ni, mi) = (ni as i64, mi as i64);
        let p = BiPolyQ::from_terms([(ni, 0, crate::rat(1)), (0, 0, crate::rat(-1))]);
        let q = BiPolyQ::from_terms([(mi, 0, crate::rat(1)), (0, 0, crate::rat(-1))]);
        inner.push(ZetaRat::new(&p * &q, [GeoFactor::new(ni + mi - m, 1, 1)]).neg());
    }
    let inner = ZetaRat::sum(inner.iter());
    let bracket = ZetaRat::one().sub(&inner.mul_poly(&BiPolyQ::monomial(-m, 1, crate::rat(1))));
    bracket.mul(&ZetaRat::new(
        BiPolyQ::one(),
        [GeoFactor::new(0, 1, 1), GeoFactor::new(n - m, 1, 1)],
    ))
}

/// `w_i(X, X^{-s} T) (1 - X^{-s} T) (1 - X^{e} T)`.
fn twisted(w: &ZetaRat, s: i64, e: i64) -> ZetaRat {
    w.subst_t_scale(-s)
        .mul_poly(&(&BiPolyQ::geo(-s, 1) * &BiPolyQ::geo(e, 1)))
}

/// `W_{H_1 ⊛ H_2}` from `W_{H_1}`, `W_{H_2}` and their sizes.
pub fn w_complete_union(
    w1: &ZetaRat,
    n1: usize,
    m1: u32,
    w2: &ZetaRat,
    n2: usize,
    m2: u32,
) -> ZetaRat {
    let n = (n1 + n2) as i64;
    let m = (m1 + m2) as i64;
    let mut head = BiPolyQ::monomial(-m, 1, crate::rat(1));
    head.add_term(0, 0, crate::rat(-1));
    let terms = [
        ZetaRat::from_poly(head),
        twisted(w1, m2 as i64, n1 as i64 - m),
        twisted(w2, m1 as i64, n2 as i64 - m),
    ];
    let outer = ZetaRat::new(
        BiPolyQ::one(),
        [GeoFactor::new(0, 1, 1), GeoFactor::new(n - m, 1, 1)],
    );
    ZetaRat::sum(terms.iter()).mul(&outer)
}

/// `W_{BH_{n_1,m_1} ⊛ H_2}`: only the second summand survives.
pub fn w_complete_union_block(n1: usize, m1: u32, w2: &ZetaRat, n2: usize, m2: u32) -> ZetaRat {
    let n = (n1 + n2) as i64;
    let m = (m1 + m2) as i64;
    let outer = ZetaRat::new(
        BiPolyQ::one(),
        [GeoFactor::new(0, 1, 1), GeoFactor::new(n - m, 1, 1)],
    );
    twisted(w2, m1 as i64, n2 as i64 - m).mul(&outer)
}

/// Row and column insertions on an incidence matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowColOp {
    OneRow,
    ZeroRow,
    OneCol,
    ZeroCol,
}

impl RowColOp {
    /// Size of the resulting hypergraph.
    pub fn apply_size(self, n: usize, m: u32) -> (usize, u32) {
        match self {
            RowColOp::OneRow | RowColOp::ZeroRow => (n + 1, m),
            RowColOp::OneCol | RowColOp::ZeroCol => (n, m + 1),
        }
    }
}

/// `W` after inserting a row or column into an `(n, m)` hypergraph.
pub fn w_row_col_ops(w: &ZetaRat, n: usize, m: u32, op: RowColOp) -> ZetaRat {
    let e = n as i64 - m as i64;
    match op {
        RowColOp::OneRow => w.mul(&ZetaRat::geo_ratio(e, 1, e + 1, 1)),
        RowColOp::ZeroRow => w.subst_t_scale(1),
        RowColOp::OneCol => w.subst_t_scale(-1).mul(&ZetaRat::geo_ratio(-1, 1, 0, 1)),
        RowColOp::ZeroCol => w.clone(),
    }
}
