//! Average kernel sizes of matrix modules over `Z/p^k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::graphzeta::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::{Rational, ZetaRat};

use super::{kernel_size, OracleError};

/// Enumeration budget used when callers have no preference.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// The ring `Z/p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinRing {
    p: u64,
    k: u32,
}

impl FinRing {
    pub const MAX_K: u32 = 3;

    pub fn new(p: u64, k: u32) -> Result<Self, OracleError> {
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        if k > Self::MAX_K {
            return Err(OracleError::RingTooLarge { p, k });
        }
        Ok(FinRing { p, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.k)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Which matrix module is averaged over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Incidence(Hypergraph),
    AdjMinus(SimpleGraph),
    /// Symmetric adjacency with free diagonal entries at `loops`.
    AdjPlus {
        graph: SimpleGraph,
        loops: Vec<usize>,
    },
}

/// One free parameter of the module: the entries it occupies with signs.
pub type Placement = Vec<(usize, usize, i64)>;

/// A module of `rows × cols` matrices, one free ring element per placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub kind: ModuleKind,
    pub rows: usize,
    pub cols: usize,
    pub free_positions: Vec<Placement>,
}

impl ModuleSpec {
    /// Entry `(v, e)` free iff `v` lies in the support of the `e`-th column.
    pub fn incidence(h: &Hypergraph) -> Self {
        let mat = h.to_incidence();
        let mut free = Vec::new();
        for (v, row) in mat.entries.iter().enumerate() {
            for (e, &bit) in row.iter().enumerate() {
                if bit == 1 {
                    free.push(vec![(v, e, 1)]);
                }
            }
        }
        ModuleSpec {
            kind: ModuleKind::Incidence(h.clone()),
            rows: mat.rows,
            cols: mat.cols,
            free_positions: free,
        }
    }

    /// `+x` at `(i, j)` and `-x` at `(j, i)` for every edge `i < j`.
    pub fn adj_minus(g: &SimpleGraph) -> Self {
        let free = g
            .edges()
            .into_iter()
            .map(|(i, j)| vec![(i, j, 1), (j, i, -1)])
            .collect();
        ModuleSpec {
            kind: ModuleKind::AdjMinus(g.clone()),
            rows: g.n(),
            cols: g.n(),
            free_positions: free,
        }
    }

    /// `x` at `(i, j)` and `(j, i)` for every edge, `x` at `(v, v)` for loops.
    pub fn adj_plus(g: &SimpleGraph, loops: &[usize]) -> Self {
        let mut free: Vec<Placement> = g
            .edges()
            .into_iter()
            .map(|(i, j)| vec![(i, j, 1), (j, i, 1)])
            .collect();
        let mut loops = loops.to_vec();
        loops.sort_unstable();
        loops.dedup();
        free.extend(loops.iter().map(|&v| vec![(v, v, 1)]));
        let kind = ModuleKind::AdjPlus {
            graph: g.clone(),
            loops,
        };
        ModuleSpec {
            kind,
            rows: g.n(),
            cols: g.n(),
            free_positions: free,
        }
    }

    fn check_ring(&self, ring: FinRing) -> Result<(), OracleError> {
        if matches!(self.kind, ModuleKind::AdjPlus { .. }) && ring.p == 2 {
            return Err(OracleError::EvenCharForSymmetric);
        }
        Ok(())
    }

    /// Matrix for the parameter values `c`.
    pub fn matrix(&self, c: &[i64]) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (place, &v) in self.free_positions.iter().zip(c) {
            for &(i, j, s) in place {
                m[i][j] += BigInt::from(s * v);
            }
        }
        m
    }

    /// Linear map `c ↦ x A(c)` as a `#free × cols` matrix.
    fn dual_matrix(&self, x: &[i64]) -> Vec<Vec<BigInt>> {
        self.free_positions
            .iter()
            .map(|place| {
                let mut row = vec![BigInt::zero(); self.cols];
                for &(i, j, s) in place {
                    row[j] += BigInt::from(s * x[i]);
                }
                row
            })
            .collect()
    }
}

fn digits(mut code: u128, base: u64, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let d = (code % base as u128) as i64;
            code /= base as u128;
            d
        })
        .collect()
}

fn count(base: u64, len: usize, budget: u128) -> Result<u128, OracleError> {
    let mut total: u128 = 1;
    for _ in 0..len {
        total = total
            .checked_mul(base as u128)
            .filter(|&t| t <= budget)
            .ok_or(OracleError::BudgetExceeded {
                what: format!("{base}^{len}"),
                budget,
            })?;
    }
    Ok(total)
}

fn pow_big(base: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Average of `|ker A|` over every matrix of the module, by enumeration.
pub fn ask_bruteforce(
    spec: &ModuleSpec,
    ring: FinRing,
    budget: u128,
) -> Result<Rational, OracleError> {
    spec.check_ring(ring)?;
    if ring.k == 0 {
        return Ok(Rational::one());
    }
    let q = ring.size();
    let free = spec.free_positions.len();
    let total = count(q, free, budget)?;
    let sum: BigInt = (0..total)
        .into_par_iter()
        .map(|code| kernel_size(&spec.matrix(&digits(code, q, free)), ring.p, ring.k))
        .sum();
    Ok(Rational::new(sum, pow_big(q, free)))
}

/// The same average computed over vectors instead of matrices:
/// `Σ_x |{A : xA = 0}| / |M|`.
pub fn ask_dual(spec: &ModuleSpec, ring: FinRing, budget: u128) -> Result<Rational, OracleError> {
    spec.check_ring(ring)?;
    if ring.k == 0 {
        return Ok(Rational::one());
    }
    let q = ring.size();
    let total = count(q, spec.rows, budget)?;
    let sum: BigInt = (0..total)
        .into_par_iter()
        .map(|code| {
            kernel_size(
                &spec.dual_matrix(&digits(code, q, spec.rows)),
                ring.p,
                ring.k,
            )
        })
        .sum();
    Ok(Rational::new(sum, pow_big(q, spec.free_positions.len())))
}

/// Whichever of the two enumerations fits the budget, primal first.
pub fn ask(spec: &ModuleSpec, ring: FinRing, budget: u128) -> Result<Rational, OracleError> {
    match ask_bruteforce(spec, ring, budget) {
        Err(OracleError::BudgetExceeded { .. }) => ask_dual(spec, ring, budget),
        other => other,
    }
}

/// Compares `T^k` coefficients of `w` at `X = p` with the enumerated
/// averages for `k = 0..=kmax`; returns the agreed values.
pub fn verify_series(
    w: &ZetaRat,
    spec: &ModuleSpec,
    p: u64,
    kmax: u32,
    budget: u128,
) -> Result<Vec<Rational>, OracleError> {
    let series = w.series(kmax as usize);
    let x = Rational::from_integer(p.into());
    let mut out = Vec::new();
    for k in 0..=kmax {
        let expected = series.coeff(k as usize).eval(&x);
        let got = ask(spec, FinRing::new(p, k)?, budget)?;
        if expected != got {
            return Err(OracleError::Mismatch {
                k,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
        out.push(got);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zetacore::w_master;
    use crate::{rat, ratio};

    #[test]
    fn small_averages() {
        let r2 = FinRing::new(2, 1).unwrap();
        let bh11 = ModuleSpec::incidence(&Hypergraph::block(1, 1));
        assert_eq!(
            ask_bruteforce(&bh11, r2, DEFAULT_BUDGET).unwrap(),
            ratio(3, 2)
        );
        let k2 = ModuleSpec::adj_minus(&SimpleGraph::complete(2));
        let z4 = FinRing::new(2, 2).unwrap();
        assert_eq!(
            ask_bruteforce(&k2, z4, DEFAULT_BUDGET).unwrap(),
            ratio(11, 2)
        );
        let k3 = ModuleSpec::adj_plus(&SimpleGraph::complete(3), &[]);
        assert_eq!(
            ask_bruteforce(&k3, FinRing::new(3, 1).unwrap(), DEFAULT_BUDGET).unwrap(),
            ratio(89, 27)
        );
        assert_eq!(
            ask_bruteforce(&k3, r2, DEFAULT_BUDGET),
            Err(OracleError::EvenCharForSymmetric)
        );
        assert_eq!(
            ask_bruteforce(&k3, FinRing::new(3, 0).unwrap(), DEFAULT_BUDGET).unwrap(),
            rat(1)
        );
    }

    #[test]
    fn dual_agrees_with_primal() {
        let specs = [
            ModuleSpec::incidence(
                &Hypergraph::from_hyperedges(3, &[vec![0, 1], vec![1, 2], vec![0, 1, 2]]).unwrap(),
            ),
            ModuleSpec::adj_minus(&SimpleGraph::path(4)),
            ModuleSpec::adj_plus(&SimpleGraph::star(3), &[0, 2]),
        ];
        for spec in &specs {
            for (p, k) in [(2, 1), (2, 2), (3, 1)] {
                let ring = FinRing::new(p, k).unwrap();
                assert_eq!(
                    ask_bruteforce(spec, ring, DEFAULT_BUDGET),
                    ask_dual(spec, ring, DEFAULT_BUDGET)
                );
            }
        }
    }

    #[test]
    fn budget_and_rings() {
        let spec = ModuleSpec::adj_minus(&SimpleGraph::complete(4));
        let ring = FinRing::new(2, 1).unwrap();
        assert!(matches!(
            ask_bruteforce(&spec, ring, 10),
            Err(OracleError::BudgetExceeded { .. })
        ));
        assert_eq!(
            ask(&spec, ring, 16),
            ask_bruteforce(&spec, ring, DEFAULT_BUDGET)
        );
        assert_eq!(FinRing::new(4, 1), Err(OracleError::NotPrime(4)));
        assert!(FinRing::new(2, 4).is_err());
    }

    #[test]
    fn series_bridge() {
        let h = Hypergraph::block(2, 1);
        let vals = verify_series(
            &w_master(&h, 0),
            &ModuleSpec::incidence(&h),
            2,
            2,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(vals, vec![rat(1), ratio(5, 2), ratio(11, 2)]);
        let wrong = ZetaRat::geo_inv(1, 1);
        assert!(matches!(
            verify_series(&wrong, &ModuleSpec::incidence(&h), 2, 1, DEFAULT_BUDGET),
            Err(OracleError::Mismatch { k: 1, .. })
        ));
    }
}
