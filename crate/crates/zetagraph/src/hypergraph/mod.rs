//! Hypergraphs as multiplicity maps over vertex subsets, the named families,
//! and the structural operations (disjoint union, complete union,
//! reflection, row and column insertion).

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

/// Largest supported vertex count; supports are `u64` bitmasks.
pub const MAX_VERTICES: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("malformed incidence matrix: {0}")]
    MalformedMatrix(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("invalid hypergraph JSON: {0}")]
    Json(String),
}

/// Hypergraph on vertices `0..n`; `mu[I]` counts hyperedges with support `I`.
/// Hyperedges are unlabelled, so equal multiplicity maps mean equal values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    mu: BTreeMap<u64, u32>,
}

/// 0/1 incidence grid with `rows = n` and `cols = m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    /// Checks shape and entries; `cols` is taken from the first row.
    pub fn from_rows(entries: Vec<Vec<u8>>) -> Result<Self, HypergraphError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(HypergraphError::MalformedMatrix(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(v) = row.iter().find(|&&v| v > 1) {
                return Err(HypergraphError::MalformedMatrix(format!(
                    "entry {v} is not 0/1"
                )));
            }
        }
        Ok(IncidenceMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Empty `rows × 0` matrix.
    pub fn empty(rows: usize) -> Self {
        IncidenceMatrix {
            rows,
            cols: 0,
            entries: vec![Vec::new(); rows],
        }
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `{0, .., i-1}` as a bitmask.
pub fn prefix_mask(i: usize) -> u64 {
    if i >= 64 {
        u64::MAX
    } else {
        (1u64 << i) - 1
    }
}

fn check_n(n: usize) -> Result<(), HypergraphError> {
    if n > MAX_VERTICES {
        Err(HypergraphError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

impl Hypergraph {
    /// Hypergraph from `(support, multiplicity)` pairs; zero counts are dropped.
    pub fn new<I: IntoIterator<Item = (u64, u32)>>(
        n: usize,
        supports: I,
    ) -> Result<Self, HypergraphError> {
        check_n(n)?;
        let full = prefix_mask(n);
        let mut mu = BTreeMap::new();
        for (s, m) in supports {
            if s & !full != 0 {
                let vertex = (s & !full).trailing_zeros() as usize;
                return Err(HypergraphError::VertexOutOfRange { vertex, n });
            }
            if m > 0 {
                *mu.entry(s).or_insert(0) += m;
            }
        }
        Ok(Hypergraph { n, mu })
    }

    /// Hypergraph from hyperedges given as vertex lists.
    pub fn from_hyperedges(n: usize, edges: &[Vec<usize>]) -> Result<Self, HypergraphError> {
        check_n(n)?;
        let mut sups = Vec::with_capacity(edges.len());
        for e in edges {
            let mut s = 0u64;
            for &v in e {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
                s |= 1 << v;
            }
            sups.push((s, 1));
        }
        Self::new(n, sups)
    }

    pub fn from_incidence(mat: &IncidenceMatrix) -> Result<Self, HypergraphError> {
        let checked = IncidenceMatrix::from_rows(mat.entries.clone())?;
        if checked.rows != mat.rows || (mat.rows > 0 && checked.cols != mat.cols) {
            return Err(HypergraphError::MalformedMatrix(
                "declared shape disagrees with entries".into(),
            ));
        }
        check_n(mat.rows)?;
        let sups = (0..mat.cols).map(|j| {
            let s = (0..mat.rows)
                .filter(|&i| mat.entries[i][j] == 1)
                .fold(0u64, |s, i| s | 1 << i);
            (s, 1)
        });
        Self::new(mat.rows, sups)
    }

    /// Incidence matrix with columns sorted by ascending support bitmask.
    pub fn to_incidence(&self) -> IncidenceMatrix {
        let cols: Vec<u64> = self.supports().collect();
        let entries = (0..self.n)
            .map(|i| cols.iter().map(|s| ((s >> i) & 1) as u8).collect())
            .collect();
        IncidenceMatrix {
            rows: self.n,
            cols: cols.len(),
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.mu.values().map(|&v| v as usize).sum()
    }

    /// Number of hyperedges with non-empty support.
    pub fn m_nonempty(&self) -> usize {
        self.mu
            .iter()
            .filter(|(s, _)| **s != 0)
            .map(|(_, &v)| v as usize)
            .sum()
    }

    pub fn mu(&self) -> &BTreeMap<u64, u32> {
        &self.mu
    }

    pub fn multiplicity(&self, support: u64) -> u32 {
        self.mu.get(&support).copied().unwrap_or(0)
    }

    /// Supports with repetition, ascending.
    pub fn supports(&self) -> impl Iterator<Item = u64> + '_ {
        self.mu
            .iter()
            .flat_map(|(&s, &m)| std::iter::repeat_n(s, m as usize))
    }

    pub fn full_mask(&self) -> u64 {
        prefix_mask(self.n)
    }

    /// `Σ_{I ∩ J ≠ ∅} μ_I`.
    pub fn meeting_weight(&self, j: u64) -> i64 {
        self.mu
            .iter()
            .filter(|(s, _)| *s & j != 0)
            .map(|(_, &m)| m as i64)
            .sum()
    }

    /// `|J| - Σ_{I ∩ J ≠ ∅} μ_I`.
    pub fn exponent(&self, j: u64) -> i64 {
        j.count_ones() as i64 - self.meeting_weight(j)
    }

    /// Total number of incidences (sum of support sizes).
    pub fn incidences(&self) -> usize {
        self.mu
            .iter()
            .map(|(s, &m)| s.count_ones() as usize * m as usize)
            .sum()
    }

    // ---- families ----

    pub fn empty() -> Self {
        Hypergraph {
            n: 0,
            mu: BTreeMap::new(),
        }
    }

    pub fn discrete(n: usize) -> Self {
        Self::new(n, []).expect("vertex count in range")
    }

    /// `BH_{n,m}`: `m` hyperedges with full support.
    pub fn block(n: usize, m: u32) -> Self {
        Self::new(n, [(prefix_mask(n), m)]).expect("vertex count in range")
    }

    /// `RE_{n,m}`: `m` hyperedges with empty support.
    pub fn reflected_block(n: usize, m: u32) -> Self {
        Self::new(n, [(0, m)]).expect("vertex count in range")
    }

    /// Staircase on `n = mults.len() - 1` vertices with `mults[i]` copies of `[i]`.
    pub fn staircase(mults: &[u32]) -> Self {
        let n = mults.len().saturating_sub(1);
        Self::new(
            n,
            mults.iter().enumerate().map(|(i, &m)| (prefix_mask(i), m)),
        )
        .expect("vertex count in range")
    }

    /// `⊕_i BH_{n_i, m_i}`.
    pub fn block_disjoint(nvec: &[usize], mvec: &[u32]) -> Self {
        assert_eq!(
            nvec.len(),
            mvec.len(),
            "block vectors must have equal length"
        );
        nvec.iter().zip(mvec).fold(Self::empty(), |acc, (&n, &m)| {
            acc.disjoint_union(&Self::block(n, m))
        })
    }

    /// `⊛_i RE_{n_i, m_i}`: hyperedges of block `i` meet every other block.
    pub fn codisjoint(nvec: &[usize], mvec: &[u32]) -> Self {
        assert_eq!(
            nvec.len(),
            mvec.len(),
            "block vectors must have equal length"
        );
        nvec.iter().zip(mvec).fold(Self::empty(), |acc, (&n, &m)| {
            acc.complete_union(&Self::reflected_block(n, m))
        })
    }

    // ---- operations ----

    /// Block-diagonal union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let sups = self
            .mu
            .iter()
            .map(|(&s, &m)| (s, m))
            .chain(other.mu.iter().map(|(&s, &m)| (s << shift, m)));
        Self::new(self.n + other.n, sups).expect("vertex count in range")
    }

    /// Complete union: every support of one side absorbs all vertices of the other.
    pub fn complete_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let v1 = self.full_mask();
        let v2 = other.full_mask() << shift;
        let sups = self
            .mu
            .iter()
            .map(|(&s, &m)| (s | v2, m))
            .chain(other.mu.iter().map(|(&s, &m)| ((s << shift) | v1, m)));
        Self::new(self.n + other.n, sups).expect("vertex count in range")
    }

    /// Complements every support.
    pub fn reflection(&self) -> Self {
        let full = self.full_mask();
        Self::new(self.n, self.mu.iter().map(|(&s, &m)| (!s & full, m)))
            .expect("vertex count in range")
    }

    /// Appends a vertex incident to every hyperedge.
    pub fn insert_one_row(&self) -> Self {
        let v = 1u64 << self.n;
        Self::new(self.n + 1, self.mu.iter().map(|(&s, &m)| (s | v, m)))
            .expect("vertex count in range")
    }

    /// Appends an isolated vertex.
    pub fn insert_zero_row(&self) -> Self {
        Self::new(self.n + 1, self.mu.iter().map(|(&s, &m)| (s, m))).expect("vertex count in range")
    }

    /// Adds one hyperedge with full support.
    pub fn insert_one_col(&self) -> Self {
        let mut h = self.clone();
        *h.mu.entry(self.full_mask()).or_insert(0) += 1;
        h
    }

    /// Adds one hyperedge with empty support.
    pub fn insert_zero_col(&self) -> Self {
        let mut h = self.clone();
        *h.mu.entry(0).or_insert(0) += 1;
        h
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must match vertex count"
        );
        let map = |s: u64| {
            (0..self.n)
                .filter(|&v| s >> v & 1 == 1)
                .fold(0u64, |t, v| t | 1 << perm[v])
        };
        Self::new(self.n, self.mu.iter().map(|(&s, &m)| (map(s), m)))
            .expect("vertex count in range")
    }

    // ---- JSON ----

    /// Parses `{"vertices": n, "hyperedges": [[..]]}` or `{"matrix": [[..]]}`.
    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            vertices: Option<usize>,
            hyperedges: Option<Vec<Vec<usize>>>,
            matrix: Option<Vec<Vec<u8>>>,
        }
        let w: Wire =
            serde_json::from_str(text).map_err(|e| HypergraphError::Json(e.to_string()))?;
        match (w.vertices, w.hyperedges, w.matrix) {
            (Some(n), Some(edges), None) => Self::from_hyperedges(n, &edges),
            (Some(n), None, None) => {
                check_n(n)?;
                Ok(Self::discrete(n))
            }
            (None, None, Some(rows)) => Self::from_incidence(&IncidenceMatrix::from_rows(rows)?),
            (Some(n), None, Some(rows)) => {
                let mat = IncidenceMatrix::from_rows(rows)?;
                if mat.rows != n {
                    return Err(HypergraphError::MalformedMatrix(format!(
                        "{} rows but {n} vertices",
                        mat.rows
                    )));
                }
                Self::from_incidence(&mat)
            }
            _ => Err(HypergraphError::Json(
                "expected \"hyperedges\" with \"vertices\", or \"matrix\"".into(),
            )),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<Vec<usize>> = self
            .supports()
            .map(|s| (0..self.n).filter(|&v| s >> v & 1 == 1).collect())
            .collect();
        serde_json::json!({ "vertices": self.n, "hyperedges": edges })
    }
}
