use std::fmt;

use crate::{BiPolyQ, GeoFactor, ZetaRat};

use super::{cotree, Cotree, GraphError, SimpleGraph};

/// Composition `(k_1, .., k_c)` with positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, GraphError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(GraphError::BadComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based part, 0 past the end.
    pub fn part(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1] as i64
        } else {
            0
        }
    }

    /// `k(t) = k_1 + .. + k_t`.
    pub fn partial(&self, t: usize) -> i64 {
        self.parts.iter().take(t).map(|&k| k as i64).sum()
    }

    /// `k[t] = Σ_{i ≥ t} (-1)^{i+1} k_i`.
    pub fn alternating_tail(&self, t: usize) -> i64 {
        (t.max(1)..=self.parts.len())
            .map(|i| {
                if i % 2 == 1 {
                    self.part(i)
                } else {
                    -self.part(i)
                }
            })
            .sum()
    }

    pub fn total(&self) -> usize {
        self.partial(self.parts.len()) as usize
    }

    /// Every composition of `n`, in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Composition> {
        fn rec(left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if left == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for k in 1..=left {
                cur.push(k);
                rec(left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

/// `D(k)`: alternately `⊕ Δ_{k_i}` and `∨ K_{k_i}`, labelled block by block.
pub fn kite_build(k: &Composition) -> SimpleGraph {
    let mut g = SimpleGraph::discrete(k.parts[0] as usize);
    for (idx, &part) in k.parts.iter().enumerate().skip(1) {
        // idx is the number of parts already used.
        g = if idx % 2 == 0 {
            g.disjoint_union(&SimpleGraph::discrete(part as usize))
        } else {
            g.join(&SimpleGraph::complete(part as usize))
        };
    }
    g
}

fn parse(t: &Cotree) -> Result<Vec<u32>, GraphError> {
    let kids = match t {
        Cotree::Leaf(_) => return Ok(vec![1]),
        Cotree::Union(kids) | Cotree::Join(kids) => kids,
    };
    let leaves = kids.iter().filter(|c| matches!(c, Cotree::Leaf(_))).count() as u32;
    let inner: Vec<&Cotree> = kids
        .iter()
        .filter(|c| !matches!(c, Cotree::Leaf(_)))
        .collect();
    if inner.len() > 1 {
        return Err(GraphError::NotKite);
    }
    match (t, inner.first()) {
        (Cotree::Union(_), None) => Ok(vec![leaves]),
        (_, None) => Ok(vec![1, leaves - 1]),
        (_, Some(c)) => {
            let mut k = parse(c)?;
            k.push(leaves);
            Ok(k)
        }
    }
}

/// The composition `k` with `D(k) ≅ g`.
pub fn kite_parse(g: &SimpleGraph) -> Result<Composition, GraphError> {
    let t = match cotree(g) {
        Ok(t) => t,
        Err(GraphError::NotCograph { .. }) => return Err(GraphError::NotKite),
        Err(e) => return Err(e),
    };
    Composition::new(parse(&t)?)
}

/// Closed form for `W⁻` of a kite graph.
pub fn w_kite(k: &Composition) -> ZetaRat {
    let mut num = BiPolyQ::one();
    let mut den = vec![GeoFactor::new(k.alternating_tail(1), 1, 1)];
    for i in 1..=k.len() / 2 {
        let even = k.part(2 * i);
        let tail = k.alternating_tail(2 * i + 1);
        num = &num * &(&BiPolyQ::geo(tail - even + 1, 1) * &BiPolyQ::geo(tail - even, 1));
        den.push(GeoFactor::new(tail + 1, 1, 1));
        den.push(GeoFactor::new(tail, 1, 1));
    }
    ZetaRat::new(num, den)
}

fn choose2(v: i64) -> i64 {
    v * (v - 1) / 2
}

/// `(vertices, edges)` of `D(k)`.
pub fn kite_counts(k: &Composition) -> (usize, usize) {
    let edges: i64 = (1..=k.len() / 2)
        .map(|i| choose2(k.partial(2 * i)) - choose2(k.partial(2 * i - 1)))
        .sum();
    (k.total(), edges as usize)
}

/// Abscissa of the class-counting zeta function of `D(k)`.
pub fn alpha_kite(k: &Composition) -> i64 {
    let (_, edges) = kite_counts(k);
    let mut best = k.alternating_tail(1) + 1;
    for i in 1..=k.len() / 2 {
        best = best.max(k.alternating_tail(2 * i + 1) + 2);
    }
    edges as i64 + best
}
