use std::fmt;

use super::{GraphError, SimpleGraph};

/// Decomposition of a cograph into disjoint unions and joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn vertex_mask(&self) -> u64 {
        match self {
            Cotree::Leaf(v) => 1 << v,
            Cotree::Union(cs) | Cotree::Join(cs) => {
                cs.iter().fold(0, |acc, c| acc | c.vertex_mask())
            }
        }
    }

    pub fn size(&self) -> usize {
        self.vertex_mask().count_ones() as usize
    }

    /// Label-free normal form: equal exactly for isomorphic cographs.
    pub fn shape(&self) -> String {
        match self {
            Cotree::Leaf(_) => ".".into(),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                let mut parts: Vec<String> = cs.iter().map(Cotree::shape).collect();
                parts.sort();
                let tag = if matches!(self, Cotree::Union(_)) {
                    'u'
                } else {
                    'j'
                };
                format!("{tag}({})", parts.join(","))
            }
        }
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Union(cs) | Cotree::Join(cs) => {
                f.write_str(if matches!(self, Cotree::Union(_)) {
                    "(union"
                } else {
                    "(join"
                })?;
                for c in cs {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Cotree of `g`, or the first induced `P_4` (as a path `a-b-c-d`).
pub fn cotree(g: &SimpleGraph) -> Result<Cotree, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let co = g.complement();
    decompose(g, &co, g.full_mask())
}

fn decompose(g: &SimpleGraph, co: &SimpleGraph, mask: u64) -> Result<Cotree, GraphError> {
    if mask.count_ones() == 1 {
        return Ok(Cotree::Leaf(mask.trailing_zeros() as usize));
    }
    let comps = g.components_within(mask);
    if comps.len() > 1 {
        let kids = comps
            .into_iter()
            .map(|c| decompose(g, co, c))
            .collect::<Result<_, _>>()?;
        return Ok(Cotree::Union(kids));
    }
    let cocomps = co.components_within(mask);
    if cocomps.len() > 1 {
        let kids = cocomps
            .into_iter()
            .map(|c| decompose(g, co, c))
            .collect::<Result<_, _>>()?;
        return Ok(Cotree::Join(kids));
    }
    let witness = find_p4(g).expect("a prime part with more than one vertex contains a P4");
    Err(GraphError::NotCograph { witness })
}

/// First induced path `a-b-c-d` in lexicographic order of `(a, b, c, d)`.
pub fn find_p4(g: &SimpleGraph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            if b == a || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !g.has_edge(b, c) || g.has_edge(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_is_one_join() {
        let t = cotree(&SimpleGraph::complete(3)).unwrap();
        assert_eq!(
            t,
            Cotree::Join(vec![Cotree::Leaf(0), Cotree::Leaf(1), Cotree::Leaf(2)])
        );
        assert_eq!(t.to_string(), "(join 0 1 2)");
    }

    #[test]
    fn k3k3_join_k2() {
        let k3 = SimpleGraph::complete(3);
        let g = k3.disjoint_union(&k3).join(&SimpleGraph::complete(2));
        let t = cotree(&g).unwrap();
        assert_eq!(
            t.to_string(),
            "(join (union (join 0 1 2) (join 3 4 5)) 6 7)"
        );
    }

    #[test]
    fn path_is_rejected() {
        assert_eq!(
            cotree(&SimpleGraph::path(4)),
            Err(GraphError::NotCograph {
                witness: [0, 1, 2, 3]
            })
        );
        assert!(find_p4(&SimpleGraph::cycle(4)).is_none());
        assert!(find_p4(&SimpleGraph::cycle(5)).is_some());
    }

    #[test]
    fn shapes_ignore_labels() {
        let a = cotree(&SimpleGraph::star(4)).unwrap();
        let b = cotree(&SimpleGraph::star(4).permute(&[3, 1, 2, 0])).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.shape(), b.shape());
    }
}
