use crate::hypergraph::Hypergraph;

use super::{cotree, Cotree, GraphError, SimpleGraph};

/// Hypergraph model of a cograph together with its component count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub hypergraph: Hypergraph,
    pub components: usize,
}

struct Partial {
    vertices: u64,
    supports: Vec<u64>,
    c: usize,
}

fn build(t: &Cotree) -> Partial {
    match t {
        Cotree::Leaf(v) => Partial {
            vertices: 1 << v,
            supports: Vec::new(),
            c: 1,
        },
        Cotree::Union(kids) => {
            let mut out = Partial {
                vertices: 0,
                supports: Vec::new(),
                c: 0,
            };
            for k in kids.iter().map(build) {
                out.vertices |= k.vertices;
                out.supports.extend(k.supports);
                out.c += k.c;
            }
            out
        }
        Cotree::Join(kids) => {
            let mut parts = kids.iter().map(build);
            let first = parts.next().expect("join has children");
            parts.fold(first, join_models)
        }
    }
}

/// Binary join: lifted blocks, `c_1 - 1` copies of `V_2`, `c_2 - 1` copies
/// of `V_1`, then one column on `V_1 ⊔ V_2`.
fn join_models(a: Partial, b: Partial) -> Partial {
    let mut supports: Vec<u64> = a.supports.iter().map(|s| s | b.vertices).collect();
    supports.extend(b.supports.iter().map(|s| a.vertices | s));
    supports.extend(std::iter::repeat_n(b.vertices, a.c - 1));
    supports.extend(std::iter::repeat_n(a.vertices, b.c - 1));
    supports.push(a.vertices | b.vertices);
    Partial {
        vertices: a.vertices | b.vertices,
        supports,
        c: 1,
    }
}

pub fn model(g: &SimpleGraph) -> Result<Model, GraphError> {
    let t = cotree(g)?;
    Ok(model_from_cotree(g.n(), &t))
}

pub fn model_from_cotree(n: usize, t: &Cotree) -> Model {
    let p = build(t);
    let hypergraph = Hypergraph::new(n, p.supports.into_iter().map(|s| (s, 1)))
        .expect("supports lie inside the vertex set");
    Model {
        hypergraph,
        components: p.c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::IncidenceMatrix;

    #[test]
    fn complete_graphs_give_blocks() {
        for n in 1..=5 {
            let m = model(&SimpleGraph::complete(n)).unwrap();
            assert_eq!(m.hypergraph, Hypergraph::block(n, n as u32 - 1));
            assert_eq!(m.components, 1);
        }
    }

    #[test]
    fn four_cycle() {
        // Vertices 0,1 on one side of the join and 2,3 on the other.
        let c4 = SimpleGraph::discrete(2).join(&SimpleGraph::discrete(2));
        let m = model(&c4).unwrap();
        let want = IncidenceMatrix::from_rows(vec![
            vec![0, 1, 1],
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 0, 1],
        ])
        .unwrap();
        assert_eq!(m.hypergraph, Hypergraph::from_incidence(&want).unwrap());
    }

    #[test]
    fn m11_is_a_model() {
        let k3 = SimpleGraph::complete(3);
        // K_2 first, so the labels match the displayed matrix.
        let g = SimpleGraph::complete(2).join(&k3.disjoint_union(&k3));
        let m = model(&g).unwrap();
        let want = Hypergraph::from_hyperedges(
            8,
            &[
                (0..8).collect(),
                (0..8).collect(),
                (0..5).collect(),
                (0..5).collect(),
                vec![0, 1, 5, 6, 7],
                vec![0, 1, 5, 6, 7],
                vec![0, 1],
            ],
        )
        .unwrap();
        assert_eq!(m.hypergraph, want);
    }

    #[test]
    fn counting_invariants() {
        let g = SimpleGraph::star(4)
            .disjoint_union(&SimpleGraph::complete(2))
            .disjoint_union(&SimpleGraph::discrete(1));
        let m = model(&g).unwrap();
        assert_eq!(m.components, 3);
        assert_eq!(m.hypergraph.m(), g.n() - m.components);
        assert_eq!(m.hypergraph.incidences(), 2 * g.m());
    }
}
