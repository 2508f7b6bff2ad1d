//! Simple graphs, cotrees, hypergraph models of cographs, `W⁻` by two
//! routes, class-counting zeta functions and kite graphs.

mod cotree;
mod enumerate;
mod graph;
mod kite;
mod model;
mod wminus;

pub use cotree::{cotree, find_p4, Cotree};
pub use enumerate::{all_cographs, all_graphs};
pub use graph::{SimpleGraph, MAX_GRAPH_VERTICES};
pub use kite::{alpha_kite, kite_build, kite_counts, kite_parse, w_kite, Composition};
pub use model::{model, model_from_cotree, Model};
pub use wminus::{
    alpha_cc, cc_pole_exponents, cc_zeta, class_number_poly, join_formula, nonneg_check, w_minus,
    w_minus_join_route,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
    #[error("graph JSON: {0}")]
    Json(String),
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("not a cograph: induced path {}-{}-{}-{}", witness[0], witness[1], witness[2], witness[3])]
    NotCograph { witness: [usize; 4] },
    #[error("not a kite graph")]
    NotKite,
    #[error("invalid composition {0:?}")]
    BadComposition(Vec<u32>),
    #[error("T^{0} coefficient is not a polynomial in X")]
    NotPolynomial(usize),
    #[error("analytic check failed: {0}")]
    Analytic(String),
}
