//! `W_H(X, T)` by the weak-order sum, the subset recursion and closed
//! forms, plus row/column and union calculus and pole data.

mod bivariate;
mod closed;
mod flags;
mod master;
mod poles;

pub use bivariate::w_block_bivariate_eval;
pub use closed::{
    w_block_disjoint, w_codisjoint, w_complete_union, w_complete_union_block, w_row_col_ops,
    w_staircase, RowColOp,
};
pub use flags::{enumerate_flags, fubini, Flag, FlagIter};
pub use master::{w_hypergraph, w_master, w_master_with_stats, w_recursive, FlagSumStats, Route};
pub use poles::{abscissa_of, linear_pole_exponents, pole_data, PoleData};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaCoreError {
    #[error("a denominator factor vanishes at the evaluation point")]
    PoleAtPoint,
}
