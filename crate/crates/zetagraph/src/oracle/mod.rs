//! Brute-force checks over `Z/p^k`: average kernel sizes of matrix modules
//! and conjugacy classes of graphical groups.

mod ask;
mod conjugacy;
mod snf;

pub use ask::{
    ask, ask_bruteforce, ask_dual, verify_series, FinRing, ModuleKind, ModuleSpec, Placement,
    DEFAULT_BUDGET,
};
pub use conjugacy::{conjugacy_count, Element, GroupTable, MAX_GROUP_ORDER};
pub use snf::{elementary_divisors, kernel_size, kernel_size_i64};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("Z/{p}^{k} exceeds the supported ring size")]
    RingTooLarge { p: u64, k: u32 },
    #[error("enumeration of {what} exceeds the budget {budget}")]
    BudgetExceeded { what: String, budget: u128 },
    #[error("symmetric adjacency modules are not uniform in characteristic 2")]
    EvenCharForSymmetric,
    #[error("T^{k}: series gives {expected}, enumeration gives {got}")]
    Mismatch {
        k: u32,
        expected: String,
        got: String,
    },
}
