//! Exact arithmetic: Laurent and bivariate polynomials, factored rational
//! functions in `(X, T)`, truncated series, substitutions and Hadamard
//! products.

mod bipoly;
mod laurent;
mod scalar;
mod serial;
mod series;
mod zeta;

pub use bipoly::BiPoly;
pub use laurent::Laurent;
pub use scalar::Scalar;
pub use serial::{latex, pretty, JsonDen, JsonTerm, JsonZeta};
pub use series::TSeries;
pub use zeta::{GeoFactor, Zeta};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("Hadamard product needs denominators of the form 1 - X^a T")]
    NonLinearDenominator,
    #[error("Hadamard reconstruction failed its re-expansion check")]
    HadamardVerification,
    #[error("malformed rational function: {0}")]
    Malformed(String),
}
