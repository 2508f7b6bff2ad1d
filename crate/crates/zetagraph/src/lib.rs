//! Exact ask zeta functions of hypergraphs, modelling hypergraphs of
//! cographs, and class-counting zeta functions of graphical groups, with a
//! brute-force oracle over finite rings `Z/p^k`.
//!
//! The polynomial layer is generic over a [`Scalar`]; everything above it
//! works with the exact aliases defined here.

pub mod exactalg;
pub mod graphzeta;
pub mod hypergraph;
pub mod oracle;
pub mod zetacore;

pub use exactalg::{BiPoly, GeoFactor, Laurent, Scalar, TSeries, Zeta};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Factored rational function in `(X, T)` over `Q`.
pub type ZetaRat = Zeta<Rational>;
/// Laurent polynomial in `X` over `Q`.
pub type LaurentPoly = Laurent<Rational>;
/// Polynomial in `T` with Laurent coefficients over `Q`.
pub type BiPolyQ = BiPoly<Rational>;
/// Truncated `T`-series over `Q`.
pub type TSeriesQ = TSeries<Rational>;

/// Integer as a [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `p / q` as a [`Rational`].
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
