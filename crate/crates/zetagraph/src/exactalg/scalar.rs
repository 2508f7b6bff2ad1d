use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient ring for polynomials, series and factored rational functions.
///
/// Anything with exact field-like arithmetic works (`BigRational`,
/// `Ratio<i64>`). Floats satisfy the bound too but equality tests inside
/// `reduce` then become approximate, so the crate only instantiates the
/// exact aliases.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync {
    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let step = if v >= 0 { Self::one() } else { -Self::one() };
        let mut base = step;
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            k >>= 1;
        }
        acc
    }

    /// `self^e` for a signed exponent; negative powers invert.
    fn powi(&self, e: i64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        if e < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + Send + Sync {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Ratio};

    #[test]
    fn from_i64_matches_native() {
        for v in [-17i64, -1, 0, 1, 2, 255, 1 << 40] {
            assert_eq!(<Ratio<i64> as Scalar>::from_i64(v), Ratio::from_integer(v));
        }
    }

    #[test]
    fn negative_powers_invert() {
        let two = <BigRational as Scalar>::from_i64(2);
        assert_eq!(two.powi(-3), BigRational::new(1.into(), 8.into()));
        assert_eq!(two.powi(0), BigRational::from_integer(1.into()));
        assert_eq!(Scalar::powi(&2.0f64, -2), 0.25);
    }
}
