//! The bivariate block formula.

use num_traits::{One, Zero};

use crate::Rational;

use super::ZetaCoreError;

/// `(1 - q^{-m} t1^m t2) / ((1 - t2)(1 - q^{n-m} t1^m t2))` at a point.
pub fn w_block_bivariate_eval(
    n: usize,
    m: u32,
    q: &Rational,
    t1: &Rational,
    t2: &Rational,
) -> Result<Rational, ZetaCoreError> {
    let one = Rational::one();
    let pw = |b: &Rational, e: i64| -> Rational {
        if e >= 0 {
            num_traits::pow(b.clone(), e as usize)
        } else {
            num_traits::pow(b.recip(), (-e) as usize)
        }
    };
    if q.is_zero() {
        return Err(ZetaCoreError::PoleAtPoint);
    }
    let t1m = pw(t1, m as i64);
    let num = &one - pw(q, -(m as i64)) * &t1m * t2;
    let d1 = &one - t2;
    let d2 = &one - pw(q, n as i64 - m as i64) * &t1m * t2;
    if d1.is_zero() || d2.is_zero() {
        return Err(ZetaCoreError::PoleAtPoint);
    }
    Ok(num / (d1 * d2))
}
