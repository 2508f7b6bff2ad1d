//! Truncated power series in `T` with Laurent-polynomial coefficients.

use super::{Laurent, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct TSeries<R> {
    coeffs: Vec<Laurent<R>>,
}

impl<R: Scalar> TSeries<R> {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Laurent<R>>, order: usize) -> Self {
        coeffs.resize_with(order + 1, Laurent::zero);
        TSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Laurent<R>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Laurent<R> {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
            n,
        )
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Laurent::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out, n)
    }

    /// Coefficientwise product.
    pub fn hadamard(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|k| &self.coeffs[k] * &other.coeffs[k])
                .collect(),
            n,
        )
    }

    pub fn eval_x(&self, x: &R) -> Vec<R> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }

    pub fn eval_one(&self) -> Vec<R> {
        self.coeffs.iter().map(Laurent::eval_one).collect()
    }

    /// In-place division by `(1 - X^a T^b)`: `s_t += X^a s_{t-b}` ascending.
    pub(crate) fn divide_geo(&mut self, a: i64, b: u32) {
        let b = b as usize;
        for t in b..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(t);
            hi[0].add_scaled_shifted(&lo[t - b], a, &R::one());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn r(v: i64) -> Ratio<i64> {
        Ratio::from_integer(v)
    }

    #[test]
    fn geometric_division() {
        let mut s = TSeries::new(vec![Laurent::one()], 3);
        s.divide_geo(1, 1);
        let want: Vec<_> = (0..4).map(Laurent::<Ratio<i64>>::x_pow).collect();
        assert_eq!(s.coeffs(), &want[..]);
    }

    #[test]
    fn cauchy_vs_hadamard() {
        let mut a = TSeries::new(vec![Laurent::<Ratio<i64>>::one()], 4);
        a.divide_geo(0, 1);
        let sq = a.mul(&a);
        assert_eq!(sq.eval_one(), vec![r(1), r(2), r(3), r(4), r(5)]);
        assert_eq!(a.hadamard(&a), a);
    }
}
