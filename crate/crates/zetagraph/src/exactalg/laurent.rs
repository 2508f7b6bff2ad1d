//! Laurent polynomials in a single variable `X`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::Scalar;

/// Finite sum `Σ c_e X^e` with `e ∈ Z`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Scalar> Default for Laurent<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Scalar> Laurent<R> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i64, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// `X^e`.
    pub fn x_pow(e: i64) -> Self {
        Self::monomial(e, R::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative powers of `X` occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn add_term(&mut self, e: i64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(slot) => {
                let s = slot.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Adds `c · X^shift · other` in place.
    pub fn add_scaled_shifted(&mut self, other: &Self, shift: i64, c: &R) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e + shift, v.clone() * c.clone());
        }
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `X ↦ X^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `X = x`; `x` must be invertible when negative powers occur.
    pub fn eval(&self, x: &R) -> R {
        self.terms
            .iter()
            .fold(R::zero(), |acc, (e, c)| acc + c.clone() * x.powi(*e))
    }

    /// Value at `X = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> R {
        self.terms
            .values()
            .fold(R::zero(), |acc, c| acc + c.clone())
    }

    /// Coefficients of `p(X)` in the basis `(X-1)^j`, `j = 0..=deg`.
    /// Returns `None` for proper Laurent polynomials.
    pub fn to_shifted_basis(&self) -> Option<Vec<R>> {
        if !self.is_polynomial() {
            return None;
        }
        let deg = match self.max_exp() {
            Some(d) => d as usize,
            None => return Some(Vec::new()),
        };
        // Taylor shift p(Y+1) via repeated synthetic division (Horner).
        let mut a: Vec<R> = (0..=deg as i64).map(|e| self.coeff(e)).collect();
        for i in 0..deg {
            for j in (i..deg).rev() {
                let next = a[j + 1].clone();
                a[j] = a[j].clone() + next;
            }
        }
        Some(a)
    }
}

impl<R: Scalar> Add<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Scalar> Sub<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Scalar> AddAssign<&Laurent<R>> for Laurent<R> {
    fn add_assign(&mut self, rhs: &Laurent<R>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<R: Scalar> SubAssign<&Laurent<R>> for Laurent<R> {
    fn sub_assign(&mut self, rhs: &Laurent<R>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<R: Scalar> Mul<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Scalar> Neg for &Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type L = Laurent<Ratio<i64>>;

    fn r(v: i64) -> Ratio<i64> {
        Ratio::from_integer(v)
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = L::from_terms([(1, r(2)), (-1, r(3))]);
        let q = L::from_terms([(1, r(-2))]);
        let s = &p + &q;
        assert_eq!(s, L::monomial(-1, r(3)));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn product_and_eval() {
        // (1 - X^-1)(1 + X^-1) = 1 - X^-2
        let a = L::from_terms([(0, r(1)), (-1, r(-1))]);
        let b = L::from_terms([(0, r(1)), (-1, r(1))]);
        let p = &a * &b;
        assert_eq!(p, L::from_terms([(0, r(1)), (-2, r(-1))]));
        assert_eq!(p.eval(&r(2)), Ratio::new(3, 4));
        assert_eq!(p.eval_one(), r(0));
    }

    #[test]
    fn shifted_basis() {
        // X^2 + X - 1 = (X-1)^2 + 3(X-1) + 1
        let p = L::from_terms([(2, r(1)), (1, r(1)), (0, r(-1))]);
        assert_eq!(p.to_shifted_basis().unwrap(), vec![r(1), r(3), r(1)]);
        assert!(L::x_pow(-1).to_shifted_basis().is_none());
    }
}
