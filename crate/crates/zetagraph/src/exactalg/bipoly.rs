//! Polynomials in `T` whose coefficients are Laurent polynomials in `X`.

use std::ops::{Add, Mul, Neg, Sub};

use super::{Laurent, Scalar};

/// Element of `R[X^{±1}][T]`, stored densely by `T`-degree.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<R> {
    coeffs: Vec<Laurent<R>>,
}

impl<R: Scalar> Default for BiPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Scalar> BiPoly<R> {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c · X^x T^t`.
    pub fn monomial(x: i64, t: u32, c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(x, t, c);
        p
    }

    /// `1 - X^a T^b`.
    pub fn geo(a: i64, b: u32) -> Self {
        let mut p = Self::one();
        p.add_term(a, b, -R::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, u32, R)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (x, t, c) in it {
            p.add_term(x, t, c);
        }
        p
    }

    pub fn from_t_coeffs(coeffs: Vec<Laurent<R>>) -> Self {
        let mut p = BiPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `T`; `None` for the zero polynomial.
    pub fn deg_t(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn t_coeff(&self, t: u32) -> Laurent<R> {
        self.coeffs.get(t as usize).cloned().unwrap_or_default()
    }

    pub fn t_coeffs(&self) -> &[Laurent<R>] {
        &self.coeffs
    }

    pub fn add_term(&mut self, x: i64, t: u32, c: R) {
        let t = t as usize;
        if self.coeffs.len() <= t {
            self.coeffs.resize_with(t + 1, Laurent::zero);
        }
        self.coeffs[t].add_term(x, c);
        self.trim();
    }

    /// Terms `(x, t, c)` sorted by `(t, x)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &R)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(t, l)| l.terms().map(move |(x, c)| (x, t as u32, c)))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().map(Laurent::len).sum()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_t_coeffs(self.coeffs.iter().map(|l| l.scale(c)).collect())
    }

    /// Multiplication by `X^x T^t`.
    pub fn shift(&self, x: i64, t: u32) -> Self {
        let mut coeffs = vec![Laurent::zero(); t as usize];
        coeffs.extend(self.coeffs.iter().map(|l| l.shift(x)));
        Self::from_t_coeffs(coeffs)
    }

    /// Multiplication by `1 - X^a T^b`.
    pub fn mul_geo(&self, a: i64, b: u32) -> Self {
        let b = b as usize;
        let mut out: Vec<Laurent<R>> = self.coeffs.clone();
        out.resize_with(self.coeffs.len() + b, Laurent::zero);
        for (t, c) in self.coeffs.iter().enumerate() {
            out[t + b].add_scaled_shifted(c, a, &-R::one());
        }
        Self::from_t_coeffs(out)
    }

    /// Exact quotient by `1 - X^a T^b`, or `None` if it does not divide.
    pub fn div_geo(&self, a: i64, b: u32) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let b = b as usize;
        let d = self.coeffs.len() - 1;
        if d < b {
            return None;
        }
        // N_t = Q_t - X^a Q_{t-b}  ⇒  Q_t = N_t + X^a Q_{t-b}.
        let qlen = d - b + 1;
        let mut q: Vec<Laurent<R>> = Vec::with_capacity(qlen);
        for t in 0..qlen {
            let mut v = self.coeffs[t].clone();
            if t >= b {
                v.add_scaled_shifted(&q[t - b], a, &R::one());
            }
            q.push(v);
        }
        // The top b coefficients must be matched by -X^a Q_{t-b}.
        for t in qlen..=d {
            let mut rem = self.coeffs[t].clone();
            rem.add_scaled_shifted(&q[t - b], a, &R::one());
            if !rem.is_zero() {
                return None;
            }
        }
        Some(Self::from_t_coeffs(q))
    }

    /// `T ↦ X^c T`.
    pub fn subst_t_scale(&self, c: i64) -> Self {
        Self::from_t_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(t, l)| l.shift(c * t as i64))
                .collect(),
        )
    }

    /// Truncation to `T`-degree `≤ n`.
    pub fn truncate(&self, n: u32) -> Self {
        Self::from_t_coeffs(self.coeffs.iter().take(n as usize + 1).cloned().collect())
    }

    /// Value at `(X, T) = (x, t)`.
    pub fn eval(&self, x: &R, t: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, l| acc * t.clone() + l.eval(x))
    }

    /// Substitutes `X = x` leaving a polynomial in `T` (constant-coefficient Laurent).
    pub fn eval_x(&self, x: &R) -> Vec<R> {
        self.coeffs.iter().map(|l| l.eval(x)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<R: Scalar> Add<&BiPoly<R>> for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn add(self, rhs: &BiPoly<R>) -> BiPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|t| match (self.coeffs.get(t), rhs.coeffs.get(t)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Laurent::zero(),
            })
            .collect();
        BiPoly::from_t_coeffs(coeffs)
    }
}

impl<R: Scalar> Sub<&BiPoly<R>> for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn sub(self, rhs: &BiPoly<R>) -> BiPoly<R> {
        self + &(-rhs)
    }
}

impl<R: Scalar> Neg for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn neg(self) -> BiPoly<R> {
        BiPoly {
            coeffs: self.coeffs.iter().map(|l| -l).collect(),
        }
    }
}

impl<R: Scalar> Mul<&BiPoly<R>> for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn mul(self, rhs: &BiPoly<R>) -> BiPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Laurent::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        BiPoly::from_t_coeffs(coeffs)
    }
}
