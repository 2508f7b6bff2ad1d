//! Factored rational functions `N(X,T) / ∏ (1 - X^a T^b)^m`.

use std::collections::BTreeMap;

use super::{BiPoly, ExactError, Laurent, Scalar, TSeries};

/// The factor `(1 - X^a T^b)^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeoFactor {
    pub a: i64,
    pub b: u32,
    pub mult: u32,
}

impl GeoFactor {
    pub fn new(a: i64, b: u32, mult: u32) -> Self {
        assert!(b >= 1, "geometric factor needs a positive T-exponent");
        GeoFactor { a, b, mult }
    }

    fn key(&self) -> (u32, i64) {
        (self.b, self.a)
    }
}

/// Denominator multiset keyed by `(b, a)`, which is also the canonical order.
type DenMap = BTreeMap<(u32, i64), u32>;

/// Rational function with a numerator in `R[X^{±1}][T]` and a denominator
/// kept as a product of geometric factors. Every public constructor
/// returns the reduced form.
#[derive(Clone, Debug, PartialEq)]
pub struct Zeta<R> {
    num: BiPoly<R>,
    den: Vec<GeoFactor>,
}

impl<R: Scalar> Zeta<R> {
    /// Builds `num / ∏ den` and reduces it.
    pub fn new(num: BiPoly<R>, den: impl IntoIterator<Item = GeoFactor>) -> Self {
        let mut map = DenMap::new();
        for f in den {
            if f.mult > 0 {
                *map.entry(f.key()).or_insert(0) += f.mult;
            }
        }
        Self::reduce_map(num, map)
    }

    /// Builds without cancelling; call [`Zeta::reduce`] to canonicalize.
    pub fn new_unreduced(num: BiPoly<R>, den: impl IntoIterator<Item = GeoFactor>) -> Self {
        let mut map = DenMap::new();
        for f in den {
            if f.mult > 0 {
                *map.entry(f.key()).or_insert(0) += f.mult;
            }
        }
        Zeta {
            num,
            den: Self::den_vec(&map),
        }
    }

    pub fn zero() -> Self {
        Zeta {
            num: BiPoly::zero(),
            den: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn constant(c: R) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn from_poly(num: BiPoly<R>) -> Self {
        Zeta {
            num,
            den: Vec::new(),
        }
    }

    /// `X^a T / (1 - X^a T)`.
    pub fn gp(a: i64) -> Self {
        Zeta {
            num: BiPoly::monomial(a, 1, R::one()),
            den: vec![GeoFactor::new(a, 1, 1)],
        }
    }

    /// `1 / (1 - X^a T^b)`.
    pub fn geo_inv(a: i64, b: u32) -> Self {
        Zeta {
            num: BiPoly::one(),
            den: vec![GeoFactor::new(a, b, 1)],
        }
    }

    /// `1 - X^a T^b` as a rational function.
    pub fn geo(a: i64, b: u32) -> Self {
        Self::from_poly(BiPoly::geo(a, b))
    }

    /// `(1 - X^a T^b) / (1 - X^c T^d)`, reduced.
    pub fn geo_ratio(a: i64, b: u32, c: i64, d: u32) -> Self {
        Self::new(BiPoly::geo(a, b), [GeoFactor::new(c, d, 1)])
    }

    pub fn num(&self) -> &BiPoly<R> {
        &self.num
    }

    /// Denominator factors in canonical `(b, a)` order.
    pub fn den(&self) -> &[GeoFactor] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// True when every denominator factor is of the form `1 - X^a T`.
    pub fn is_t_linear(&self) -> bool {
        self.den.iter().all(|f| f.b == 1)
    }

    fn den_map(&self) -> DenMap {
        self.den.iter().map(|f| (f.key(), f.mult)).collect()
    }

    fn den_vec(map: &DenMap) -> Vec<GeoFactor> {
        map.iter()
            .filter(|(_, m)| **m > 0)
            .map(|(&(b, a), &m)| GeoFactor::new(a, b, m))
            .collect()
    }

    /// Cancels whole geometric factors dividing the numerator.
    pub fn reduce(&self) -> Self {
        Self::reduce_map(self.num.clone(), self.den_map())
    }

    fn reduce_map(mut num: BiPoly<R>, mut map: DenMap) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        for (&(b, a), m) in map.iter_mut() {
            while *m > 0 {
                match num.div_geo(a, b) {
                    Some(q) => {
                        num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
        }
        Zeta {
            num,
            den: Self::den_vec(&map),
        }
    }

    /// Numerator after bringing `self` over the denominator `target ⊇ den`.
    fn lift_num(&self, target: &DenMap) -> BiPoly<R> {
        let own = self.den_map();
        let mut num = self.num.clone();
        for (&(b, a), &m) in target {
            let have = own.get(&(b, a)).copied().unwrap_or(0);
            for _ in have..m {
                num = num.mul_geo(a, b);
            }
        }
        num
    }

    fn union_den(&self, other: &Self) -> DenMap {
        let mut map = self.den_map();
        for f in &other.den {
            let e = map.entry(f.key()).or_insert(0);
            *e = (*e).max(f.mult);
        }
        map
    }

    pub fn add(&self, other: &Self) -> Self {
        let map = self.union_den(other);
        let num = &self.lift_num(&map) + &other.lift_num(&map);
        Self::reduce_map(num, map)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Zeta {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.den_map();
        for f in &other.den {
            *map.entry(f.key()).or_insert(0) += f.mult;
        }
        Self::reduce_map(&self.num * &other.num, map)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::reduce_map(self.num.scale(c), self.den_map())
    }

    /// Multiplication by a polynomial.
    pub fn mul_poly(&self, p: &BiPoly<R>) -> Self {
        Self::reduce_map(&self.num * p, self.den_map())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum of many terms over one common denominator, reduced once.
    pub fn sum<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        R: 'a,
    {
        let terms: Vec<&Self> = terms.into_iter().collect();
        let mut map = DenMap::new();
        for t in &terms {
            for f in &t.den {
                let e = map.entry(f.key()).or_insert(0);
                *e = (*e).max(f.mult);
            }
        }
        let mut num = BiPoly::zero();
        for t in &terms {
            num = &num + &t.lift_num(&map);
        }
        Self::reduce_map(num, map)
    }

    /// `T ↦ X^c T`.
    pub fn subst_t_scale(&self, c: i64) -> Self {
        Zeta {
            num: self.num.subst_t_scale(c),
            den: self
                .den
                .iter()
                .map(|f| GeoFactor::new(f.a + c * f.b as i64, f.b, f.mult))
                .collect(),
        }
        .resorted()
    }

    fn resorted(self) -> Self {
        let mut map = DenMap::new();
        for f in &self.den {
            *map.entry(f.key()).or_insert(0) += f.mult;
        }
        Zeta {
            num: self.num,
            den: Self::den_vec(&map),
        }
    }

    /// Truncated expansion `Σ_{k ≤ order} c_k(X) T^k`.
    pub fn series(&self, order: usize) -> TSeries<R> {
        let mut s = TSeries::new(
            self.num
                .t_coeffs()
                .iter()
                .take(order + 1)
                .cloned()
                .collect(),
            order,
        );
        for f in &self.den {
            for _ in 0..f.mult {
                s.divide_geo(f.a, f.b);
            }
        }
        s
    }

    /// `T`-Hadamard product; both inputs must have `T`-linear denominators.
    pub fn hadamard(&self, other: &Self) -> Result<Self, ExactError> {
        if !self.is_t_linear() || !other.is_t_linear() {
            return Err(ExactError::NonLinearDenominator);
        }
        let mf: usize = self.den.iter().map(|f| f.mult as usize).sum();
        let mg: usize = other.den.iter().map(|f| f.mult as usize).sum();
        let df = self.num.deg_t().unwrap_or(0) as usize;
        let dg = other.num.deg_t().unwrap_or(0) as usize;
        let order = mf * mg + df + dg + 1;

        let prod = self.series(order).hadamard(&other.series(order));

        let mut cand = DenMap::new();
        for f in &self.den {
            for g in &other.den {
                *cand.entry((1, f.a + g.a)).or_insert(0) += f.mult + g.mult - 1;
            }
        }
        let mut num = BiPoly::from_t_coeffs(prod.coeffs().to_vec());
        for (&(b, a), &m) in &cand {
            for _ in 0..m {
                num = num.mul_geo(a, b).truncate(order as u32 - 1);
            }
        }
        let num = num.truncate(order as u32 - 1);
        let out = Self::reduce_map(num, cand);

        let check = 2 * order;
        if out.series(check) != self.series(check).hadamard(&other.series(check)) {
            return Err(ExactError::HadamardVerification);
        }
        Ok(out)
    }

    /// Checks `f(X^{-1}, T^{-1}) = -X^n T f(X, T)`.
    pub fn funceq_check(&self, n: i64) -> bool {
        if self.is_zero() {
            return false;
        }
        // (1 - X^{-a}T^{-b}) = -X^{-a}T^{-b}(1 - X^a T^b), so the inverted
        // function is (-1)^M X^A T^B N(X^{-1},T^{-1}) / den.
        let (mut big_a, mut big_b, mut big_m) = (0i64, 0i64, 0u32);
        for f in &self.den {
            big_a += f.a * f.mult as i64;
            big_b += f.b as i64 * f.mult as i64;
            big_m += f.mult;
        }
        let sign = if big_m % 2 == 0 { R::one() } else { -R::one() };
        let mut lhs: BTreeMap<(i64, i64), R> = BTreeMap::new();
        for (x, t, c) in self.num.terms() {
            lhs.insert((big_a - x, big_b - t as i64), sign.clone() * c.clone());
        }
        let mut rhs: BTreeMap<(i64, i64), R> = BTreeMap::new();
        for (x, t, c) in self.num.terms() {
            rhs.insert((x + n, t as i64 + 1), -c.clone());
        }
        lhs == rhs
    }

    /// Checks that every series coefficient up to `order` equals 1 at `X = 1`.
    pub fn reduced_zeta_check(&self, order: usize) -> bool {
        self.series(order).eval_one().iter().all(|v| v.is_one())
    }

    /// Exact value at `(X, T) = (x, t)`; `None` at a pole.
    pub fn eval(&self, x: &R, t: &R) -> Option<R> {
        let mut den = R::one();
        for f in &self.den {
            let v = R::one() - x.powi(f.a) * t.powi(f.b as i64);
            if v.is_zero() {
                return None;
            }
            den = den * v.powi(f.mult as i64);
        }
        Some(self.num.eval(x, t) / den)
    }

    /// Equality of values by cross-multiplication.
    pub fn same_value(&self, other: &Self) -> bool {
        let map = self.union_den(other);
        self.lift_num(&map) == other.lift_num(&map)
    }

    /// Series coefficient of `T^k`.
    pub fn t_coeff(&self, k: usize) -> Laurent<R> {
        self.series(k).coeff(k).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Z = Zeta<Ratio<i64>>;
    type P = BiPoly<Ratio<i64>>;

    fn r(v: i64) -> Ratio<i64> {
        Ratio::from_integer(v)
    }

    fn bh11() -> Z {
        Z::new(P::geo(-1, 1), [GeoFactor::new(0, 1, 2)])
    }

    #[test]
    fn reduce_cancels_exact_factors() {
        let num = &P::geo(0, 1) * &P::geo(-1, 1);
        let z = Z::new(num, [GeoFactor::new(-1, 1, 1)]);
        assert_eq!(z.num(), &P::geo(0, 1));
        assert!(z.den().is_empty());

        let z = Z::new(
            P::geo(-1, 1),
            [GeoFactor::new(-1, 1, 1), GeoFactor::new(1, 1, 1)],
        );
        assert_eq!(z.num(), &P::one());
        assert_eq!(z.den(), &[GeoFactor::new(1, 1, 1)]);
    }

    #[test]
    fn reduce_is_idempotent() {
        let z = bh11().mul(&Z::gp(3)).add(&Z::gp(-2));
        assert_eq!(z.reduce(), z);
    }

    #[test]
    fn arithmetic_identities() {
        assert_eq!(Z::one().add(&Z::gp(0)), Z::geo_inv(0, 1));
        let sq = Z::gp(1).mul(&Z::gp(1));
        assert_eq!(
            sq,
            Z::new(P::monomial(2, 2, r(1)), [GeoFactor::new(1, 1, 2)])
        );
        assert!(Z::gp(4).sub(&Z::gp(4)).is_zero());
    }

    #[test]
    fn series_expansions() {
        let k2 = Z::new(
            P::geo(-1, 1),
            [GeoFactor::new(0, 1, 1), GeoFactor::new(1, 1, 1)],
        );
        let s = k2.series(2);
        let l = |ts: &[(i64, i64)]| Laurent::from_terms(ts.iter().map(|&(e, c)| (e, r(c))));
        assert_eq!(s.coeff(0), &Laurent::one());
        assert_eq!(s.coeff(1), &l(&[(0, 1), (1, 1), (-1, -1)]));
        assert_eq!(s.coeff(2), &l(&[(2, 1), (1, 1), (-1, -1)]));

        let s = bh11().series(2);
        assert_eq!(s.coeff(2), &l(&[(0, 3), (-1, -2)]));
        assert_eq!(s.coeff(2).eval(&r(2)), r(2));
    }

    #[test]
    fn subst_roundtrip() {
        let z = bh11().mul(&Z::gp(2));
        assert_eq!(z.subst_t_scale(3).subst_t_scale(-3), z);
        assert_eq!(Z::gp(2).subst_t_scale(5), Z::gp(7));
    }

    #[test]
    fn hadamard_basics() {
        let a = Z::geo_inv(1, 1);
        let b = Z::geo_inv(2, 1);
        assert_eq!(a.hadamard(&b).unwrap(), Z::geo_inv(3, 1));
        let f = bh11().mul(&Z::gp(-1));
        assert_eq!(f.hadamard(&Z::geo_inv(0, 1)).unwrap(), f);
        assert_eq!(
            Z::geo_inv(0, 2).hadamard(&a),
            Err(ExactError::NonLinearDenominator)
        );
    }

    #[test]
    fn funceq() {
        let bh21 = Z::new(
            P::geo(-1, 1),
            [GeoFactor::new(0, 1, 1), GeoFactor::new(1, 1, 1)],
        );
        assert!(bh21.funceq_check(2));
        assert!(!bh21.funceq_check(3));
        assert!(Z::geo_inv(1, 1).reduced_zeta_check(5));
    }

    #[test]
    fn eval_and_poles() {
        let z = bh11();
        assert_eq!(z.eval(&r(2), &Ratio::new(1, 2)), Some(r(3)));
        assert_eq!(z.eval(&r(2), &r(1)), None);
    }
}
