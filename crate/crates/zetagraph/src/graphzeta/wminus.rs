use std::collections::BTreeSet;

use num_traits::Signed;

use crate::zetacore::{linear_pole_exponents, w_master};
use crate::{BiPolyQ, GeoFactor, LaurentPoly, ZetaRat};

use super::{cotree, model, Cotree, GraphError, SimpleGraph};

/// `W⁻_Γ` as the ask zeta function of a hypergraph model.
pub fn w_minus(g: &SimpleGraph) -> Result<ZetaRat, GraphError> {
    Ok(w_master(&model(g)?.hypergraph, 0))
}

/// `W` of the join of graphs on `n1` and `n2` vertices, from their `W`s.
///
/// Proven for cographs; callers may feed it any inputs.
pub fn join_formula(w1: &ZetaRat, n1: usize, w2: &ZetaRat, n2: usize) -> ZetaRat {
    let (n1, n2) = (n1 as i64, n2 as i64);
    let one = crate::rat(1);
    let mut head = BiPolyQ::monomial(1 - n1 - n2, 1, one.clone());
    head.add_term(0, 0, -one);
    let side = |w: &ZetaRat, s: i64| {
        w.subst_t_scale(-s)
            .mul_poly(&(&BiPolyQ::geo(-s, 1) * &BiPolyQ::geo(1 - s, 1)))
    };
    let terms = [ZetaRat::from_poly(head), side(w1, n2), side(w2, n1)];
    let outer = ZetaRat::new(
        BiPolyQ::one(),
        [GeoFactor::new(0, 1, 1), GeoFactor::new(1, 1, 1)],
    );
    ZetaRat::sum(terms.iter()).mul(&outer)
}

fn join_route(t: &Cotree) -> (ZetaRat, usize) {
    match t {
        Cotree::Leaf(_) => (ZetaRat::geo_inv(1, 1), 1),
        Cotree::Union(kids) => {
            let mut it = kids.iter().map(join_route);
            let first = it.next().expect("union has children");
            it.fold(first, |(w, n), (w2, n2)| {
                (
                    w.hadamard(&w2)
                        .expect("cograph zeta functions have T-linear denominators"),
                    n + n2,
                )
            })
        }
        Cotree::Join(kids) => {
            let mut it = kids.iter().map(join_route);
            let first = it.next().expect("join has children");
            it.fold(first, |(w, n), (w2, n2)| {
                (join_formula(&w, n, &w2, n2), n + n2)
            })
        }
    }
}

/// `W⁻_Γ` by recursion over the cotree: Hadamard products for `⊕`, the
/// join formula for `∨`.
pub fn w_minus_join_route(g: &SimpleGraph) -> Result<ZetaRat, GraphError> {
    Ok(join_route(&cotree(g)?).0)
}

/// Class-counting zeta function `W⁻_Γ(X, X^m T)`.
pub fn cc_zeta(g: &SimpleGraph) -> Result<ZetaRat, GraphError> {
    Ok(w_minus(g)?.subst_t_scale(g.m() as i64))
}

/// `T^k` coefficient of the class-counting zeta function.
pub fn class_number_poly(g: &SimpleGraph, k: usize) -> Result<LaurentPoly, GraphError> {
    let p = cc_zeta(g)?.t_coeff(k);
    if !p.is_polynomial() {
        return Err(GraphError::NotPolynomial(k));
    }
    Ok(p)
}

/// True iff every `class_number_poly(g, k)`, `1 ≤ k ≤ kmax`, has
/// non-negative coefficients in powers of `X - 1`.
pub fn nonneg_check(g: &SimpleGraph, kmax: usize) -> Result<bool, GraphError> {
    let cc = cc_zeta(g)?;
    let series = cc.series(kmax);
    for k in 1..=kmax {
        match series.coeff(k).to_shifted_basis() {
            Some(cs) if cs.iter().all(|c| !c.is_negative()) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Pole exponents `A` of the reduced class-counting zeta function.
pub fn cc_pole_exponents(g: &SimpleGraph) -> Result<BTreeSet<i64>, GraphError> {
    Ok(linear_pole_exponents(&cc_zeta(g)?))
}

/// Abscissa of convergence `max(A + 1)` read off the reduced cc zeta
/// function; checks that every pole exponent is positive and the bound
/// `α ≤ n + m + 1`.
pub fn alpha_cc(g: &SimpleGraph) -> Result<i64, GraphError> {
    let cc = cc_zeta(g)?;
    if !cc.is_t_linear() {
        return Err(GraphError::Analytic("non-linear cc denominator".into()));
    }
    let poles = linear_pole_exponents(&cc);
    if let Some(a) = poles.iter().find(|&&a| a < 1) {
        return Err(GraphError::Analytic(format!(
            "pole exponent {a} is not positive"
        )));
    }
    let alpha = poles.iter().map(|a| a + 1).max().unwrap_or(1);
    let bound = (g.n() + g.m() + 1) as i64;
    if alpha > bound {
        return Err(GraphError::Analytic(format!(
            "abscissa {alpha} exceeds n + m + 1 = {bound}"
        )));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, LaurentPoly};

    fn z(num: &[(i64, u32, i64)], den: &[(i64, u32)]) -> ZetaRat {
        let num = BiPolyQ::from_terms(num.iter().map(|&(x, t, c)| (x, t, rat(c))));
        ZetaRat::new(num, den.iter().map(|&(a, m)| GeoFactor::new(a, 1, m)))
    }

    #[test]
    fn small_rows() {
        let k3 = z(&[(0, 0, 1), (-2, 1, -1)], &[(0, 1), (1, 1)]);
        assert_eq!(w_minus(&SimpleGraph::complete(3)).unwrap(), k3);
        let p3 = z(&[(0, 0, 1), (-1, 1, -1)], &[(1, 2)]);
        assert_eq!(w_minus(&SimpleGraph::path(3)).unwrap(), p3);
        assert_eq!(w_minus_join_route(&SimpleGraph::path(3)).unwrap(), p3);
    }

    #[test]
    fn point_corollaries() {
        let g = SimpleGraph::star(4);
        let w = w_minus(&g).unwrap();
        let with_join = w_minus(&g.join(&SimpleGraph::discrete(1))).unwrap();
        let want = w.subst_t_scale(-1).mul(&ZetaRat::geo_ratio(-1, 1, 1, 1));
        assert!(with_join.same_value(&want));
        let with_union = w_minus(&g.disjoint_union(&SimpleGraph::discrete(1))).unwrap();
        assert!(with_union.same_value(&w.subst_t_scale(1)));
    }

    #[test]
    fn class_counts() {
        let cc = cc_zeta(&SimpleGraph::complete(3)).unwrap();
        assert_eq!(cc, z(&[(0, 0, 1), (1, 1, -1)], &[(3, 1), (4, 1)]));
        let k2 = class_number_poly(&SimpleGraph::complete(2), 1).unwrap();
        assert_eq!(
            k2,
            LaurentPoly::from_terms([(2, rat(1)), (1, rat(1)), (0, rat(-1))])
        );
        assert_eq!(k2.eval(&rat(2)), rat(5));
        let k3 = class_number_poly(&SimpleGraph::complete(3), 1).unwrap();
        assert_eq!(k3.eval(&rat(2)), rat(22));
        assert!(class_number_poly(&SimpleGraph::path(3), 0)
            .unwrap()
            .is_one());
        assert_eq!(
            cc_zeta(&SimpleGraph::discrete(3)).unwrap(),
            ZetaRat::geo_inv(3, 1)
        );
        assert!(nonneg_check(&SimpleGraph::complete(2), 3).unwrap());
    }

    #[test]
    fn abscissae() {
        for n in 1..=4 {
            assert_eq!(alpha_cc(&SimpleGraph::discrete(n)).unwrap(), n as i64 + 1);
            assert_eq!(
                alpha_cc(&SimpleGraph::complete(n)).unwrap(),
                (n * (n - 1) / 2) as i64 + 2
            );
        }
    }
}
