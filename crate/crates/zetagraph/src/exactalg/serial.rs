//! Text and JSON renderings of [`ZetaRat`](crate::ZetaRat).

use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{BiPoly, ExactError, GeoFactor, Laurent};
use crate::{Rational, ZetaRat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub x: i64,
    pub t: u32,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonDen {
    pub a: i64,
    pub b: u32,
    pub m: u32,
}

/// Wire form: numerator terms sorted by `(t, x)`, factors sorted by `(b, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonZeta {
    pub num: Vec<JsonTerm>,
    pub den: Vec<JsonDen>,
}

impl From<&ZetaRat> for JsonZeta {
    fn from(z: &ZetaRat) -> Self {
        JsonZeta {
            num: z
                .num()
                .terms()
                .map(|(x, t, c)| JsonTerm {
                    x,
                    t,
                    c: c.to_string(),
                })
                .collect(),
            den: z
                .den()
                .iter()
                .map(|f| JsonDen {
                    a: f.a,
                    b: f.b,
                    m: f.mult,
                })
                .collect(),
        }
    }
}

impl TryFrom<&JsonZeta> for ZetaRat {
    type Error = ExactError;
    fn try_from(j: &JsonZeta) -> Result<Self, ExactError> {
        let mut num = BiPoly::zero();
        for term in &j.num {
            let c = Rational::from_str(&term.c)
                .map_err(|_| ExactError::Malformed(format!("bad coefficient {:?}", term.c)))?;
            num.add_term(term.x, term.t, c);
        }
        let mut den = Vec::new();
        for f in &j.den {
            if f.b == 0 {
                return Err(ExactError::Malformed("factor with b = 0".into()));
            }
            den.push(GeoFactor::new(f.a, f.b, f.m));
        }
        Ok(ZetaRat::new(num, den))
    }
}

fn x_t_monomial(x: i64, t: u32, latex: bool) -> String {
    let mut parts = Vec::new();
    match x {
        0 => {}
        1 => parts.push("X".to_string()),
        _ if latex => parts.push(format!("X^{{{x}}}")),
        _ => parts.push(format!("X^{x}")),
    }
    match t {
        0 => {}
        1 => parts.push("T".to_string()),
        _ if latex => parts.push(format!("T^{{{t}}}")),
        _ => parts.push(format!("T^{t}")),
    }
    parts.join(if latex { " " } else { "*" })
}

fn coeff_str(c: &Rational, latex: bool) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else if latex {
        format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Numerator terms: ascending `T`, then descending `X`.
fn poly_str(p: &BiPoly<Rational>, latex: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (t, l) in p.t_coeffs().iter().enumerate() {
        for (x, c) in l.terms().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            let mono = x_t_monomial(x, t as u32, latex);
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => coeff_str(&abs, latex),
                (false, true) => mono,
                (false, false) if latex => format!("{} {}", coeff_str(&abs, latex), mono),
                (false, false) => format!("{}*{}", coeff_str(&abs, latex), mono),
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
    }
    out
}

fn factor_str(f: &GeoFactor, latex: bool) -> String {
    let base = format!("(1 - {})", x_t_monomial(f.a, f.b, latex));
    match (f.mult, latex) {
        (1, _) => base,
        (m, true) => format!("{base}^{{{m}}}"),
        (m, false) => format!("{base}^{m}"),
    }
}

/// Human-readable quotient, parseable by the fixture grammar.
pub fn pretty(z: &ZetaRat) -> String {
    let num = poly_str(z.num(), false);
    if z.den().is_empty() {
        return num;
    }
    let num = if z.num().num_terms() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den: Vec<String> = z.den().iter().map(|f| factor_str(f, false)).collect();
    if den.len() == 1 {
        format!("{num}/{}", den[0])
    } else {
        format!("{num}/({})", den.join("*"))
    }
}

pub fn latex(z: &ZetaRat) -> String {
    let num = poly_str(z.num(), true);
    if z.den().is_empty() {
        return num;
    }
    let den: Vec<String> = z.den().iter().map(|f| factor_str(f, true)).collect();
    format!("\\frac{{{}}}{{{}}}", num, den.join(""))
}

/// Renders a Laurent polynomial with descending exponents.
pub fn laurent_str(l: &Laurent<Rational>) -> String {
    poly_str(&BiPoly::from_t_coeffs(vec![l.clone()]), false)
}

impl std::fmt::Display for ZetaRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&pretty(self))
    }
}

impl std::fmt::Display for Laurent<Rational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&laurent_str(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn k2() -> ZetaRat {
        ZetaRat::new(
            BiPoly::geo(-1, 1),
            [GeoFactor::new(0, 1, 1), GeoFactor::new(1, 1, 1)],
        )
    }

    #[test]
    fn pretty_form() {
        assert_eq!(pretty(&k2()), "(1 - X^-1*T)/((1 - T)*(1 - X*T))");
        let z = ZetaRat::from_poly(BiPoly::from_terms([
            (2, 3, r(-5)),
            (0, 0, Rational::new(1.into(), 2.into())),
        ]));
        assert_eq!(pretty(&z), "1/2 - 5*X^2*T^3");
        assert_eq!(pretty(&ZetaRat::geo_inv(0, 1)), "1/(1 - T)");
        let w = ZetaRat::new(BiPoly::monomial(-1, 1, r(-2)), [GeoFactor::new(1, 2, 3)]);
        assert_eq!(pretty(&w), "-2*X^-1*T/(1 - X*T^2)^3");
        assert!(latex(&k2()).starts_with("\\frac{1 - X^{-1} T}"));
    }

    #[test]
    fn json_roundtrip() {
        let z = k2().mul(&ZetaRat::gp(-3));
        let j = JsonZeta::from(&z);
        let text = serde_json::to_string(&j).unwrap();
        let back: JsonZeta = serde_json::from_str(&text).unwrap();
        assert_eq!(ZetaRat::try_from(&back).unwrap(), z);
        assert!(
            text.starts_with("{\"num\":[{\"x\":-3,\"t\":1,\"c\":\"1\"}"),
            "{text}"
        );
    }
}
