//! Recursive-descent parser for the small polynomial grammar used by the
//! fixture file and by the pretty printer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power | '/' integer)*
//! power  := atom ['^' exp]
//! exp    := ['-'] integer | '{' ['-'] integer '}'
//! atom   := integer | 'X' | 'T' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use zetagraph::{BiPolyQ, GeoFactor, Rational, ZetaRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{msg} at offset {pos} in {src:?}")]
pub struct ParseError {
    pub msg: String,
    pub pos: usize,
    pub src: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let err = |msg: String, pos| ParseError {
        msg,
        pos,
        src: src.to_string(),
    };
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some((pos, c)) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = c.to_string();
                while let Some(&(_, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    it.next();
                }
                Tok::Num(digits.parse().expect("ascii digits"))
            }
            'X' | 'x' => Tok::X,
            'T' | 't' => Tok::T,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            other => return Err(err(format!("unexpected character {other:?}"), pos)),
        };
        out.push((tok, pos));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            src,
            toks: lex(src)?,
            at: 0,
        })
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let pos = self.toks.get(self.at).map_or(self.src.len(), |t| t.1);
        ParseError {
            msg: msg.into(),
            pos,
            src: self.src.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected {tok:?}")))
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("trailing input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                Ok(v)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<BiPolyQ, ParseError> {
        let mut acc = if self.eat(&Tok::Minus) {
            -&self.term()?
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPolyQ, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&Rational::new(BigInt::one(), d));
                }
                Some(Tok::Num(_) | Tok::X | Tok::T | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let braced = self.eat(&Tok::LBrace);
        let neg = self.eat(&Tok::Minus);
        let v = self.integer()?;
        if braced {
            self.expect(Tok::RBrace)?;
        }
        let v = v
            .to_i64()
            .ok_or_else(|| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<BiPolyQ, ParseError> {
        let start = self.at;
        let atom = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(atom);
        }
        let e = self.exponent()?;
        match &self.toks[start].0 {
            Tok::X => Ok(BiPolyQ::monomial(e, 0, Rational::one())),
            Tok::T if e >= 0 => Ok(BiPolyQ::monomial(0, e as u32, Rational::one())),
            Tok::T => Err(self.err("negative power of T")),
            _ if e >= 0 => Ok(atom.pow(e as u32)),
            _ => Err(self.err("negative power of a compound expression")),
        }
    }

    fn atom(&mut self) -> Result<BiPolyQ, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                Ok(BiPolyQ::monomial(0, 0, Rational::from_integer(v)))
            }
            Some(Tok::X) => {
                self.at += 1;
                Ok(BiPolyQ::monomial(1, 0, Rational::one()))
            }
            Some(Tok::T) => {
                self.at += 1;
                Ok(BiPolyQ::monomial(0, 1, Rational::one()))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.err("expected a number, X, T or '('")),
        }
    }

    /// `group := '(' expr ')' ['^' exp]`, repeated with optional `*`.
    fn factors(&mut self) -> Result<Vec<GeoFactor>, ParseError> {
        let mut out = Vec::new();
        while self.peek().is_some() {
            if !out.is_empty() {
                self.eat(&Tok::Star);
            }
            if self.peek() == Some(&Tok::Num(BigInt::one())) && out.is_empty() {
                // A bare `1` denotes the empty product.
                self.at += 1;
                continue;
            }
            let here = self.at;
            self.expect(Tok::LParen)?;
            let inner = self.expr()?;
            self.expect(Tok::RParen)?;
            let mult = if self.eat(&Tok::Caret) {
                self.exponent()?
            } else {
                1
            };
            let (a, b) = one_minus_monomial(&inner).ok_or_else(|| {
                self.at = here;
                self.err("denominator factor must have the form (1 - X^a T^b), b > 0")
            })?;
            if mult < 1 {
                return Err(self.err("factor multiplicity must be positive"));
            }
            out.push(GeoFactor::new(a, b, mult as u32));
        }
        Ok(out)
    }
}

/// `(a, b)` when `p = 1 - X^a T^b` with `b ≥ 1`.
fn one_minus_monomial(p: &BiPolyQ) -> Option<(i64, u32)> {
    let terms: Vec<_> = p.terms().collect();
    if terms.len() != 2 {
        return None;
    }
    let (mut one, mut mono) = (false, None);
    for (x, t, c) in terms {
        if x == 0 && t == 0 && c.is_one() {
            one = true;
        } else if t >= 1 && c.is_negative() && (-c).is_one() {
            mono = Some((x, t));
        }
    }
    mono.filter(|_| one)
}

/// Parses a polynomial in `X^{±1}` and `T`.
pub fn parse_poly(src: &str) -> Result<BiPolyQ, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.done()?;
    Ok(e)
}

/// Parses a product of factors `(1 - X^a T^b)^m`; `1` or an empty string is
/// the empty product.
pub fn parse_den(src: &str) -> Result<Vec<GeoFactor>, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.factors()?;
    p.done()?;
    Ok(f)
}

/// Parses `numerator / (denominator factors)` as printed by
/// [`zetagraph::exactalg::pretty`], or a bare polynomial.
pub fn parse_zeta(src: &str) -> Result<ZetaRat, ParseError> {
    match split_quotient(src) {
        Some((num, den)) => Ok(ZetaRat::new(parse_poly(num)?, parse_den(den)?)),
        None => Ok(ZetaRat::from_poly(parse_poly(src)?)),
    }
}

/// Splits at the last top-level `/` that is followed by `(`.
fn split_quotient(src: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut cut = None;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 && src[i + 1..].trim_start().starts_with('(') => cut = Some(i),
            _ => {}
        }
    }
    let i = cut?;
    let den = src[i + 1..].trim();
    // Strip one layer of grouping parentheses around the whole product.
    let den = match den.strip_prefix('(').and_then(|d| d.strip_suffix(')')) {
        Some(inner) if balanced(inner) && inner.trim_start().starts_with('(') => inner,
        _ => den,
    };
    Some((&src[..i], den))
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use zetagraph::exactalg::pretty;
    use zetagraph::{rat, ratio};

    fn p(terms: &[(i64, u32, i64)]) -> BiPolyQ {
        BiPolyQ::from_terms(terms.iter().map(|&(x, t, c)| (x, t, rat(c))))
    }

    #[test]
    fn latex_style_terms() {
        let got = parse_poly("-X T^{2} + 3 T^{2} - X^{-1} T^{3} + 1").unwrap();
        assert_eq!(got, p(&[(1, 2, -1), (0, 2, 3), (-1, 3, -1), (0, 0, 1)]));
        assert_eq!(parse_poly("X^-2*T").unwrap(), p(&[(-2, 1, 1)]));
        assert_eq!(
            parse_poly("(1-X^{-1}T)^2").unwrap(),
            p(&[(0, 0, 1), (-1, 1, -2), (-2, 2, 1)])
        );
        assert_eq!(
            parse_poly("1/2 - 5*X^2*T^3").unwrap(),
            BiPolyQ::from_terms([(0, 0, ratio(1, 2)), (2, 3, rat(-5))])
        );
        assert_eq!(parse_poly("2 − 2").unwrap(), BiPolyQ::zero());
    }

    #[test]
    fn denominators() {
        let d = parse_den("(1 - XT)^3(1 - T)").unwrap();
        assert_eq!(d, vec![GeoFactor::new(1, 1, 3), GeoFactor::new(0, 1, 1)]);
        let d = parse_den("(1 - X^{-1}T^2)*(1-X^3 T^2)^{2}").unwrap();
        assert_eq!(d, vec![GeoFactor::new(-1, 2, 1), GeoFactor::new(3, 2, 2)]);
        assert!(parse_den("1").unwrap().is_empty());
        assert!(parse_den("").unwrap().is_empty());
        assert!(parse_den("(1 + T)").is_err());
        assert!(parse_den("(1 - X)").is_err());
        assert!(parse_den("(2 - 2T)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_poly("1 + T^{-1}").unwrap_err();
        assert!(e.msg.contains("negative power of T"));
        let e = parse_poly("1 + @").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse_poly("(1 + T").is_err());
        assert!(parse_poly("1 +").is_err());
        assert!(parse_poly("T)").is_err());
    }

    #[test]
    fn pretty_round_trip() {
        let w = ZetaRat::new(
            p(&[(0, 0, 1), (-6, 1, 1), (-4, 1, -2), (-7, 2, 1)]),
            [GeoFactor::new(0, 1, 2), GeoFactor::new(1, 1, 1)],
        );
        assert_eq!(parse_zeta(&pretty(&w)).unwrap(), w);
        let poly = ZetaRat::from_poly(BiPolyQ::from_terms([(2, 3, ratio(-5, 3))]));
        assert_eq!(parse_zeta(&pretty(&poly)).unwrap(), poly);
        let single = ZetaRat::geo_inv(2, 1);
        assert_eq!(parse_zeta(&pretty(&single)).unwrap(), single);
    }
}
