//! Conjugacy classes of the graphical group of a graph over `F_p`.

use crate::graphzeta::SimpleGraph;

use super::{ask::is_prime, OracleError};

/// Largest group order enumerated.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// Elements `(x, c)` with `x ∈ F_p^V`, `c ∈ F_p^E` and product
/// `(x, c)(y, d) = (x + y, c + d + β(x, y))`, where on the edge `v < w`
/// `β(x, y) = -x_w y_v`. Generators on adjacent vertices then commute up to
/// the edge coordinate, the others commute.
#[derive(Clone, Debug)]
pub struct GroupTable {
    p: u64,
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub type Element = (Vec<u64>, Vec<u64>);

impl GroupTable {
    pub fn new(g: &SimpleGraph, p: u64) -> Result<Self, OracleError> {
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        let t = GroupTable {
            p,
            n: g.n(),
            edges: g.edges(),
        };
        if t.order().is_none_or(|o| o > MAX_GROUP_ORDER) {
            return Err(OracleError::BudgetExceeded {
                what: format!("group of order {p}^{}", t.n + t.edges.len()),
                budget: MAX_GROUP_ORDER as u128,
            });
        }
        Ok(t)
    }

    pub fn order(&self) -> Option<u64> {
        self.p.checked_pow((self.n + self.edges.len()) as u32)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let p = self.p;
        let x: Vec<u64> = a.0.iter().zip(&b.0).map(|(u, v)| (u + v) % p).collect();
        let c = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(v, w))| (a.1[e] + b.1[e] + (p - a.0[w] * b.0[v] % p)) % p)
            .collect();
        (x, c)
    }

    pub fn identity(&self) -> Element {
        (vec![0; self.n], vec![0; self.edges.len()])
    }

    pub fn inverse(&self, a: &Element) -> Element {
        // Solve a · b = 1 coordinate by coordinate.
        let p = self.p;
        let y: Vec<u64> = a.0.iter().map(|u| (p - u) % p).collect();
        let d = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &(v, w))| (2 * p - a.1[e] + a.0[w] * y[v] % p) % p)
            .collect();
        (y, d)
    }

    fn encode(&self, a: &Element) -> usize {
        a.0.iter()
            .chain(&a.1)
            .rev()
            .fold(0usize, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn decode(&self, mut code: usize) -> Element {
        let p = self.p as usize;
        let mut digit = || {
            let d = (code % p) as u64;
            code /= p;
            d
        };
        let x = (0..self.n).map(|_| digit()).collect();
        let c = (0..self.edges.len()).map(|_| digit()).collect();
        (x, c)
    }

    /// Vertex generators `(e_v, 0)`; with their inverses they generate.
    pub fn generators(&self) -> Vec<Element> {
        (0..self.n)
            .map(|v| {
                let mut x = vec![0; self.n];
                x[v] = 1;
                (x, vec![0; self.edges.len()])
            })
            .collect()
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Number of conjugacy classes, by merging every `h` with `g h g⁻¹`.
pub fn conjugacy_count(g: &SimpleGraph, p: u64) -> Result<u64, OracleError> {
    let table = GroupTable::new(g, p)?;
    let order = table.order().unwrap() as usize;
    let gens: Vec<(Element, Element)> = table
        .generators()
        .into_iter()
        .map(|s| {
            let inv = table.inverse(&s);
            (s, inv)
        })
        .collect();
    let mut parent: Vec<usize> = (0..order).collect();
    for code in 0..order {
        let h = table.decode(code);
        for (s, s_inv) in &gens {
            let conj = table.mul(&table.mul(s, &h), s_inv);
            let (a, b) = (
                find(&mut parent, code),
                find(&mut parent, table.encode(&conj)),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    Ok((0..order).filter(|&i| find(&mut parent, i) == i).count() as u64)
}
