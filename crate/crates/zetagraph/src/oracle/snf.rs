//! Smith normal form over the integers and kernel sizes over `Z/p^k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Non-zero elementary divisors `d_1 | d_2 | ..` of an integer matrix.
#[allow(clippy::needless_range_loop)] // row operations read best indexed
pub fn elementary_divisors(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest non-zero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    divisors
}

fn valuation(d: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut d = d.clone();
    while !d.is_zero() && (&d % &p).is_zero() {
        d /= &p;
        v += 1;
    }
    v
}

/// `|{x ∈ (Z/p^k)^n : x A = 0}|` for an `n × m` integer matrix `A`.
pub fn kernel_size(mat: &[Vec<BigInt>], p: u64, k: u32) -> BigInt {
    let n = mat.len() as u32;
    let divs = elementary_divisors(mat);
    let r = divs.len() as u32;
    let mut exp = k * (n - r);
    for d in &divs {
        exp += k.min(valuation(d, p));
    }
    num_traits::pow(BigInt::from(p), exp as usize)
}

/// Convenience for small integer matrices.
pub fn kernel_size_i64(mat: &[Vec<i64>], p: u64, k: u32) -> BigInt {
    let big: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    kernel_size(&big, p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn divisors() {
        let d = elementary_divisors(&[vec![2.into(), 4.into()], vec![6.into(), 8.into()]]);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(4)]);
        let d = elementary_divisors(&[vec![2.into(), 0.into()], vec![0.into(), 3.into()]]);
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel_size_i64(&[vec![2]], 2, 2), BigInt::from(2));
        assert_eq!(
            kernel_size_i64(&[vec![0, 0], vec![0, 0]], 3, 2),
            BigInt::from(81)
        );
        assert!(kernel_size_i64(&[vec![1, 0], vec![0, 1]], 5, 3).is_one());
        // x ↦ x·(1 1) over Z/2 has kernel {(0,0),(1,1)}.
        assert_eq!(kernel_size_i64(&[vec![1], vec![1]], 2, 1), BigInt::from(2));
        // Empty column set: every x is in the kernel.
        assert_eq!(kernel_size_i64(&[vec![], vec![]], 2, 1), BigInt::from(4));
    }

    #[test]
    fn agrees_with_direct_count() {
        let mats: [Vec<Vec<i64>>; 3] = [
            vec![vec![0, 2, 1], vec![-2, 0, 3], vec![-1, -3, 0]],
            vec![vec![4, 6], vec![2, 2], vec![0, 8]],
            vec![vec![3, 3], vec![3, 3]],
        ];
        for m in &mats {
            for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2)] {
                let q = p.pow(k) as i64;
                let n = m.len() as u32;
                let mut count = 0;
                for code in 0..q.pow(n) {
                    let x: Vec<i64> = (0..n).map(|i| code / q.pow(i) % q).collect();
                    let zero = (0..m[0].len()).all(|j| {
                        (0..m.len())
                            .map(|i| x[i] * m[i][j])
                            .sum::<i64>()
                            .rem_euclid(q)
                            == 0
                    });
                    count += zero as i64;
                }
                assert_eq!(
                    kernel_size_i64(m, p, k),
                    BigInt::from(count),
                    "{m:?} p={p} k={k}"
                );
            }
        }
    }
}
