//! Flags of subsets (weak orders) of `{0, .., n-1}`.

use crate::hypergraph::prefix_mask;

/// Chain `I_1 ⊊ I_2 ⊊ ..` of vertex subsets, stored ascending.
/// The chain may be empty and may start at `∅` or end at the full set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub chain: Vec<u64>,
}

impl Flag {
    /// Size of the largest member; 0 for the empty chain.
    pub fn rank(&self) -> u32 {
        self.sup().count_ones()
    }

    /// Largest member, `∅` for the empty chain.
    pub fn sup(&self) -> u64 {
        self.chain.last().copied().unwrap_or(0)
    }

    /// True when `∅` is not a member.
    pub fn avoids_empty(&self) -> bool {
        self.chain.first().is_none_or(|&s| s != 0)
    }
}

/// Depth-first stream over all flags: the empty flag first, then for each
/// top subset in descending bitmask order, every flag strictly below it.
#[derive(Clone, Debug)]
pub struct FlagIter {
    full: u64,
    /// Members from the top down.
    stack: Vec<u64>,
    /// `cursor[i]` is the next candidate strictly below `stack[i-1]`
    /// (below-or-equal `full` for `i = 0`).
    cursor: Vec<Option<u64>>,
    started: bool,
}

impl Iterator for FlagIter {
    type Item = Flag;

    fn next(&mut self) -> Option<Flag> {
        if !self.started {
            self.started = true;
            return Some(Flag { chain: Vec::new() });
        }
        loop {
            let depth = self.cursor.len();
            if depth == 0 {
                return None;
            }
            match self.cursor[depth - 1] {
                None => {
                    self.cursor.pop();
                    self.stack.pop();
                }
                Some(j) => {
                    let parent = if depth == 1 {
                        self.full
                    } else {
                        self.stack[depth - 2]
                    };
                    self.cursor[depth - 1] = if j == 0 { None } else { Some((j - 1) & parent) };
                    self.stack.push(j);
                    self.cursor
                        .push(if j == 0 { None } else { Some((j - 1) & j) });
                    let chain = self.stack.iter().rev().copied().collect();
                    return Some(Flag { chain });
                }
            }
        }
    }
}

/// All flags of `{0, .., n-1}`, including those containing `∅`.
pub fn enumerate_flags(n: usize) -> FlagIter {
    FlagIter {
        full: prefix_mask(n),
        stack: Vec::new(),
        cursor: vec![Some(prefix_mask(n))],
        started: false,
    }
}

/// Ordered Bell (Fubini) number: ordered set partitions of an `n`-set.
pub fn fubini(n: usize) -> u128 {
    let mut binom = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for k in 1..=i {
            binom[i][k] = binom[i - 1][k - 1] + if k < i { binom[i - 1][k] } else { 0 };
        }
    }
    let mut f = vec![0u128; n + 1];
    f[0] = 1;
    for i in 1..=n {
        f[i] = (1..=i).map(|k| binom[i][k] * f[i - k]).sum();
    }
    f[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_four_fubini() {
        assert_eq!(enumerate_flags(0).count(), 2);
        let two: Vec<Flag> = enumerate_flags(2).collect();
        assert_eq!(two.len(), 12);
        assert_eq!(two.iter().filter(|f| f.avoids_empty()).count(), 6);
        for n in 1..=6 {
            assert_eq!(enumerate_flags(n).count() as u128, 4 * fubini(n), "n = {n}");
        }
        assert_eq!(4 * fubini(8), 2_183_340);
    }

    #[test]
    fn flags_are_distinct_strict_chains() {
        let all: Vec<Flag> = enumerate_flags(4).collect();
        let set: HashSet<&Flag> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for f in &all {
            for w in f.chain.windows(2) {
                assert!(w[0] & !w[1] == 0 && w[0] != w[1]);
            }
        }
        assert_eq!(all[0], Flag { chain: vec![] });
        assert_eq!(
            all[1],
            Flag {
                chain: vec![0b1111]
            }
        );
    }
}
