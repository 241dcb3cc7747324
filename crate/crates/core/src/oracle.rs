//! Exhaustive role-colouring search over set partitions.
//!
//! Partitions are visited as restricted growth strings in lexicographic
//! order, so "the first valid colouring" is well defined and reproducible.
//! [`solve_exact`] prunes partial assignments that can no longer complete to
//! a role colouring; pruning never changes which partition is reported.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::role::{self, RoleColouring};

/// Vertex count above which exhaustive search is considered impractical.
pub const PRACTICAL_LIMIT: usize = 13;

/// Hard limit: colour sets are tracked as 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Stirling number of the second kind S(n, k).
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Iterator over the partitions of `{0..n}` into exactly `k` non-empty
/// blocks, as restricted growth strings in lexicographic order.
#[derive(Clone, Debug)]
pub struct PartitionIterator {
    n: usize,
    k: usize,
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartitionIterator {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        // smallest string: zeros, then 1, 2, ..., k-1 packed at the end
        let mut rgs = vec![0; n - k + 1];
        rgs.extend(1..k);
        Ok(PartitionIterator { n, k, rgs, started: false, done: false })
    }

    fn advance(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        // prefix maxima
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i]);
        }
        for i in (1..n).rev() {
            let bound = prefix_max[i - 1] + 1;
            let next = self.rgs[i] + 1;
            if next > bound || next >= k {
                continue;
            }
            let used = prefix_max[i - 1].max(next) + 1;
            let remaining = n - 1 - i;
            if remaining < k - used {
                continue;
            }
            self.rgs[i] = next;
            let zeros = remaining - (k - used);
            for j in 0..zeros {
                self.rgs[i + 1 + j] = 0;
            }
            for (off, c) in (used..k).enumerate() {
                self.rgs[i + 1 + zeros + off] = c;
            }
            return true;
        }
        false
    }
}

impl Iterator for PartitionIterator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.rgs.clone())
    }
}

/// Convenience constructor matching the module's vocabulary.
pub fn enumerate_k_partitions(n: usize, k: usize) -> Result<PartitionIterator> {
    PartitionIterator::new(n, k)
}

/// Backtracking state for [`solve_exact`].
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// colours already present among assigned neighbours
    seen: Vec<u64>,
    /// neighbours not yet assigned
    open: Vec<usize>,
}

impl Search<'_> {
    /// Every assigned vertex must still be able to see every colour that a
    /// classmate already sees, given how many neighbours it has left.
    fn consistent(&self, assigned: usize) -> bool {
        let mut union = vec![0u64; self.k];
        for v in 0..assigned {
            union[self.colour[v]] |= self.seen[v];
        }
        (0..assigned).all(|v| {
            let missing = (union[self.colour[v]] & !self.seen[v]).count_ones() as usize;
            missing <= self.open[v]
        })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for &w in self.g.neighbours(v) {
            self.open[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        for &w in self.g.neighbours(v) {
            self.open[w] += 1;
        }
    }

    fn recompute_seen(&mut self, assigned: usize) {
        for v in 0..self.g.n() {
            self.seen[v] = self
                .g
                .neighbours(v)
                .iter()
                .filter(|&&w| w < assigned)
                .fold(0, |acc, &w| acc | (1u64 << self.colour[w]));
        }
    }

    fn dfs(&mut self, i: usize, used: usize) -> bool {
        let n = self.g.n();
        if i == n {
            return used == self.k;
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            let new_used = used.max(c + 1);
            if n - i - 1 < self.k - new_used {
                continue;
            }
            self.assign(i, c);
            // incremental update of neighbour colour masks
            let saved: Vec<(usize, u64)> = self.g.neighbours(i).iter().map(|&w| (w, self.seen[w])).collect();
            for &w in self.g.neighbours(i) {
                self.seen[w] |= 1u64 << c;
            }
            if self.consistent(i + 1) && self.dfs(i + 1, new_used) {
                return true;
            }
            for (w, s) in saved {
                self.seen[w] = s;
            }
            self.unassign(i);
        }
        false
    }
}

/// First role colouring of `g` with exactly `k` colours in restricted growth
/// string order, or `None` when there is none.
pub fn solve_exact(g: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the oracle maximum of {MAX_VERTICES}")));
    }
    let mut search = Search {
        g,
        k,
        colour: vec![0; n],
        seen: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
    };
    search.recompute_seen(0);
    if !search.dfs(0, 0) {
        return Ok(None);
    }
    let rc = RoleColouring::from_classes(&search.colour);
    debug_assert!(role::validate(g, &rc).unwrap_or(false));
    Ok(Some(rc))
}

/// All `k` for which `g` has a `k`-role-colouring.
pub fn solvable_k_set(g: &Graph) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=g.n() {
        if solve_exact(g, k)?.is_some() {
            out.push(k);
        }
    }
    Ok(out)
}
