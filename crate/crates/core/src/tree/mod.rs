//! Role colouring of trees.
//!
//! Every role graph of a tree is a tree with at most one self-loop. With
//! `k` small, all such role trees are tried and each is tested by a
//! homomorphism DP ([`solve_tree_constant_k`]). With `n - k` small,
//! duplicate colours are confined to small pendant pieces around hub
//! vertices ([`solve_tree_constant_surplus`]).

mod hom;
pub mod prufer;
mod surplus;

pub use hom::{locally_surjective_hom, solve_tree_constant_k};
pub use surplus::{hub_gadget_decomposition, solve_tree_constant_surplus, HubGadgetDecomposition};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::role::RoleColouring;

/// Candidate role graph for a tree: a labelled tree on colours `1..=k`
/// plus at most one self-loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RoleTree {
    pub k: usize,
    pub edges: Vec<(usize, usize)>,
    pub loop_at: Option<usize>,
}

impl RoleTree {
    /// Neighbourhood of each colour as a bitmask over 0-based colours.
    pub(crate) fn neighbour_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k];
        for &(a, b) in &self.edges {
            masks[a - 1] |= 1 << (b - 1);
            masks[b - 1] |= 1 << (a - 1);
        }
        if let Some(c) = self.loop_at {
            masks[c - 1] |= 1 << (c - 1);
        }
        masks
    }
}

/// Every role tree on `k` colours: each labelled tree in Prüfer order,
/// crossed with the loop choices none, 1, ..., k. Yields `(k+1) k^(k-2)`
/// items; for `k = 1` that is the bare vertex and the looped vertex.
pub fn enumerate_role_trees(k: usize) -> impl Iterator<Item = RoleTree> {
    prufer::labelled_trees(k).flat_map(move |edges| {
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        std::iter::once(None)
            .chain((1..=k).map(Some))
            .map(move |loop_at| RoleTree { k, edges: edges.clone(), loop_at })
    })
}

/// Which tree algorithm [`solve_tree`] picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeStrategy {
    ConstantK,
    ConstantSurplus,
}

/// Picks the strategy by `min(k, n - k)`.
pub fn tree_strategy(n: usize, k: usize) -> TreeStrategy {
    if k <= n - k {
        TreeStrategy::ConstantK
    } else {
        TreeStrategy::ConstantSurplus
    }
}

/// Solves `k`-role colouring on a tree with whichever algorithm suits
/// `min(k, n - k)`.
pub fn solve_tree(t: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    check_tree(t, k)?;
    match tree_strategy(t.n(), k) {
        TreeStrategy::ConstantK => solve_tree_constant_k(t, k),
        TreeStrategy::ConstantSurplus => solve_tree_constant_surplus(t, k),
    }
}

pub(crate) fn check_tree(t: &Graph, k: usize) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if k == 0 || k > t.n() {
        return Err(Error::KOutOfRange { k, n: t.n() });
    }
    Ok(())
}

/// Rooted view of a tree: BFS order from `root` and parent pointers
/// (`parent[root] == root`).
pub(crate) fn rooted(t: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = root;
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbours(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    (order, parent)
}
