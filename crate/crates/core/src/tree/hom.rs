use super::{check_tree, prufer, rooted, RoleTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::role::RoleColouring;

const NO_PARENT: usize = usize::MAX;

struct HomDp<'a> {
    k: usize,
    nbr: Vec<u64>,
    children: Vec<Vec<usize>>,
    /// feasible[(v * k + c) * (k + 1) + p]; p == k means "v is the root"
    feasible: Vec<bool>,
    t: &'a Graph,
}

impl HomDp<'_> {
    fn idx(&self, v: usize, c: usize, p: usize) -> usize {
        let p = if p == NO_PARENT { self.k } else { p };
        (v * self.k + c) * (self.k + 1) + p
    }

    /// Colours for the children of `v` (coloured `c`, parent coloured `p`)
    /// such that children plus parent see exactly the role neighbourhood of
    /// `c`, or `None`.
    fn cover(&self, v: usize, c: usize, p: usize) -> Option<Vec<usize>> {
        let full = self.nbr[c];
        let mut required = full;
        if p != NO_PARENT {
            if full & (1 << p) == 0 {
                return None;
            }
            required &= !(1u64 << p);
        }
        let kids = &self.children[v];
        if required.count_ones() as usize > kids.len() || self.t.degree(v) < full.count_ones() as usize {
            return None;
        }
        let bits: Vec<usize> = (0..self.k).filter(|&d| required & (1 << d) != 0).collect();
        let width = 1usize << bits.len();
        let local = |d: usize| bits.iter().position(|&b| b == d).map_or(0, |i| 1usize << i);

        // back[i][mask] = (previous mask, colour given to child i)
        let mut back: Vec<Vec<Option<(usize, usize)>>> = Vec::with_capacity(kids.len());
        let mut reach = vec![false; width];
        reach[0] = true;
        for &u in kids {
            let options: Vec<usize> = (0..self.k)
                .filter(|&d| full & (1 << d) != 0 && self.feasible[self.idx(u, d, c)])
                .collect();
            if options.is_empty() {
                return None;
            }
            let mut layer = vec![None; width];
            let mut next = vec![false; width];
            for mask in (0..width).filter(|&m| reach[m]) {
                for &d in &options {
                    let m2 = mask | local(d);
                    if !next[m2] {
                        next[m2] = true;
                        layer[m2] = Some((mask, d));
                    }
                }
            }
            back.push(layer);
            reach = next;
        }
        if !reach[width - 1] {
            return None;
        }
        let mut out = vec![0; kids.len()];
        let mut mask = width - 1;
        for i in (0..kids.len()).rev() {
            let (prev, d) = back[i][mask].expect("reachable mask has a predecessor");
            out[i] = d;
            mask = prev;
        }
        Some(out)
    }
}

/// A colouring of tree `t` whose role graph is exactly `r` (a locally
/// surjective homomorphism onto `r`), or `None`.
///
/// Rooted DP over states (vertex, colour, parent colour); a state is
/// feasible when the children can be coloured so that their colours
/// together with the parent's cover the role neighbourhood of the colour.
pub fn locally_surjective_hom(t: &Graph, r: &RoleTree) -> Result<Option<RoleColouring>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let k = r.k;
    if k == 0 || k > 64 {
        return Err(Error::TooLarge(format!("role trees with {k} colours are not supported")));
    }
    let n = t.n();
    let (order, parent) = rooted(t, 0);
    let mut children = vec![Vec::new(); n];
    for &v in &order[1..] {
        children[parent[v]].push(v);
    }
    let mut dp = HomDp { k, nbr: r.neighbour_masks(), children, feasible: vec![false; n * k * (k + 1)], t };
    for &v in order.iter().rev() {
        for c in 0..k {
            for p in (0..k).chain([NO_PARENT]) {
                if v == 0 && p != NO_PARENT || v != 0 && p == NO_PARENT {
                    continue;
                }
                let ok = dp.cover(v, c, p).is_some();
                let i = dp.idx(v, c, p);
                dp.feasible[i] = ok;
            }
        }
    }
    let Some(root_colour) = (0..k).find(|&c| dp.feasible[dp.idx(0, c, NO_PARENT)]) else {
        return Ok(None);
    };
    let mut colour = vec![0usize; n];
    colour[0] = root_colour;
    for &v in &order {
        let p = if v == 0 { NO_PARENT } else { colour[parent[v]] };
        let picks = dp.cover(v, colour[v], p).expect("feasible state reconstructs");
        for (&u, &d) in dp.children[v].iter().zip(&picks) {
            colour[u] = d;
        }
    }
    let rc = RoleColouring { k, colours: colour.iter().map(|&c| c + 1).collect() };
    let mut used = vec![false; k];
    rc.colours.iter().for_each(|&c| used[c - 1] = true);
    Ok(used.iter().all(|&u| u).then_some(rc))
}

/// `k`-role colouring of a tree by trying every role tree on `k` colours
/// (isomorphic duplicates skipped) and returning the first that admits a
/// locally surjective homomorphism.
pub fn solve_tree_constant_k(t: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    check_tree(t, k)?;
    for r in prufer::distinct_role_trees(k).iter() {
        // a colour's role degree can never exceed the host's maximum degree
        if r.neighbour_masks().iter().any(|m| m.count_ones() as usize > t.max_degree()) {
            continue;
        }
        if let Some(rc) = locally_surjective_hom(t, r)? {
            return Ok(Some(rc));
        }
    }
    Ok(None)
}
