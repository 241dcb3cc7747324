//! Role colourings, their validation, and the role (quotient) graph.
//!
//! A colouring is a role colouring when any two vertices of the same colour
//! see the same *set* of colours in their neighbourhoods. Colours are
//! `1..=k` and every colour must be used.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of colours `1..=k` to the vertices of a graph.
///
/// Serializes as `{"k": K, "colours": [c1, ..., cn]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RoleColouring {
    pub k: usize,
    pub colours: Vec<usize>,
}

impl RoleColouring {
    /// Checks that every entry lies in `1..=k`. Empty classes are allowed
    /// here; [`validate`] rejects them.
    pub fn new(k: usize, colours: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &colour)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColourOutOfRange { vertex, colour, k });
        }
        Ok(RoleColouring { k, colours })
    }

    /// From 0-based class ids (e.g. a restricted growth string); `k` is
    /// one more than the largest id.
    pub fn from_classes(classes: &[usize]) -> Self {
        let k = classes.iter().map(|&c| c + 1).max().unwrap_or(0);
        RoleColouring { k, colours: classes.iter().map(|&c| c + 1).collect() }
    }

    /// Every vertex its own colour.
    pub fn rainbow(n: usize) -> Self {
        RoleColouring { k: n, colours: (1..=n).collect() }
    }

    pub fn monochromatic(n: usize) -> Self {
        RoleColouring { k: 1, colours: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// Renumbers colours by order of first appearance, so vertex 0 gets
    /// colour 1, the next new colour gets 2, and so on.
    pub fn canonical(&self) -> Self {
        let mut map = vec![0usize; self.k + 1];
        let mut next = 0;
        let colours = self
            .colours
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect();
        RoleColouring { k: self.k, colours }
    }

    /// Colour classes, indexed by colour − 1.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: self.colours.len() });
        }
        if let Some((vertex, &colour)) = self.colours.iter().enumerate().find(|(_, &c)| c == 0 || c > self.k) {
            return Err(Error::ColourOutOfRange { vertex, colour, k: self.k });
        }
        Ok(())
    }
}

/// Sorted set of colours on the neighbours of `v`.
pub fn neighbour_colours(g: &Graph, rc: &RoleColouring, v: usize) -> Vec<usize> {
    let mut set: Vec<usize> = g.neighbours(v).iter().map(|&u| rc.colours[u]).collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// Whether `rc` is a role colouring of `g` with all `k` classes non-empty.
pub fn validate(g: &Graph, rc: &RoleColouring) -> Result<bool> {
    rc.check_shape(g)?;
    let mut seen: Vec<Option<Vec<usize>>> = vec![None; rc.k];
    for v in 0..g.n() {
        let set = neighbour_colours(g, rc, v);
        match &seen[rc.colours[v] - 1] {
            Some(first) if *first != set => return Ok(false),
            Some(_) => {}
            None => seen[rc.colours[v] - 1] = Some(set),
        }
    }
    Ok(seen.iter().all(Option::is_some))
}

/// Quotient of a graph by a valid role colouring. Colours are `1..=k`;
/// self-loops are kept apart from the ordinary edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RoleGraph {
    pub k: usize,
    /// Unordered pairs `(c, d)` with `c < d`.
    pub edges: BTreeSet<(usize, usize)>,
    pub loops: BTreeSet<usize>,
}

impl RoleGraph {
    /// Neighbourhood of colour `c`, including `c` itself when it carries a loop.
    pub fn neighbourhood(&self, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == c {
                    Some(b)
                } else if b == c {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        if self.loops.contains(&c) {
            out.push(c);
        }
        out.sort_unstable();
        out
    }

    /// Number of distinct neighbouring colours; a loop counts once.
    pub fn degree(&self, c: usize) -> usize {
        self.neighbourhood(c).len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.k).map(|c| self.degree(c)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.k).map(|c| self.degree(c)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.k == 0 {
            return true;
        }
        let mut seen = vec![false; self.k + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for d in self.neighbourhood(c) {
                if !seen[d] {
                    seen[d] = true;
                    count += 1;
                    stack.push(d);
                }
            }
        }
        count == self.k
    }

    /// Loop-free part is a tree on `1..=k`.
    pub fn is_tree_ignoring_loops(&self) -> bool {
        self.edges.len() + 1 == self.k && self.is_connected()
    }

    /// Loop-free part is a path on `1..=k`.
    pub fn is_path_ignoring_loops(&self) -> bool {
        self.is_tree_ignoring_loops()
            && (1..=self.k).all(|c| self.edges.iter().filter(|&&(a, b)| a == c || b == c).count() <= 2)
    }

    /// Ordinary (non-loop) degree of colour `c`.
    pub fn edge_degree(&self, c: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == c || b == c).count()
    }
}

/// Role graph of a valid colouring.
pub fn role_graph(g: &Graph, rc: &RoleColouring) -> Result<RoleGraph> {
    if !validate(g, rc)? {
        return Err(Error::InvalidColouring);
    }
    let mut edges = BTreeSet::new();
    let mut loops = BTreeSet::new();
    for (u, v) in g.edges() {
        let (c, d) = (rc.colours[u], rc.colours[v]);
        if c == d {
            loops.insert(c);
        } else {
            edges.insert((c.min(d), c.max(d)));
        }
    }
    Ok(RoleGraph { k: rc.k, edges, loops })
}

/// Degree bounds `Δ(R) <= Δ(G)`, `δ(R) <= δ(G)` and connectivity
/// inheritance from `g` to its role graph `r`.
pub fn role_graph_bounds_ok(g: &Graph, r: &RoleGraph) -> bool {
    r.max_degree() <= g.max_degree()
        && r.min_degree() <= g.min_degree()
        && (!g.is_connected() || r.is_connected())
}

/// Maximal dangling chains: for every degree-1 vertex, the walk from it
/// through degree-2 vertices, ending at the first vertex of another degree.
/// Every prefix of a chain is a dangling path.
pub fn dangling_chains(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for start in 0..g.n() {
        if g.degree(start) != 1 {
            continue;
        }
        let mut chain = vec![start];
        let mut prev = start;
        let mut cur = g.neighbours(start)[0];
        loop {
            chain.push(cur);
            if g.degree(cur) != 2 {
                break;
            }
            let next = g.neighbours(cur).iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        out.push(chain);
    }
    out
}

/// In a connected graph, every dangling path with at most `k` vertices is
/// rainbow under any valid `k`-role-colouring. Returns whether `rc`
/// satisfies that; vacuously true for disconnected graphs.
pub fn dangling_paths_rainbow(g: &Graph, rc: &RoleColouring) -> bool {
    if !g.is_connected() {
        return true;
    }
    dangling_chains(g).iter().all(|chain| {
        let prefix = &chain[..chain.len().min(rc.k)];
        let mut cols: Vec<usize> = prefix.iter().map(|&v| rc.colours[v]).collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len() == prefix.len()
    })
}

/// Tree path between `u` and `v` (inclusive), using parent pointers from `u`.
fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    parent[u] = u;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for &y in t.neighbours(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// For a tree colouring: every path whose two ends share a colour carries at
/// most `ceil(t/2)` distinct colours (`t` = number of vertices on the path).
///
/// The path traces a closed walk in the role graph, a tree with at most one
/// loop, and such a walk needs `2(d-1)` steps to visit `d` colours. Nothing
/// stronger holds in general: with a loop the colours need not read the same
/// backwards (`1,2,2,1,2,2,1` on a path), and the pieces beyond the two ends
/// need not share colour sets (`1,2,1,2,1,2`).
pub fn same_colour_paths_ok(t: &Graph, rc: &RoleColouring) -> bool {
    let n = t.n();
    for u in 0..n {
        for v in u + 1..n {
            if rc.colours[u] != rc.colours[v] {
                continue;
            }
            let path = tree_path(t, u, v);
            let cols: Vec<usize> = path.iter().map(|&x| rc.colours[x]).collect();
            let mut distinct = cols.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() > path.len().div_ceil(2) {
                return false;
            }
        }
    }
    true
}
