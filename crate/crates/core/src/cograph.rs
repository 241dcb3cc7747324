//! Cotrees and constructive role colourings of cographs.
//!
//! Every cograph on at least `k >= 2` vertices has a `k`-role-colouring.
//! The 2-colour construction follows a case split on the top join; larger
//! `k` splits the top union/join into two blocks, colours each block with
//! its own palette, and recurses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::role::{self, RoleColouring};

/// Canonical n-ary cotree. Internal nodes have at least two children, a
/// union never has a union child and a join never has a join child.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoTree {
    Leaf(usize),
    Union(Vec<CoTree>),
    Join(Vec<CoTree>),
}

impl CoTree {
    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            CoTree::Leaf(v) => out.push(*v),
            CoTree::Union(ch) | CoTree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            CoTree::Leaf(_) => 1,
            CoTree::Union(ch) | CoTree::Join(ch) => ch.iter().map(CoTree::size).sum(),
        }
    }

    /// Edges produced by evaluating the unions and joins.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if let CoTree::Union(ch) | CoTree::Join(ch) = self {
            for c in ch {
                out.extend(c.edges());
            }
            if let CoTree::Join(ch) = self {
                let parts: Vec<Vec<usize>> = ch.iter().map(CoTree::leaves).collect();
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        for &u in &parts[i] {
                            for &v in &parts[j] {
                                out.push((u.min(v), u.max(v)));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Graph on `0..n` obtained by evaluating the tree; `n` must cover every leaf.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        Graph::new(n, &self.edges())
    }

    /// No union under a union, no join under a join, internal nodes have
    /// at least two children.
    pub fn is_canonical(&self) -> bool {
        match self {
            CoTree::Leaf(_) => true,
            CoTree::Union(ch) => ch.len() >= 2 && ch.iter().all(|c| !matches!(c, CoTree::Union(_)) && c.is_canonical()),
            CoTree::Join(ch) => ch.len() >= 2 && ch.iter().all(|c| !matches!(c, CoTree::Join(_)) && c.is_canonical()),
        }
    }
}

/// Canonical cotree of `g`, or `None` if `g` has an induced P4.
///
/// Disconnected graphs become a union of their components, graphs with a
/// disconnected complement a join of their co-components; a graph on two
/// or more vertices that is connected with connected complement is not a
/// cograph.
pub fn build_cotree(g: &Graph) -> Option<CoTree> {
    let all: Vec<usize> = (0..g.n()).collect();
    build_on(g, &all)
}

fn build_on(g: &Graph, vs: &[usize]) -> Option<CoTree> {
    if vs.len() == 1 {
        return Some(CoTree::Leaf(vs[0]));
    }
    let sub = g.induced(vs);
    let comps = sub.connected_components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build_on(g, &c.iter().map(|&i| vs[i]).collect::<Vec<_>>()))
            .collect::<Option<Vec<_>>>()?;
        return Some(CoTree::Union(children));
    }
    let co = sub.complement().connected_components();
    if co.len() > 1 {
        let children = co
            .iter()
            .map(|c| build_on(g, &c.iter().map(|&i| vs[i]).collect::<Vec<_>>()))
            .collect::<Option<Vec<_>>>()?;
        return Some(CoTree::Join(children));
    }
    None
}

/// A cotree node, or a block of consecutive children of one node treated
/// as a single union/join.
#[derive(Clone, Copy, Debug)]
enum View<'a> {
    Leaf(usize),
    Union(&'a [CoTree]),
    Join(&'a [CoTree]),
}

impl<'a> View<'a> {
    fn of(t: &'a CoTree) -> Self {
        match t {
            CoTree::Leaf(v) => View::Leaf(*v),
            CoTree::Union(ch) => View::Union(ch),
            CoTree::Join(ch) => View::Join(ch),
        }
    }

    /// Children `range` of this view's node as a view of their own.
    fn block(children: &'a [CoTree], join: bool) -> Self {
        match (children, join) {
            ([only], _) => View::of(only),
            (_, true) => View::Join(children),
            (_, false) => View::Union(children),
        }
    }

    fn leaves(&self) -> Vec<usize> {
        match self {
            View::Leaf(v) => vec![*v],
            View::Union(ch) | View::Join(ch) => ch.iter().flat_map(CoTree::leaves).collect(),
        }
    }

    fn size(&self) -> usize {
        match self {
            View::Leaf(_) => 1,
            View::Union(ch) | View::Join(ch) => ch.iter().map(CoTree::size).sum(),
        }
    }

    /// A single colour works iff the graph has no isolated vertex or no
    /// edge at all.
    fn one_colourable(&self) -> bool {
        match self {
            View::Leaf(_) | View::Join(_) => true,
            View::Union(ch) => {
                let leaves = ch.iter().filter(|c| matches!(c, CoTree::Leaf(_))).count();
                leaves == 0 || leaves == ch.len()
            }
        }
    }

    fn has_edge(&self) -> bool {
        match self {
            View::Leaf(_) => false,
            View::Join(_) => true,
            View::Union(ch) => ch.iter().any(|c| !matches!(c, CoTree::Leaf(_))),
        }
    }

    fn lowest_k(&self) -> usize {
        if self.one_colourable() {
            1
        } else {
            2
        }
    }
}

fn paint(view: View<'_>, colour: usize, out: &mut [usize]) {
    for v in view.leaves() {
        out[v] = colour;
    }
}

/// Greedy maximal independent set of the subgraph induced on `vs`,
/// taking high-degree vertices first so a dominating vertex is chosen
/// alone when there is one.
fn maximal_independent_set(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let inside = |v: usize| vs.contains(&v);
    let mut order = vs.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbours(v).iter().filter(|&&w| inside(w)).count()), v));
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// 2-role-colouring of a cograph view with at least two vertices.
fn two_colour(g: &Graph, view: View<'_>, red: usize, blue: usize, out: &mut [usize]) {
    match view {
        View::Leaf(_) => unreachable!("two_colour needs two vertices"),
        View::Union(ch) => {
            let isolated: Vec<&CoTree> = ch.iter().filter(|c| matches!(c, CoTree::Leaf(_))).collect();
            let big: Vec<&CoTree> = ch.iter().filter(|c| !matches!(c, CoTree::Leaf(_))).collect();
            if !isolated.is_empty() && !big.is_empty() {
                // the two component types must not share a colour
                isolated.iter().for_each(|c| paint(View::of(c), red, out));
                big.iter().for_each(|c| paint(View::of(c), blue, out));
            } else {
                paint(View::of(&ch[0]), red, out);
                ch[1..].iter().for_each(|c| paint(View::of(c), blue, out));
            }
        }
        View::Join(ch) => {
            // put a single-vertex side first when there is one
            let pivot = ch.iter().position(|c| matches!(c, CoTree::Leaf(_))).unwrap_or(0);
            let rest: Vec<CoTree> = ch
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pivot)
                .map(|(_, c)| c.clone())
                .collect();
            let first = View::of(&ch[pivot]);
            let second = View::block(&rest, true);
            match (first.size(), second.size()) {
                (1, 1) => {
                    paint(first, red, out);
                    paint(second, blue, out);
                }
                (1, _) if second.one_colourable() => {
                    paint(first, red, out);
                    paint(second, blue, out);
                }
                (1, _) => {
                    // second is disconnected with isolated vertices and larger components
                    paint(first, red, out);
                    let View::Union(parts) = second else { unreachable!("non-1-colourable view is a union") };
                    for part in parts {
                        match part {
                            CoTree::Leaf(v) => out[*v] = blue,
                            comp => {
                                let vs = comp.leaves();
                                let mis = maximal_independent_set(g, &vs);
                                for v in vs {
                                    out[v] = if mis.contains(&v) { blue } else { red };
                                }
                            }
                        }
                    }
                }
                _ => {
                    two_colour(g, first, red, blue, out);
                    two_colour(g, second, red, blue, out);
                }
            }
        }
    }
}

/// How [`k_role_colour`] coloured the top of the cotree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TopSplit {
    Monochromatic,
    TwoRole,
    /// The two blocks got disjoint palettes.
    Disjoint { left: Vec<usize>, right: Vec<usize> },
    /// Binary join of two sides with no 1-role-colouring, at `k = 3`: each
    /// side gets a private colour on a maximal independent set and shares
    /// the third colour.
    SharedIndependentSets,
}

fn k_colour(g: &Graph, view: View<'_>, palette: &[usize], out: &mut [usize]) -> Result<TopSplit> {
    let k = palette.len();
    let n = view.size();
    debug_assert!(k >= view.lowest_k() && k <= n);
    if k == 1 {
        paint(view, palette[0], out);
        return Ok(TopSplit::Monochromatic);
    }
    if k == 2 {
        two_colour(g, view, palette[0], palette[1], out);
        return Ok(TopSplit::TwoRole);
    }
    let (children, join) = match view {
        View::Union(ch) => (ch, false),
        View::Join(ch) => (ch, true),
        View::Leaf(_) => unreachable!("k >= 3 needs at least three vertices"),
    };
    for cut in 1..children.len() {
        let left = View::block(&children[..cut], join);
        let right = View::block(&children[cut..], join);
        let (n1, n2) = (left.size(), right.size());
        let lo = left.lowest_k().max(k.saturating_sub(n2));
        let hi = n1.min(k - right.lowest_k());
        if lo <= hi {
            k_colour(g, left, &palette[..lo], out)?;
            k_colour(g, right, &palette[lo..], out)?;
            return Ok(TopSplit::Disjoint { left: left.leaves(), right: right.leaves() });
        }
    }
    if join && children.len() == 2 && k == 3 && View::of(&children[0]).has_edge() && View::of(&children[1]).has_edge() {
        let (a, shared, b) = (palette[0], palette[1], palette[2]);
        for (side, own) in [(&children[0], a), (&children[1], b)] {
            let vs = side.leaves();
            let mis = maximal_independent_set(g, &vs);
            for v in vs {
                out[v] = if mis.contains(&v) { own } else { shared };
            }
        }
        return Ok(TopSplit::SharedIndependentSets);
    }
    Err(Error::Internal(format!("no admissible split for k = {k} on a {n}-vertex cograph")))
}

fn require_cotree(g: &Graph) -> Result<CoTree> {
    build_cotree(g).ok_or(Error::NotACograph)
}

/// 2-role-colouring of a cograph with at least two vertices; colour 1 plays
/// "red" and colour 2 "blue".
pub fn two_role_colour(g: &Graph) -> Result<RoleColouring> {
    let tree = require_cotree(g)?;
    if g.n() < 2 {
        return Err(Error::KOutOfRange { k: 2, n: g.n() });
    }
    let mut out = vec![0; g.n()];
    two_colour(g, View::of(&tree), 1, 2, &mut out);
    finish(g, 2, out)
}

fn finish(g: &Graph, k: usize, colours: Vec<usize>) -> Result<RoleColouring> {
    let rc = RoleColouring { k, colours };
    if !role::validate(g, &rc)? {
        return Err(Error::Internal("cograph construction produced an invalid colouring".into()));
    }
    Ok(rc)
}

/// `k`-role-colouring of a cograph together with how the top level was split.
pub fn k_role_colour_traced(g: &Graph, k: usize) -> Result<(RoleColouring, TopSplit)> {
    let tree = require_cotree(g)?;
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let view = View::of(&tree);
    if k == 1 && !view.one_colourable() {
        return Err(Error::Infeasible("a graph with both isolated vertices and edges has no 1-role-colouring".into()));
    }
    let palette: Vec<usize> = (1..=k).collect();
    let mut out = vec![0; n];
    let split = k_colour(g, view, &palette, &mut out)?;
    Ok((finish(g, k, out)?, split))
}

/// `k`-role-colouring of a cograph for any `2 <= k <= n`; `k = 1` works
/// exactly when the graph has no isolated vertex or no edge.
pub fn k_role_colour(g: &Graph, k: usize) -> Result<RoleColouring> {
    k_role_colour_traced(g, k).map(|(rc, _)| rc)
}

/// Decision and search for cographs: `None` only for `k = 1` on a graph
/// mixing isolated vertices and edges.
pub fn solve_cograph(g: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    match k_role_colour(g, k) {
        Ok(rc) => Ok(Some(rc)),
        Err(Error::Infeasible(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
