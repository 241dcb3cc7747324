//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph with sorted adjacency lists.
///
/// Vertices are the ids `0..n`. There are no self-loops or parallel edges,
/// adjacency is symmetric, and every neighbour list is sorted ascending.
/// A `Graph` always has at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The path on `n` vertices `0 - 1 - ... - n-1` (that is, P_{n-1}).
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    /// Star K_{1,leaves} with centre 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adj = Vec::with_capacity(a + b);
        for list in &self.adj {
            let mut l = list.clone();
            l.extend(a..a + b);
            adj.push(l);
        }
        for list in &other.adj {
            let mut l: Vec<usize> = (0..a).collect();
            l.extend(list.iter().map(|&v| v + a));
            adj.push(l);
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.peek().is_some_and(|&&w| w < v) {
                            it.next();
                        }
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Subgraph induced on `vertices` (which must be distinct and in range),
    /// relabelled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph { adj }
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n() && self.is_connected()
    }

    /// Whether some four vertices induce a P4. Brute force over 4-subsets.
    pub fn has_induced_p4(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let vs = [a, b, c, d];
                        let mut degs = [0usize; 4];
                        let mut m = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if self.has_edge(vs[i], vs[j]) {
                                    degs[i] += 1;
                                    degs[j] += 1;
                                    m += 1;
                                }
                            }
                        }
                        degs.sort_unstable();
                        // three edges with degree sequence 1,1,2,2 is exactly P4
                        if m == 3 && degs == [1, 1, 2, 2] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Whether `vs` is a dangling path: it induces a path in the given
    /// order, its first vertex has degree 1 in the whole graph and its
    /// interior vertices have degree 2.
    pub fn is_dangling_path(&self, vs: &[usize]) -> bool {
        if vs.is_empty() || vs.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if self.degree(vs[0]) != 1 {
            return false;
        }
        if vs[1..vs.len().saturating_sub(1)].iter().any(|&v| self.degree(v) != 2) {
            return false;
        }
        // induced path: consecutive vertices adjacent, no chords
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Structural classification.
    pub fn classify(&self) -> GraphClass {
        let connected = self.is_connected();
        let is_tree = connected && self.m() + 1 == self.n();
        let is_path = is_tree && self.max_degree() <= 2;
        let is_cograph = crate::cograph::build_cotree(self).is_some();
        let kind = if is_path {
            GraphKind::Path
        } else if is_tree {
            GraphKind::Tree
        } else if is_cograph {
            GraphKind::Cograph
        } else {
            GraphKind::General
        };
        GraphClass {
            kind,
            is_path,
            is_tree,
            is_cograph,
            connected,
            has_isolated_vertex: self.has_isolated_vertex(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Most specific structural class; see [`GraphClass`] for the full flag set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    Path,
    Tree,
    Cograph,
    General,
}

/// Result of [`Graph::classify`]. A graph can be both a tree and a cograph
/// (stars); `kind` reports the first matching class in the order
/// path, tree, cograph, general.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub kind: GraphKind,
    pub is_path: bool,
    pub is_tree: bool,
    pub is_cograph: bool,
    pub connected: bool,
    pub has_isolated_vertex: bool,
}
