//! Labelled trees via Prüfer sequences, and canonical forms for free trees.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::RoleTree;

/// Decodes a Prüfer sequence over `0..k` into the `k - 1` edges of a
/// labelled tree on `k` vertices. Each edge is `(min, max)`.
pub fn decode(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, k.max(2));
    if k < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(k - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((a, b));
    edges
}

/// Every labelled tree on `k` vertices, in lexicographic Prüfer order.
/// There are `k^(k-2)` of them (one for `k <= 2`).
pub fn labelled_trees(k: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let len = k.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let edges = decode(&seq, k);
        // odometer increment
        let mut i = len;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < k {
                break;
            }
            seq[i] = 0;
        }
        Some(edges)
    })
}

fn adjacency(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Centre vertices (one or two) of a tree given as adjacency lists.
fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    let mut out: Vec<usize> = (0..n).filter(|&v| degree[v] > 0).collect();
    out.sort_unstable();
    out
}

fn encode_rooted(adj: &[Vec<usize>], root: usize, mark: Option<usize>) -> Vec<u8> {
    // iterative post-order to avoid deep recursion on long paths
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut code: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut kids: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut kids[v]);
        children.sort_unstable();
        let mut c = vec![if mark == Some(v) { b'[' } else { b'(' }];
        for ch in children {
            c.extend(ch);
        }
        c.push(if mark == Some(v) { b']' } else { b')' });
        if v != root {
            kids[parent[v]].push(c);
        } else {
            code[v] = c;
        }
    }
    std::mem::take(&mut code[root])
}

/// Canonical string of a free tree with an optional marked vertex: equal
/// strings iff the (marked) trees are isomorphic.
pub fn canonical_form(k: usize, edges: &[(usize, usize)], mark: Option<usize>) -> Vec<u8> {
    let adj = adjacency(k, edges);
    if k == 0 {
        return Vec::new();
    }
    centres(&adj)
        .into_iter()
        .map(|c| encode_rooted(&adj, c, mark))
        .min()
        .unwrap()
}

/// One representative per isomorphism class of trees on `n` vertices: the
/// first labelled tree of the class in Prüfer order.
pub fn unlabelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = HashSet::new();
    labelled_trees(n)
        .filter(|edges| seen.insert(canonical_form(n, edges, None)))
        .collect()
}

/// Role trees on `k` colours with isomorphic duplicates removed, keeping
/// the first occurrence in [`super::enumerate_role_trees`] order. Cached
/// per `k`.
pub fn distinct_role_trees(k: usize) -> Arc<Vec<RoleTree>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<RoleTree>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&k) {
        return hit.clone();
    }
    let built = Arc::new(build_distinct(k));
    cache.lock().unwrap().entry(k).or_insert(built).clone()
}

fn build_distinct(k: usize) -> Vec<RoleTree> {
    let mut out = Vec::new();
    let mut seen_shapes = HashSet::new();
    for edges in labelled_trees(k) {
        if !seen_shapes.insert(canonical_form(k, &edges, None)) {
            continue;
        }
        // loop placements are compared up to automorphisms of this tree
        let mut seen_marks = HashSet::new();
        let to_role = |e: &[(usize, usize)], l: Option<usize>| RoleTree {
            k,
            edges: e.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
            loop_at: l.map(|c| c + 1),
        };
        out.push(to_role(&edges, None));
        for c in 0..k {
            if seen_marks.insert(canonical_form(k, &edges, Some(c))) {
                out.push(to_role(&edges, Some(c)));
            }
        }
    }
    out
}
