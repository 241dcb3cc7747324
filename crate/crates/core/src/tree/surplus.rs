use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{check_tree, rooted};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::role::{self, RoleColouring};

/// Split of a tree into gadgets (maximal pendant subtrees with at most
/// `2k' + 1` vertices), hubs (non-gadget vertices adjacent to a gadget) and
/// the remaining free vertices.
///
/// When the whole tree has at most `2k' + 1` vertices it forms a single
/// gadget and there are no hubs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HubGadgetDecomposition {
    pub surplus: usize,
    /// Each gadget sorted; gadgets listed by smallest vertex.
    pub gadgets: Vec<Vec<usize>>,
    pub hubs: Vec<usize>,
    pub free_vertices: Vec<usize>,
    /// For each gadget, the hub it hangs from (`None` for the whole-tree gadget).
    pub attachment: Vec<Option<usize>>,
}

/// Vertex minimizing the largest branch; smallest id on ties.
fn centroid(t: &Graph) -> usize {
    let (order, parent) = rooted(t, 0);
    let n = t.n();
    let mut size = vec![1usize; n];
    for &v in order[1..].iter().rev() {
        size[parent[v]] += size[v];
    }
    (0..n)
        .min_by_key(|&v| {
            let down = t
                .neighbours(v)
                .iter()
                .filter(|&&w| parent[w] == v)
                .map(|&w| size[w])
                .max()
                .unwrap_or(0);
            let up = n - size[v];
            (down.max(up), v)
        })
        .unwrap()
}

pub fn hub_gadget_decomposition(t: &Graph, surplus: usize) -> Result<HubGadgetDecomposition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if surplus == 0 {
        return Err(Error::Internal("gadget decomposition needs a positive surplus".into()));
    }
    let n = t.n();
    let limit = 2 * surplus + 1;
    if n <= limit {
        return Ok(HubGadgetDecomposition {
            surplus,
            gadgets: vec![(0..n).collect()],
            hubs: Vec::new(),
            free_vertices: Vec::new(),
            attachment: vec![None],
        });
    }
    // Rooted at a centroid, every pendant subtree containing the root has
    // at least n/2 vertices, so for n > 2*limit the admissible pendant
    // subtrees are exactly the subtrees below non-root vertices.
    let root = centroid(t);
    let (order, parent) = rooted(t, root);
    let mut size = vec![1usize; n];
    for &v in order[1..].iter().rev() {
        size[parent[v]] += size[v];
    }
    let mut in_gadget = vec![false; n];
    let mut gadgets = Vec::new();
    let mut attachment = Vec::new();
    for &v in &order[1..] {
        let p = parent[v];
        if in_gadget[v] || size[v] > limit || (p != root && size[p] <= limit) {
            continue;
        }
        let mut members = Vec::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            in_gadget[x] = true;
            members.push(x);
            stack.extend(t.neighbours(x).iter().copied().filter(|&y| y != parent[x]));
        }
        members.sort_unstable();
        gadgets.push(members);
        attachment.push(Some(p));
    }
    let mut paired: Vec<(Vec<usize>, Option<usize>)> = gadgets.into_iter().zip(attachment).collect();
    paired.sort();
    let (gadgets, attachment): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    let mut hubs: Vec<usize> = attachment.iter().flatten().copied().collect();
    hubs.sort_unstable();
    hubs.dedup();
    let free_vertices = (0..n).filter(|&v| !in_gadget[v] && hubs.binary_search(&v).is_err()).collect();
    Ok(HubGadgetDecomposition { surplus, gadgets, hubs, free_vertices, attachment })
}

/// Calls `visit` with each partition of `items` (as block ids) that merges
/// at most `budget` vertices into earlier blocks; stops when `visit`
/// returns `false`.
fn for_each_partition_within(items: usize, budget: usize, visit: &mut dyn FnMut(&[usize], usize) -> bool) {
    fn rec(
        i: usize,
        items: usize,
        blocks: usize,
        budget: usize,
        ids: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if i == items {
            return visit(ids, items - blocks);
        }
        if budget > 0 {
            for b in 0..blocks {
                ids.push(b);
                let go = rec(i + 1, items, blocks, budget - 1, ids, visit);
                ids.pop();
                if !go {
                    return false;
                }
            }
        }
        ids.push(blocks);
        let go = rec(i + 1, items, blocks + 1, budget, ids, visit);
        ids.pop();
        go
    }
    rec(0, items, 0, budget, &mut Vec::with_capacity(items), visit);
}

/// Duplicate count -> block ids of the first merge achieving it.
type MergePatterns = BTreeMap<usize, Vec<usize>>;

/// `k`-role colouring of a tree when `k' = n - k` is small.
///
/// Hubs and free vertices keep private colours; duplicated colours live in
/// the gadgets hanging off a single hub. For each hub every way of merging
/// at most `k'` of its gadget vertices is checked, recording which
/// duplicate counts are achievable; a subset-sum over hubs then looks for a
/// total of exactly `k'`. The assembled colouring is validated before it is
/// returned.
pub fn solve_tree_constant_surplus(t: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    check_tree(t, k)?;
    let n = t.n();
    let surplus = n - k;
    if surplus == 0 {
        return Ok(Some(RoleColouring::rainbow(n)));
    }
    let dec = hub_gadget_decomposition(t, surplus)?;
    if dec.hubs.is_empty() {
        // constant-size tree: exhaustive search
        return oracle::solve_exact(t, k);
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (gadget, hub) in dec.gadgets.iter().zip(&dec.attachment) {
        groups.entry(hub.expect("hubbed gadgets")).or_default().extend(gadget);
    }

    // per hub: first merge pattern found for each duplicate count 1..=surplus
    let mut options: Vec<(Vec<usize>, MergePatterns)> = Vec::new();
    for members in groups.values_mut() {
        members.sort_unstable();
        let mut found = MergePatterns::new();
        let mut colours: Vec<usize> = (0..n).collect();
        for_each_partition_within(members.len(), surplus, &mut |ids, dups| {
            if dups == 0 || found.contains_key(&dups) {
                return true;
            }
            for (&v, &b) in members.iter().zip(ids) {
                colours[v] = members[b_first(ids, b)];
            }
            let rc = RoleColouring::from_classes(&dense(&colours));
            if role::validate(t, &rc).unwrap_or(false) {
                found.insert(dups, ids.to_vec());
            }
            for &v in members.iter() {
                colours[v] = v;
            }
            found.len() < surplus
        });
        options.push((members.clone(), found));
    }

    // subset-sum over hubs, first solution in hub order
    let mut reach: Vec<Option<Vec<(usize, usize)>>> = vec![None; surplus + 1];
    reach[0] = Some(Vec::new());
    for (h, (_, found)) in options.iter().enumerate() {
        let mut next = reach.clone();
        for total in 0..=surplus {
            let Some(picks) = &reach[total] else { continue };
            for &d in found.keys() {
                if total + d <= surplus && next[total + d].is_none() {
                    let mut p = picks.clone();
                    p.push((h, d));
                    next[total + d] = Some(p);
                }
            }
        }
        reach = next;
    }
    let Some(picks) = &reach[surplus] else {
        return Ok(None);
    };
    let mut colours: Vec<usize> = (0..n).collect();
    for &(h, d) in picks {
        let (members, found) = &options[h];
        let ids = &found[&d];
        for (&v, &b) in members.iter().zip(ids) {
            colours[v] = members[b_first(ids, b)];
        }
    }
    let rc = RoleColouring::from_classes(&dense(&colours));
    if rc.k != k || !role::validate(t, &rc)? {
        return Err(Error::Internal("hub combination failed validation".into()));
    }
    Ok(Some(rc))
}

/// Position of the first item assigned to block `b`.
fn b_first(ids: &[usize], b: usize) -> usize {
    ids.iter().position(|&x| x == b).unwrap()
}

/// Relabels arbitrary representatives to restricted-growth class ids.
fn dense(reps: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    reps.iter()
        .map(|&r| {
            let next = map.len();
            *map.entry(r).or_insert(next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The tree from the hub illustration: hubs 0, 6, 9.
    fn hub_figure() -> Graph {
        // 0=A 1=B 2=C 3=D 4=E 5=F 6=H2 7=G 8=I 9=H3 10=J 11=K 12=L
        Graph::new(
            13,
            &[(0, 1), (0, 2), (0, 3), (2, 6), (3, 4), (3, 5), (6, 7), (6, 8), (8, 9), (9, 10), (10, 11), (9, 12)],
        )
        .unwrap()
    }

    #[test]
    fn figure_decomposition() {
        let d = hub_gadget_decomposition(&hub_figure(), 1).unwrap();
        assert_eq!(d.hubs, vec![0, 6, 9]);
        assert_eq!(d.gadgets, vec![vec![1], vec![3, 4, 5], vec![7], vec![10, 11], vec![12]]);
        assert_eq!(d.free_vertices, vec![2, 8]);
    }

    #[test]
    fn star_decomposition() {
        let d = hub_gadget_decomposition(&Graph::star(5).unwrap(), 1).unwrap();
        assert_eq!(d.hubs, vec![0]);
        assert_eq!(d.gadgets, (1..=5).map(|v| vec![v]).collect::<Vec<_>>());
        assert!(d.free_vertices.is_empty());
    }

    #[test]
    fn small_tree_is_one_gadget() {
        let d = hub_gadget_decomposition(&Graph::path(3).unwrap(), 1).unwrap();
        assert_eq!(d.gadgets, vec![vec![0, 1, 2]]);
        assert!(d.hubs.is_empty());
    }

    #[test]
    fn gadget_invariants_on_random_shapes() {
        for edges in crate::tree::prufer::labelled_trees(8).step_by(97) {
            let t = Graph::new(8, &edges).unwrap();
            for s in 1..=3 {
                let d = hub_gadget_decomposition(&t, s).unwrap();
                let mut all: Vec<usize> = d.gadgets.iter().flatten().copied().collect();
                let total = all.len();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), total, "gadgets overlap");
                for g in &d.gadgets {
                    assert!(g.len() <= 2 * s + 1 || d.hubs.is_empty());
                    let rest: Vec<usize> = (0..8).filter(|v| !g.contains(v)).collect();
                    if !rest.is_empty() {
                        assert!(t.induced(&rest).is_connected());
                    }
                }
            }
        }
    }

    #[test]
    fn surplus_examples() {
        let t = hub_figure();
        assert_eq!(solve_tree_constant_surplus(&t, 13).unwrap(), Some(RoleColouring::rainbow(13)));
        assert_eq!(solve_tree_constant_surplus(&Graph::path(5).unwrap(), 4).unwrap(), None);
        let star = Graph::star(3).unwrap();
        let rc = solve_tree_constant_surplus(&star, 2).unwrap().unwrap();
        assert_eq!(rc.colours, vec![1, 2, 2, 2]);
        // two leaves of the figure's rightmost hub can share a colour
        let rc = solve_tree_constant_surplus(&t, 12).unwrap().unwrap();
        assert!(role::validate(&t, &rc).unwrap());
    }
}
