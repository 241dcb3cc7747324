#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rolecol::cograph::{build_cotree, CoTree};
use rolecol::sat::CnfFormula;
use rolecol::Graph;

/// Every labelled graph on `n` vertices, by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// Isomorphism-invariant code of a cotree: children codes sorted.
pub fn cotree_code(t: &CoTree) -> String {
    match t {
        CoTree::Leaf(_) => "v".into(),
        CoTree::Union(ch) | CoTree::Join(ch) => {
            let mut codes: Vec<String> = ch.iter().map(cotree_code).collect();
            codes.sort();
            let tag = if matches!(t, CoTree::Union(_)) { 'U' } else { 'J' };
            format!("{tag}({})", codes.join(","))
        }
    }
}

/// One graph per isomorphism class of cographs on `n` vertices, built by
/// closing `{K1}` under disjoint union and join.
pub fn all_cographs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_size: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1).unwrap()]];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in 1..=n / 2 {
            for g in &by_size[a] {
                for h in &by_size[n - a] {
                    for candidate in [g.disjoint_union(h), g.join(h)] {
                        let code = cotree_code(&build_cotree(&candidate).expect("closure stays in the class"));
                        if seen.insert(code) {
                            out.push(candidate);
                        }
                    }
                }
            }
        }
        by_size.push(out);
    }
    by_size
}

/// Random canonical cotree on the given leaves: each internal node splits
/// its leaves into 2 to 4 random parts, alternating union and join.
pub fn random_cotree<R: Rng>(rng: &mut R, leaves: &mut [usize], join: bool) -> CoTree {
    if leaves.len() == 1 {
        return CoTree::Leaf(leaves[0]);
    }
    leaves.shuffle(rng);
    let parts = rng.gen_range(2..=leaves.len().min(4));
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(leaves.len());
    let children = cuts
        .windows(2)
        .map(|w| {
            let mut part = leaves[w[0]..w[1]].to_vec();
            random_cotree(rng, &mut part, !join)
        })
        .collect();
    if join {
        CoTree::Join(children)
    } else {
        CoTree::Union(children)
    }
}

/// Formulas with clauses of size at most 3 over `vars` variables, as
/// multisets of `1..=max_clauses` clauses, no variable twice in a clause.
pub fn small_formulas(vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let lits: Vec<i64> = (1..=vars as i64).flat_map(|v| [v, -v]).collect();
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for mask in 1u32..1 << lits.len() {
        let clause: Vec<i64> = lits.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &l)| l).collect();
        let mut vs: Vec<u64> = clause.iter().map(|l| l.unsigned_abs()).collect();
        vs.dedup();
        if clause.len() <= 3 && vs.len() == clause.len() {
            clauses.push(clause);
        }
    }
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(start: usize, left: usize, vars: usize, clauses: &[Vec<i64>], pick: &mut Vec<usize>, out: &mut Vec<CnfFormula>) {
        if !pick.is_empty() {
            let cs = pick.iter().map(|&i| clauses[i].clone()).collect();
            out.push(CnfFormula::new(vars, cs).unwrap());
        }
        if left == 0 {
            return;
        }
        for i in start..clauses.len() {
            pick.push(i);
            rec(i, left - 1, vars, clauses, pick, out);
            pick.pop();
        }
    }
    rec(0, max_clauses, vars, &clauses, &mut pick, &mut out);
    out
}
