//! Method dispatch shared by the library entry point and the CLI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::role::RoleColouring;
use crate::{cograph, oracle, path, tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// Structured solver by graph class, brute force for general graphs.
    Auto,
    Brute,
    Path,
    Tree,
    Cograph,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Method::Auto,
            "brute" => Method::Brute,
            "path" => Method::Path,
            "tree" => Method::Tree,
            "cograph" => Method::Cograph,
            other => return Err(Error::Formula(format!("unknown method {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    /// The concrete method that ran (never `Auto`).
    pub method: Method,
    pub colouring: Option<RoleColouring>,
}

/// Vertices of a path graph from one end to the other (the end with the
/// smaller id first).
pub fn path_order(g: &Graph) -> Option<Vec<usize>> {
    if !g.classify().is_path {
        return None;
    }
    let start = (0..g.n()).find(|&v| g.degree(v) <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbours(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

fn solve_path_graph(g: &Graph, k: usize) -> Result<Option<RoleColouring>> {
    let order = path_order(g).ok_or_else(|| Error::Formula("graph is not a path".into()))?;
    Ok(path::colour_path(g.n(), k)?.map(|w| {
        let mut colours = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            colours[v] = w.colouring.colours[i];
        }
        RoleColouring { k, colours }
    }))
}

/// Solves `k`-role colouring with the requested method. `brute_limit` caps
/// the vertex count for exhaustive search.
pub fn solve(g: &Graph, k: usize, method: Method, brute_limit: usize) -> Result<Solution> {
    if k == 0 || k > g.n() {
        return Err(Error::KOutOfRange { k, n: g.n() });
    }
    let method = match method {
        Method::Auto => match g.classify().kind {
            GraphKind::Path => Method::Path,
            GraphKind::Tree => Method::Tree,
            GraphKind::Cograph => Method::Cograph,
            GraphKind::General => Method::Brute,
        },
        m => m,
    };
    let colouring = match method {
        Method::Brute => {
            if g.n() > brute_limit {
                return Err(Error::TooLarge(format!(
                    "{} vertices exceed the brute-force limit {brute_limit}; raise ROLECOL_ORACLE_LIMIT to force it",
                    g.n()
                )));
            }
            oracle::solve_exact(g, k)?
        }
        Method::Path => solve_path_graph(g, k)?,
        Method::Tree => tree::solve_tree(g, k)?,
        Method::Cograph => cograph::solve_cograph(g, k)?,
        Method::Auto => unreachable!("resolved above"),
    };
    Ok(Solution { method, colouring })
}
