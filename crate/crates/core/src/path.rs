//! Closed-form role colouring of paths.
//!
//! The role graph of a coloured path is itself a path on the `k` colours,
//! possibly with one self-loop on a leaf. Walking the coloured path from one
//! end to the other traces a walk in the role graph between degree-one
//! colours, which pins the admissible lengths to two arithmetic families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::role::RoleColouring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathFamily {
    /// Role graph is a plain path: `n = k + s(k-1)`.
    NoLoop,
    /// Role graph is a path with a loop on the leaf `k`: `n = 2k + s(2k-1)`.
    LeafLoop,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub family: PathFamily,
    pub s: usize,
    pub colouring: RoleColouring,
}

fn check(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(())
}

/// Repetition count `s >= 0` with `n = base + s * step`, if any.
fn repetitions(n: usize, base: usize, step: usize) -> Option<usize> {
    if n < base {
        return None;
    }
    match step {
        0 => (n == base).then_some(0),
        _ => (n - base).is_multiple_of(step).then_some((n - base) / step),
    }
}

fn family_of(n: usize, k: usize) -> Option<(PathFamily, usize)> {
    // when both fit (k = 2, n = 4 + 3s) the looped walk is reported
    repetitions(n, 2 * k, 2 * k - 1)
        .map(|s| (PathFamily::LeafLoop, s))
        .or_else(|| repetitions(n, k, k - 1).map(|s| (PathFamily::NoLoop, s)))
}

/// Whether the path on `n` vertices has a `k`-role-colouring.
pub fn path_k_colourable(n: usize, k: usize) -> Result<bool> {
    check(n, k)?;
    Ok(family_of(n, k).is_some())
}

/// A `k`-role-colouring of the path `0 - 1 - ... - n-1`, if one exists.
///
/// `NoLoop` sweeps `1..k` and reflects back; `LeafLoop` repeats `k` at the
/// looped end before turning.
pub fn colour_path(n: usize, k: usize) -> Result<Option<PathWitness>> {
    check(n, k)?;
    let Some((family, s)) = family_of(n, k) else {
        return Ok(None);
    };
    // one period of the walk, starting at colour 1
    let period: Vec<usize> = match family {
        PathFamily::NoLoop if k == 1 => vec![1],
        PathFamily::NoLoop => (1..=k).chain((2..k).rev()).collect(),
        PathFamily::LeafLoop => (1..=k).chain((2..=k).rev()).collect(),
    };
    let colours = (0..n).map(|p| period[p % period.len()]).collect();
    Ok(Some(PathWitness { family, s, colouring: RoleColouring { k, colours } }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::role::{role_graph, validate};

    #[test]
    fn decisions() {
        assert!(path_k_colourable(5, 2).unwrap());
        assert!(!path_k_colourable(6, 4).unwrap());
        assert!(path_k_colourable(4, 2).unwrap());
        for k in 1..=9 {
            assert!(path_k_colourable(k, k).unwrap());
        }
        assert!(path_k_colourable(1, 1).unwrap());
        assert!(path_k_colourable(2, 1).unwrap());
        assert!(path_k_colourable(3, 2).is_ok());
        assert!(path_k_colourable(2, 3).is_err());
    }

    #[test]
    fn witnesses() {
        let w = colour_path(5, 2).unwrap().unwrap();
        assert_eq!(w.colouring.colours, vec![1, 2, 1, 2, 1]);
        assert_eq!((w.family, w.s), (PathFamily::NoLoop, 3));

        let w = colour_path(4, 2).unwrap().unwrap();
        assert_eq!(w.colouring.colours, vec![1, 2, 2, 1]);
        assert_eq!(w.family, PathFamily::LeafLoop);

        let w = colour_path(3, 3).unwrap().unwrap();
        assert_eq!(w.colouring.colours, vec![1, 2, 3]);

        assert_eq!(colour_path(6, 4).unwrap(), None);
    }

    #[test]
    fn witnesses_validate_and_have_path_role_graphs() {
        for n in 1..=20 {
            for k in 1..=n {
                let Some(w) = colour_path(n, k).unwrap() else { continue };
                let g = Graph::path(n).unwrap();
                assert!(validate(&g, &w.colouring).unwrap(), "n={n} k={k}");
                let r = role_graph(&g, &w.colouring).unwrap();
                assert!(r.is_path_ignoring_loops());
                assert!(r.loops.len() <= 1);
                if let Some(&c) = r.loops.iter().next() {
                    assert!(r.edge_degree(c) <= 1, "loop must sit on a leaf");
                }
                match w.family {
                    PathFamily::NoLoop => assert_eq!(n, k + w.s * (k - 1)),
                    PathFamily::LeafLoop => assert_eq!(n, 2 * k + w.s * (2 * k - 1)),
                }
            }
        }
    }
}
